"""Search for a word g in R1..R7 with g(rho) = -rho.

Random words W are applied to rho and the image is reduced back to a unit
multiple of rho, by both the default and the basic reduction.  Whenever W followed by the reduction word sends rho to
-rho, its literal expansion is a candidate; the shortest one is printed in
the form used for MINUS_RHO_WORD.
"""

import argparse
import random

from eislat.gamma import random_word, reduce_null
from eislat.hermitian import RHO


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--max-length", type=int, default=8)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    target = tuple(-x for x in RHO.coords)
    best = None
    for _ in range(args.trials):
        w = random_word(rng, rng.randint(1, args.max_length))
        v = w.apply(RHO.coords)
        # the basic reduction ends on -rho more often than the default one
        for kw in ({}, {"powers": (1,), "extended": False}):
            cert = reduce_null(v, **kw)
            g = (w + cert.word).expand()
            if g.apply(RHO.coords) == target and (best is None or len(g) < len(best)):
                best = g
                print(f"found length {len(g)}")
    if best is None:
        print("no word found")
        return 1
    print(best.to_json())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
