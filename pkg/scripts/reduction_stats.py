"""Statistics of null-vector reduction on random word images of rho.

Compares the default reduction (all hexflection powers, extended height-1
roots) with the basic one (one hexflection power, simple roots), which needs
the orthogonal-root escape more often.
"""

import argparse
import random
import time
from collections import Counter

from eislat.gamma import random_word, reduce_null
from eislat.hermitian import RHO


def run(vectors, max_length, seed, **kw):
    rng = random.Random(seed)
    escapes = Counter()
    steps = []
    t = time.perf_counter()
    for _ in range(vectors):
        v = random_word(rng, rng.randint(1, max_length)).apply(RHO.coords)
        cert = reduce_null(v, **kw)
        assert cert.verify()
        escapes[cert.escapes()] += 1
        steps.append(len(cert.steps))
    return time.perf_counter() - t, escapes, sum(steps) / len(steps)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vectors", type=int, default=500)
    ap.add_argument("--max-length", type=int, default=30)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    for label, kw in (("default", {}), ("basic", {"powers": (1,), "extended": False})):
        dt, esc, mean_steps = run(args.vectors, args.max_length, args.seed, **kw)
        print(f"{label:8s} {dt:6.2f}s  escapes {dict(sorted(esc.items()))}  mean steps {mean_steps:.1f}")


if __name__ == "__main__":
    main()
