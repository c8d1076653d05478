"""Mirror counts per family for a range of root bounds."""

import argparse
from collections import Counter

from eislat.arrangement import family_of, mirrors


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bounds", type=int, nargs="+", default=[1, 3, 4])
    args = ap.parse_args()
    for b in args.bounds:
        ms = mirrors(b)
        c = Counter(family_of(m) for m in ms)
        sizes = sorted(Counter(c.values()).items())
        print(f"bound {b}: {len(ms)} mirrors, {len(c)} families, (size, how many) = {sizes}")


if __name__ == "__main__":
    main()
