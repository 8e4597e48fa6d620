"""How compiled term size grows with polynomial size.

Samples random polynomials at increasing occurrence counts, compiles each in
its minimal club, and tabulates the size of the combinator witness (leaf
count) and the number of reduction steps verification needed.  Seeded, so
repeated runs print identical tables.

Usage: python3 scripts/term_growth.py [--seed S] [--samples K] [--max-occurrences N]
"""

import argparse
import random

from clubcomb import compiler, poly
from clubcomb.comb import App
from clubcomb.finord import FinFun


def term_size(t):
    if isinstance(t, App):
        return term_size(t.left) + term_size(t.right)
    return 1


def random_sequent(rng, occurrences):
    shapes = list(poly.all_bracketings(occurrences))
    shape = rng.choice(shapes)
    context = rng.randint(1, occurrences)
    table = tuple(rng.randint(1, context) for _ in range(occurrences))
    return poly.act(poly.linear(shape), FinFun(occurrences, context, table))


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=20260816)
    parser.add_argument("--samples", type=int, default=50, metavar="K",
                        help="polynomials per occurrence count (default 50)")
    parser.add_argument("--max-occurrences", type=int, default=8, metavar="N",
                        help="largest occurrence count sampled (default 8)")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    header = f"{'occ':>4} {'avg size':>9} {'max size':>9} {'avg steps':>10} " \
             f"{'max steps':>10}"
    print(header)
    print("-" * len(header))
    for occurrences in range(1, args.max_occurrences + 1):
        sizes = []
        steps = []
        for _ in range(args.samples):
            s = random_sequent(rng, occurrences)
            report = compiler.compile(s)
            assert report.verified
            sizes.append(term_size(report.output))
            steps.append(report.steps)
        print(
            f"{occurrences:>4} {sum(sizes) / len(sizes):>9.1f} {max(sizes):>9} "
            f"{sum(steps) / len(steps):>10.1f} {max(steps):>10}"
        )


if __name__ == "__main__":
    main()
