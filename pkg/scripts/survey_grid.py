"""Tally which classifier fires, and how often the answer is true, over a (u, v) grid.

    python scripts/survey_grid.py --radius 100
"""

import argparse
from collections import Counter

from oplus.classify import classify


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--radius", type=int, default=60)
    args = parser.parse_args()

    r = args.radius
    cases, trues = Counter(), Counter()
    for u in range(-r, r + 1):
        for v in range(-r, r + 1):
            c = classify(u, v)
            cases[c.case_name] += 1
            trues[c.case_name] += c.truth
    total = (2 * r + 1) ** 2
    print(f"{'case':<18}{'pairs':>8}{'true':>8}")
    for name, count in cases.most_common():
        print(f"{name:<18}{count:>8}{trues[name]:>8}")
    print(f"{'total':<18}{total:>8}{sum(trues.values()):>8}")


if __name__ == "__main__":
    main()
