#!/usr/bin/env python3
"""Scan hard-sphere emptiness thresholds for circle samples.

For equally spaced points the level-n threshold is an exact rational
multiple of pi; the scan prints it next to the universal pi/n bound and
the level sizes just below the threshold.
"""

import argparse
import math
from fractions import Fraction

from hyperhomology.filtration import emptiness_threshold
from hyperhomology.metrics import PiValue, evenly_spaced_circle_sample, hard_sphere


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--points", type=int, default=12)
    parser.add_argument("--max-level", type=int, default=5)
    args = parser.parse_args()

    sample = evenly_spaced_circle_sample(args.points)
    print(f"{args.points} equally spaced points on the unit circle")
    print(f"{'n':>3} {'threshold':>14} {'pi/n':>10} {'edges just below':>18}")
    for n in range(2, args.max_level + 1):
        if n > args.points:
            break
        threshold = emptiness_threshold(sample, n)
        probe = PiValue(threshold.coeff * Fraction(99, 100))
        count = len(hard_sphere(sample, probe, n).level(n))
        print(
            f"{n:>3} {float(threshold):>13.6f} {math.pi / n:>10.6f} {count:>18}"
        )
        assert float(threshold) <= math.pi / n + 1e-12


if __name__ == "__main__":
    main()
