#!/usr/bin/env python3
"""Sweep the deviation between the board law and the Lorentz form.

Scans the unit square on a rational grid and prints the exact maximum
of lorentz(v1, v2) - compose_parallel(v1, v2), where it sits, and
whether it clears 0.05.
"""

import argparse
import time
from fractions import Fraction

from lifeframes.kinematics import max_deviation_scan


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--step",
        type=Fraction,
        default=Fraction(1, 1000),
        help="grid spacing; must divide 1 (default 1/1000)",
    )
    args = parser.parse_args()

    start = time.perf_counter()
    report = max_deviation_scan(args.step)
    elapsed = time.perf_counter() - start

    cells = int(1 / args.step) + 1
    print(f"grid {cells}x{cells}, step {args.step}, {elapsed:.2f}s")
    print(f"max delta = {report.delta} = {float(report.delta):.6f}")
    print(f"at v1={report.v1}, v2={report.v2}")
    bound = Fraction(1, 20)
    relation = "exceeds" if report.delta > bound else "stays within"
    print(f"{relation} 0.05 (delta - 1/20 = {report.delta - bound})")


if __name__ == "__main__":
    main()
