#!/usr/bin/env python3
"""Time the sparse engine on a bounded ~1000-cell gun battery.

The battery stacks gun-plus-eater units whose streams are absorbed
internally, so population stays bounded no matter how long it runs.
"""

import argparse
import time

from lifeframes.catalog import gun_battery
from lifeframes.engine import step_n


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--units", type=int, default=23)
    parser.add_argument("--generations", type=int, default=10_000)
    args = parser.parse_args()

    battery = gun_battery(args.units)
    print(f"{args.units} units, {len(battery)} cells at generation 0")

    start = time.perf_counter()
    final = step_n(battery, args.generations)
    elapsed = time.perf_counter() - start

    rate = args.generations / elapsed if elapsed else float("inf")
    print(f"{args.generations} generations in {elapsed:.2f}s ({rate:,.0f} gen/s)")
    print(f"final population {len(final)}")


if __name__ == "__main__":
    main()
