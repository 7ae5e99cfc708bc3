#!/usr/bin/env python3
"""Census the ships escaping the Gosper gun.

Runs the emission detector over a horizon and prints one line per
escaped ship with its birth generation and measured ground velocity.
With --v1 each velocity is also pulled back into the frame of a
carrier moving at that speed along +x.
"""

import argparse
from fractions import Fraction

from lifeframes.catalog import catalog_pattern, named_ship_catalog
from lifeframes.detector import detect_emissions
from lifeframes.kinematics import Velocity2, compose_oblique, invert_oblique


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--horizon", type=int, default=300)
    parser.add_argument(
        "--v1",
        type=Fraction,
        default=None,
        help="carrier velocity for the co-moving view, e.g. 1/2",
    )
    args = parser.parse_args()

    names = {report: name for name, report in named_ship_catalog()}
    gun = catalog_pattern("gosper_gun")
    events = detect_emissions(gun, args.horizon, list(names.keys()))

    print(f"{len(events)} ship(s) escaped within {args.horizon} generations")
    for event in events:
        vx, vy = event.ground_velocity
        x, y = event.first_sighting
        line = (
            f"gen {event.birth_generation:>4}  {names[event.ship]:<6} "
            f"at ({x},{y})  v=({vx},{vy})"
        )
        if args.v1 is not None:
            bullet = invert_oblique(args.v1, Velocity2(vx, vy))
            back = compose_oblique(args.v1, bullet).v12
            ok = "ok" if back == Velocity2(vx, vy) else "MISMATCH"
            line += f"  co-moving=({bullet.vx},{bullet.vy}) [{ok}]"
        print(line)


if __name__ == "__main__":
    main()
