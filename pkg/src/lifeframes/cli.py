"""Command-line harness: run, measure, compose, verify.

Velocities cross this boundary only as exact fractions like ``2/5``;
decimal input is rejected so no rounding can sneak in at the edge.
Output comes in two shapes, a human table and a line-oriented
``key=value`` form that is byte-stable for identical inputs.

Exit codes: 0 on success, 1 when a check or measurement fails, 2 for
usage and file-format errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .catalog import (
    CATALOG,
    catalog_pattern,
    entry as catalog_entry,
    named_ship_catalog,
)
from .detector import (
    DEFAULT_MAX_EXTENT,
    DEFAULT_POPULATION_FACTOR,
    EmissionEvent,
    ExplosiveGrowthError,
    ShipReport,
    detect_emissions,
    detect_ship,
)
from .engine import (
    CoordinateOverflowError,
    EmptyPatternError,
    Pattern,
    bounding_box,
    population,
    step_n,
)
from .kinematics import (
    Velocity2,
    compose_oblique,
    compose_parallel,
    direction_degrees,
    galilean,
    invert_oblique,
    lorentz,
    max_deviation_scan,
)
from .patterns import PatternDocument, PatternFormatError, emit_rle, parse_auto
from .tokens import ScheduleError, exhaustive_check

__all__ = ["RunConfig", "main"]

EXPLOSION_FACTOR_ENV = "LIFEFRAMES_EXPLOSION_FACTOR"


@dataclass(frozen=True)
class RunConfig:
    """Limits and output shape shared by the subcommands."""

    generations: int = 0
    max_period: int = 64
    horizon: int = 300
    explosion_factor: float = DEFAULT_POPULATION_FACTOR
    max_extent: int = DEFAULT_MAX_EXTENT
    output_format: str = "table"

    def __post_init__(self):
        if self.generations < 0:
            raise ValueError("generations must be non-negative")
        if self.max_period < 1 or self.horizon < 1:
            raise ValueError("limits must be positive")
        if self.explosion_factor <= 0:
            raise ValueError("explosion factor must be positive")

    @property
    def machine(self) -> bool:
        return self.output_format == "machine"


class UsageError(Exception):
    """Bad invocation or unreadable input; maps to exit code 2."""


def _fraction(text: str) -> Fraction:
    cleaned = text.strip()
    if "." in cleaned or "e" in cleaned.lower():
        raise argparse.ArgumentTypeError(
            f"{text!r} looks decimal; write an exact fraction such as 2/5"
        )
    try:
        return Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"{text!r}: {exc}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 0:
        raise argparse.ArgumentTypeError("must not be negative")
    return value


def _mfrac(f: Fraction) -> str:
    """Machine form: always numerator/denominator."""
    return f"{f.numerator}/{f.denominator}"


def _hfrac(f: Fraction) -> str:
    return str(f)


def _load_document(path: str) -> PatternDocument:
    try:
        text = Path(path).read_text(encoding="ascii")
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"{path}: {exc}")
    try:
        return parse_auto(text)
    except PatternFormatError as exc:
        raise UsageError(f"{path}: {exc}")


def _explosion_factor_default() -> float:
    raw = os.environ.get(EXPLOSION_FACTOR_ENV)
    if raw is None:
        return DEFAULT_POPULATION_FACTOR
    try:
        value = float(raw)
    except ValueError:
        raise UsageError(f"{EXPLOSION_FACTOR_ENV}={raw!r} is not a number")
    if value <= 0:
        raise UsageError(f"{EXPLOSION_FACTOR_ENV} must be positive")
    return value


def _evolve_with_bound(p: Pattern, generations: int, factor: float) -> Pattern:
    """step_n in slices, refusing runs whose population explodes."""
    limit = max(population(p), 1) * factor
    done = 0
    q = p
    while done < generations:
        take = min(256, generations - done)
        q = step_n(q, take)
        done += take
        if population(q) > limit:
            raise ExplosiveGrowthError(
                f"population {population(q)} exceeds {factor} x initial "
                f"{population(p)} at generation {done}",
                done,
                population(q),
            )
    return q


def cmd_run(args: argparse.Namespace, config: RunConfig) -> int:
    doc = _load_document(args.pattern)
    evolved = _evolve_with_bound(
        doc.to_pattern(), config.generations, config.explosion_factor
    )
    text = emit_rle(PatternDocument.from_pattern(evolved, doc.name, doc.comments))
    if args.out:
        Path(args.out).write_text(text, encoding="ascii")
    else:
        sys.stdout.write(text)
    if config.machine:
        print(f"generation={evolved.generation}")
        print(f"population={population(evolved)}")
        if evolved.cells:
            print("box=%d,%d,%d,%d" % bounding_box(evolved))
        else:
            print("box=empty")
    else:
        if evolved.cells:
            x0, y0, x1, y1 = bounding_box(evolved)
            box = f"({x0},{y0})..({x1},{y1})"
        else:
            box = "empty"
        print(
            f"generation {evolved.generation}, "
            f"population {population(evolved)}, box {box}"
        )
    return 0


def cmd_detect(args: argparse.Namespace, config: RunConfig) -> int:
    doc = _load_document(args.pattern)
    report = detect_ship(
        doc.to_pattern(),
        config.max_period,
        population_factor=config.explosion_factor,
        max_extent=config.max_extent,
    )
    if report is None:
        if config.machine:
            print("periodic=no")
        else:
            print(f"not periodic within {config.max_period} generations")
        return 0
    vx, vy = report.velocity
    if config.machine:
        print("periodic=yes")
        print(f"kind={report.kind}")
        print(f"period={report.period}")
        print(f"dx={report.displacement[0]}")
        print(f"dy={report.displacement[1]}")
        print(f"vx={_mfrac(vx)}")
        print(f"vy={_mfrac(vy)}")
        print(f"speed={_mfrac(report.speed)}")
    else:
        print(
            f"{report.kind} P={report.period} "
            f"d=({report.displacement[0]},{report.displacement[1]}) "
            f"v=({_hfrac(vx)},{_hfrac(vy)}) speed={_hfrac(report.speed)}"
        )
    return 0


def _three_law_rows(v1: Fraction, v2x: Fraction) -> list[tuple[str, Fraction]]:
    return [
        ("life", v1 + (1 - v1) * v2x),
        ("lorentz", lorentz(v1, v2x)),
        ("galilean", galilean(v1, v2x)),
    ]


def cmd_compose(args: argparse.Namespace, config: RunConfig) -> int:
    v1, v2x, v2y = args.v1, args.v2x, args.v2y
    if args.law == "life":
        if v2y == 0 and 0 <= v2x <= 1:
            v12 = Velocity2(compose_parallel(v1, v2x), Fraction(0))
            tan_chi: Fraction | None = Fraction(0) if v12.vx else None
        else:
            result = compose_oblique(v1, Velocity2(v2x, v2y))
            v12 = result.v12
            tan_chi = result.tan_chi
    elif args.law == "lorentz":
        if v2y != 0:
            raise UsageError(
                "the lorentz law here is one-dimensional; give --v2y 0"
            )
        v12 = None
        scalar = lorentz(v1, v2x)
    else:
        v12 = None
        scalar = galilean(v1, v2x)

    lines: list[str] = []
    if config.machine:
        lines.append(f"law={args.law}")
        if args.law == "life":
            lines.append(f"v12x={_mfrac(v12.vx)}")
            lines.append(f"v12y={_mfrac(v12.vy)}")
            if v12.vx or v12.vy:
                lines.append(
                    "tan_chi=" + ("vertical" if tan_chi is None else _mfrac(tan_chi))
                )
                lines.append("chi_degrees=%.6f" % direction_degrees(v12))
        else:
            vy = v2y if args.law == "galilean" else Fraction(0)
            lines.append(f"v12x={_mfrac(scalar)}")
            lines.append(f"v12y={_mfrac(vy)}")
        for name, value in _three_law_rows(v1, v2x):
            lines.append(f"{name}_x={_mfrac(value)}")
    else:
        lines.append(f"law {args.law}")
        if args.law == "life":
            lines.append(f"v12 = ({_hfrac(v12.vx)}, {_hfrac(v12.vy)})")
            if v12.vx or v12.vy:
                tan_text = "vertical" if tan_chi is None else _hfrac(tan_chi)
                lines.append(f"tan chi = {tan_text}")
                lines.append(
                    "chi = %.1f deg (display only)" % direction_degrees(v12)
                )
        else:
            vy = v2y if args.law == "galilean" else Fraction(0)
            lines.append(f"v12 = ({_hfrac(scalar)}, {_hfrac(vy)})")
        lines.append("law        v12x")
        for name, value in _three_law_rows(v1, v2x):
            lines.append(f"{name:<10} {_hfrac(value)}")
        if v2y != 0:
            lines.append("(comparison rows compose the x components only)")
    print("\n".join(lines))
    return 0


def cmd_catalog(args: argparse.Namespace, config: RunConfig) -> int:
    if args.emit:
        try:
            e = catalog_entry(args.emit)
        except KeyError as exc:
            raise UsageError(str(exc.args[0]))
        sys.stdout.write(emit_rle(parse_auto(e.rle)))
        return 0
    for e in CATALOG:
        cells = population(catalog_pattern(e.name))
        if config.machine:
            line = f"name={e.name} population={cells}"
            if e.expected:
                period, (dx, dy) = e.expected
                line += f" period={period} dx={dx} dy={dy}"
            else:
                line += " period=none"
            print(line)
        else:
            if e.expected:
                period, (dx, dy) = e.expected
                summary = f"P={period} d=({dx},{dy})"
            else:
                summary = "no fixed recurrence (emits ships)"
            print(f"{e.name:<12} {cells:>3} cells  {summary}")
    return 0


Check = tuple[bool, str]


def _check(ok: bool, label: str, detail: str) -> Check:
    return ok, f"{label}: {detail}"


def _suite_catalog(config: RunConfig) -> list[Check]:
    out = []
    for e in CATALOG:
        if e.expected is None:
            continue
        report = detect_ship(catalog_pattern(e.name), 16)
        period, displacement = e.expected
        ok = (
            report is not None
            and report.period == period
            and report.displacement == displacement
        )
        measured = (
            "vanished"
            if report is None
            else f"P={report.period} d={report.displacement}"
        )
        out.append(_check(ok, f"catalog {e.name}", f"measured {measured}"))
    return out


def _suite_parallel(config: RunConfig) -> list[Check]:
    half, two_fifths = Fraction(1, 2), Fraction(2, 5)
    cs = [
        (compose_parallel(half, half), Fraction(3, 4), "compose(1/2,1/2)"),
        (compose_parallel(two_fifths, half), Fraction(7, 10), "compose(2/5,1/2)"),
        (galilean(two_fifths, half), Fraction(9, 10), "galilean(2/5,1/2)"),
        (lorentz(two_fifths, half), Fraction(3, 4), "lorentz(2/5,1/2)"),
    ]
    return [
        _check(got == want, f"parallel {label}", f"= {_hfrac(got)}")
        for got, want, label in cs
    ]


def _suite_oblique(config: RunConfig) -> tuple[list[Check], list[str]]:
    quarter = Fraction(1, 4)
    result = compose_oblique(quarter, Velocity2(0, Fraction(1, 3)))
    v12 = result.v12
    checks = [
        _check(
            (abs(v12.vx), abs(v12.vy)) == (quarter, quarter),
            "oblique sample magnitudes",
            f"|v12| = ({_hfrac(abs(v12.vx))}, {_hfrac(abs(v12.vy))})",
        ),
        _check(
            result.tan_chi == 1,
            "oblique sample direction",
            f"tan chi = {_hfrac(result.tan_chi)}",
        ),
    ]
    reduced = compose_oblique(Fraction(2, 5), Velocity2(Fraction(1, 2), 0))
    checks.append(
        _check(
            reduced.v12 == Velocity2(Fraction(7, 10), 0),
            "oblique reduction",
            f"v2y=0 gives v12 = ({_hfrac(reduced.v12.vx)}, 0)",
        )
    )
    bullet = Velocity2(Fraction(1, 3), Fraction(-1, 4))
    frame = Fraction(1, 2)
    echo = invert_oblique(frame, compose_oblique(frame, bullet).v12)
    checks.append(
        _check(echo == bullet, "oblique inverse", "round trip restores the bullet")
    )
    rider = invert_oblique(Fraction(1, 2), Velocity2(quarter, quarter))
    checks.append(
        _check(
            rider == Velocity2(Fraction(-1, 2), Fraction(1, 2)),
            "oblique co-moving sample",
            f"frame 1/2 sees ({_hfrac(rider.vx)}, {_hfrac(rider.vy)})",
        )
    )
    findings = [
        "FINDING oblique: the law as implemented gives v12x=1/4, tan chi=1, "
        "45.0 deg for frame 1/4 and bullet (0,1/3)",
        "FINDING oblique: a convention measuring the course from the reversed "
        "carrier axis quotes v12x=-1/4 and chi=135 deg for the same motion; "
        "both readings are reported, neither is normalized away",
    ]
    return checks, findings


def _suite_oracle(config: RunConfig) -> list[Check]:
    report = exhaustive_check(48)
    return [
        _check(
            report.consistent,
            "oracle",
            f"{len(report.counterexamples)} counterexamples over "
            f"{report.cases} schedules with P <= 48",
        )
    ]


def _suite_deviation(config: RunConfig) -> tuple[list[Check], list[str]]:
    report = max_deviation_scan(Fraction(1, 1000))
    twentieth = Fraction(1, 20)
    checks = [
        _check(
            report.delta >= twentieth,
            "deviation scan consistency",
            f"max {_hfrac(report.delta)} >= 1/20, the value at (1/2,1/2)",
        )
    ]
    verdict = "exceeds" if report.delta > twentieth else "stays within"
    findings = [
        "FINDING deviation: max = %s (approx %.6f) at v1=%s, v2=%s"
        % (
            _hfrac(report.delta),
            float(report.delta),
            _hfrac(report.v1),
            _hfrac(report.v2),
        ),
        f"FINDING deviation: the measured maximum {verdict} 0.05",
    ]
    return checks, findings


def _suite_emissions(config: RunConfig) -> list[Check]:
    catalog = [report for _, report in named_ship_catalog()]
    events = detect_emissions(catalog_pattern("gosper_gun"), 300, catalog)
    checks = [
        _check(
            len(events) >= 9,
            "emissions count",
            f"{len(events)} ships escaped in 300 generations",
        )
    ]
    quarter = Fraction(1, 4)
    magnitudes_ok = all(
        (abs(e.ground_velocity[0]), abs(e.ground_velocity[1])) == (quarter, quarter)
        for e in events
    )
    checks.append(
        _check(
            bool(events) and magnitudes_ok,
            "emissions velocity",
            "every measured component has magnitude 1/4",
        )
    )
    identity_ok = all(
        invert_oblique(Fraction(0), Velocity2(*e.ground_velocity))
        == Velocity2(*e.ground_velocity)
        for e in events
    )
    checks.append(
        _check(
            bool(events) and identity_ok,
            "emissions frame identity",
            "invert_oblique at frame 0 returns each measured velocity",
        )
    )
    births = [e.birth_generation for e in events]
    strides = {b2 - b1 for b1, b2 in zip(births, births[1:])}
    checks.append(
        _check(
            strides == {30},
            "emissions cadence",
            f"birth generations step by {sorted(strides)}",
        )
    )
    return checks


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    wanted = args.suite
    checks: list[Check] = _suite_catalog(config)
    findings: list[str] = []
    if wanted in ("parallel", "all"):
        checks += _suite_parallel(config)
    if wanted in ("oblique", "all"):
        more, notes = _suite_oblique(config)
        checks += more
        findings += notes
    if wanted in ("oracle", "all"):
        checks += _suite_oracle(config)
    if wanted in ("deviation", "all"):
        more, notes = _suite_deviation(config)
        checks += more
        findings += notes
    if wanted in ("emissions", "all"):
        checks += _suite_emissions(config)

    failed = 0
    for ok, text in checks:
        print(("PASS " if ok else "FAIL ") + text)
        failed += not ok
    for note in findings:
        print(note)
    print(f"passed={len(checks) - failed} failed={failed}")
    return 1 if failed else 0


def cmd_emissions(args: argparse.Namespace, config: RunConfig) -> int:
    doc = _load_document(args.pattern)
    names = {report: name for name, report in named_ship_catalog()}
    events = detect_emissions(
        doc.to_pattern(), config.horizon, list(names.keys())
    )
    failures = 0
    if config.machine:
        print(f"events={len(events)}")
    for index, event in enumerate(events, start=1):
        failures += _print_event(index, event, names, args.v1, config)
    if not config.machine:
        print(f"{len(events)} emission event(s) within {config.horizon} generations")
    return 1 if failures else 0


def _print_event(
    index: int,
    event: EmissionEvent,
    names: dict[ShipReport, str],
    v1: Fraction | None,
    config: RunConfig,
) -> int:
    name = names.get(event.ship, "ship")
    vx, vy = event.ground_velocity
    x, y = event.first_sighting
    failed = 0
    comoving: Velocity2 | None = None
    note = ""
    if v1 is not None:
        try:
            comoving = invert_oblique(v1, Velocity2(vx, vy))
        except ValueError as exc:
            note = str(exc)
            failed = 1
        else:
            recomposed = compose_oblique(v1, comoving).v12
            if recomposed != Velocity2(vx, vy):
                note = "recomposition does not restore the measurement"
                failed = 1
    if config.machine:
        print(f"event={index}")
        print(f"ship={name}")
        print(f"birth={event.birth_generation}")
        print(f"x={x}")
        print(f"y={y}")
        print(f"vx={_mfrac(vx)}")
        print(f"vy={_mfrac(vy)}")
        if comoving is not None:
            print(f"v2x={_mfrac(comoving.vx)}")
            print(f"v2y={_mfrac(comoving.vy)}")
            print("consistent=yes")
        elif v1 is not None:
            print("consistent=no")
    else:
        line = (
            f"event {index}: {name} born generation {event.birth_generation} "
            f"at ({x},{y}), v = ({_hfrac(vx)}, {_hfrac(vy)})"
        )
        if comoving is not None:
            line += (
                f"; co-moving bullet ({_hfrac(comoving.vx)}, "
                f"{_hfrac(comoving.vy)}) recomposes exactly"
            )
        elif v1 is not None:
            line += f"; inversion failed: {note}"
        print(line)
    return failed


def _build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format",
        choices=("table", "machine"),
        default="table",
        help="human table or line-oriented key=value output",
    )

    parser = argparse.ArgumentParser(
        prog="lifeframes",
        description="Moving-frame velocity laws on the Life board, "
        "measured and verified by simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", parents=[shared], help="evolve a pattern file")
    p_run.add_argument("pattern", help="RLE or plaintext pattern file")
    p_run.add_argument("--gens", type=_nonnegative_int, default=1)
    p_run.add_argument("--out", help="write the evolved RLE here instead of stdout")
    p_run.add_argument("--explosion-factor", type=float, default=None)
    p_run.set_defaults(handler=cmd_run)

    p_detect = sub.add_parser(
        "detect", parents=[shared], help="measure period, displacement, velocity"
    )
    p_detect.add_argument("pattern")
    p_detect.add_argument("--max-period", type=_positive_int, default=64)
    p_detect.add_argument("--explosion-factor", type=float, default=None)
    p_detect.set_defaults(handler=cmd_detect)

    p_compose = sub.add_parser(
        "compose", parents=[shared], help="compose velocities exactly"
    )
    p_compose.add_argument(
        "--law", choices=("life", "lorentz", "galilean"), default="life"
    )
    p_compose.add_argument("--v1", type=_fraction, required=True)
    p_compose.add_argument("--v2x", type=_fraction, required=True)
    p_compose.add_argument("--v2y", type=_fraction, default=Fraction(0))
    p_compose.set_defaults(handler=cmd_compose)

    p_verify = sub.add_parser(
        "verify", parents=[shared], help="run the built-in check suites"
    )
    p_verify.add_argument(
        "--suite",
        choices=("parallel", "oblique", "oracle", "deviation", "emissions", "all"),
        default="all",
    )
    p_verify.set_defaults(handler=cmd_verify)

    p_catalog = sub.add_parser(
        "catalog", parents=[shared], help="list or emit built-in patterns"
    )
    p_catalog.add_argument("--list", action="store_true", default=False)
    p_catalog.add_argument("--emit", metavar="NAME")
    p_catalog.set_defaults(handler=cmd_catalog)

    p_em = sub.add_parser(
        "emissions", parents=[shared], help="census of ships escaping a pattern"
    )
    p_em.add_argument("pattern")
    p_em.add_argument("--horizon", type=_positive_int, default=300)
    p_em.add_argument(
        "--v1",
        type=_fraction,
        default=None,
        help="carrier velocity; adds the co-moving reconstruction per event",
    )
    p_em.set_defaults(handler=cmd_emissions)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        factor = getattr(args, "explosion_factor", None)
        if factor is None:
            factor = _explosion_factor_default()
        config = RunConfig(
            generations=getattr(args, "gens", 0),
            max_period=getattr(args, "max_period", 64),
            horizon=getattr(args, "horizon", 300),
            explosion_factor=factor,
            output_format=args.format,
        )
        return args.handler(args, config)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        ExplosiveGrowthError,
        CoordinateOverflowError,
        EmptyPatternError,
        ScheduleError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
