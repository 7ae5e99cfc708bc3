"""Kinematic measurement from raw evolution.

Everything here is observational: a pattern is stepped and its cell
sets compared, and period, displacement and velocity fall out of the
comparison.  Nothing is assumed from a name or a lookup table except
in the emission census, where a small cluster is recognized by exact
cell-set match against known ship phases and its velocity is still
measured from its own sightings rather than copied from the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import (
    Cell,
    EmptyPatternError,
    Pattern,
    bounding_box,
    canonicalize,
    population,
    step,
)

__all__ = [
    "DEFAULT_MAX_EXTENT",
    "DEFAULT_POPULATION_FACTOR",
    "ExplosiveGrowthError",
    "ShipReport",
    "EmissionEvent",
    "detect_ship",
    "detect_emissions",
]

DEFAULT_POPULATION_FACTOR = 10.0
DEFAULT_MAX_EXTENT = 10_000

# Chebyshev distance 2 is the merge radius: two cells that far apart
# can still feed the same dead neighbor, so their clusters are one
# causal body for the next step.
_MERGE_OFFSETS = tuple(
    (dx, dy)
    for dx in range(-2, 3)
    for dy in range(-2, 3)
    if (dx, dy) != (0, 0)
)


class ExplosiveGrowthError(RuntimeError):
    """Growth blew past the configured bound before any recurrence."""

    def __init__(self, message: str, generation: int, current_population: int):
        super().__init__(message)
        self.generation = generation
        self.population = current_population


@dataclass(frozen=True)
class ShipReport:
    """Measured recurrence of a pattern: period, shift, and phases.

    phases holds the canonical form of each of the period generations,
    starting from the pattern that was handed to the detector.
    """

    period: int
    displacement: tuple[int, int]
    phases: tuple[Pattern, ...]

    @property
    def velocity(self) -> tuple[Fraction, Fraction]:
        dx, dy = self.displacement
        return Fraction(dx, self.period), Fraction(dy, self.period)

    @property
    def speed(self) -> Fraction:
        """Chebyshev speed max(|vx|, |vy|)."""
        vx, vy = self.velocity
        return max(abs(vx), abs(vy))

    @property
    def kind(self) -> str:
        if self.displacement != (0, 0):
            return "ship"
        return "oscillator" if self.period > 1 else "still-life"


@dataclass(frozen=True)
class EmissionEvent:
    """A ship seen leaving a parent pattern, with measured velocity."""

    birth_generation: int
    ship: ShipReport
    ground_velocity: tuple[Fraction, Fraction]
    first_sighting: Cell

    def __post_init__(self):
        vx, vy = self.ground_velocity
        if max(abs(vx), abs(vy)) > 1:
            raise ValueError("measured velocity exceeds the speed of light")


def detect_ship(
    p: Pattern,
    max_period: int = 64,
    population_factor: float = DEFAULT_POPULATION_FACTOR,
    max_extent: int = DEFAULT_MAX_EXTENT,
) -> ShipReport | None:
    """Find the smallest period at which p recurs modulo translation.

    Returns None when no recurrence shows up within max_period (the
    pattern may still be periodic with a longer period, or may never
    settle).  Raises ExplosiveGrowthError when the population grows
    past population_factor times the initial count, or the bounding
    box past max_extent on a side, before any recurrence.
    """
    if not p.cells:
        raise EmptyPatternError("cannot measure an empty pattern")
    if max_period < 1:
        raise ValueError("max_period must be at least 1")
    start_population = population(p)
    population_limit = start_population * population_factor
    first, anchor0 = canonicalize(p)
    phases = [first]
    q = p
    for t in range(1, max_period + 1):
        q = step(q)
        if not q.cells:
            return None
        if population(q) > population_limit:
            raise ExplosiveGrowthError(
                f"population {population(q)} exceeds "
                f"{population_factor} x initial {start_population} "
                f"at generation {t} with no recurrence",
                t,
                population(q),
            )
        min_x, min_y, max_x, max_y = bounding_box(q)
        if max_x - min_x + 1 > max_extent or max_y - min_y + 1 > max_extent:
            raise ExplosiveGrowthError(
                f"bounding box exceeds {max_extent} on a side "
                f"at generation {t} with no recurrence",
                t,
                population(q),
            )
        canon, anchor = canonicalize(q)
        if canon.cells == first.cells:
            return ShipReport(
                period=t,
                displacement=(anchor[0] - anchor0[0], anchor[1] - anchor0[1]),
                phases=tuple(phases),
            )
        phases.append(canon)
    return None


def _clusters(cells: frozenset[Cell]) -> list[frozenset[Cell]]:
    """Partition live cells into bodies merged within Chebyshev 2."""
    seen: set[Cell] = set()
    out: list[frozenset[Cell]] = []
    for start in cells:
        if start in seen:
            continue
        frontier = [start]
        seen.add(start)
        member: list[Cell] = []
        while frontier:
            x, y = frontier.pop()
            member.append((x, y))
            for dx, dy in _MERGE_OFFSETS:
                nb = (x + dx, y + dy)
                if nb in cells and nb not in seen:
                    seen.add(nb)
                    frontier.append(nb)
        out.append(frozenset(member))
    return out


def _normalize(cluster: frozenset[Cell]) -> tuple[frozenset[Cell], Cell]:
    min_x = min(x for x, _ in cluster)
    min_y = min(y for _, y in cluster)
    return (
        frozenset((x - min_x, y - min_y) for x, y in cluster),
        (min_x, min_y),
    )


def _box_gap(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> int:
    """Chebyshev distance between two bounding boxes (0 when touching)."""
    gap_x = max(a[0] - b[2], b[0] - a[2], 0)
    gap_y = max(a[1] - b[3], b[1] - a[3], 0)
    return max(gap_x, gap_y)


def _union_box(
    boxes: list[tuple[int, int, int, int]]
) -> tuple[int, int, int, int] | None:
    if not boxes:
        return None
    return (
        min(b[0] for b in boxes),
        min(b[1] for b in boxes),
        max(b[2] for b in boxes),
        max(b[3] for b in boxes),
    )


@dataclass
class _PhaseEntry:
    """One canonical ship phase with its per-step anchor motion."""

    report: ShipReport
    phase_index: int
    step_offset: Cell
    next_cells: frozenset[Cell]


def _phase_entries(report: ShipReport) -> list[tuple[frozenset[Cell], _PhaseEntry]]:
    """Walk one full period of a ship and record each phase's step.

    The walk re-derives, with the engine itself, where each phase's
    corner moves on the next generation; the census needs that to
    follow one physical ship through consecutive generations.
    """
    q = report.phases[0]
    anchors: list[Cell] = [(0, 0)]
    shapes: list[frozenset[Cell]] = [q.cells]
    for _ in range(report.period):
        q = step(q)
        canon, anchor = canonicalize(q)
        anchors.append(anchor)
        shapes.append(canon.cells)
    if shapes[report.period] != shapes[0]:
        raise ValueError("catalog entry does not recur at its stated period")
    if anchors[report.period] != report.displacement:
        raise ValueError("catalog entry does not move by its stated displacement")
    out = []
    for i in range(report.period):
        if shapes[i] != report.phases[i].cells:
            raise ValueError("catalog entry phases are out of order")
        delta = (
            anchors[i + 1][0] - anchors[i][0],
            anchors[i + 1][1] - anchors[i][1],
        )
        out.append(
            (shapes[i], _PhaseEntry(report, i, delta, shapes[(i + 1) % report.period]))
        )
    return out


@dataclass
class _Track:
    """One physical ship being followed generation by generation."""

    entry: _PhaseEntry
    anchor: Cell
    first_generation: int
    first_anchor: Cell
    first_gap: int | None
    confirmed: bool = False


def detect_emissions(
    p: Pattern,
    horizon: int,
    catalog: list[ShipReport],
) -> list[EmissionEvent]:
    """Census of ships escaping p within the first horizon generations.

    Per generation the live cells are split into bodies (clusters
    merged within Chebyshev distance 2).  A body whose cell set
    exactly matches a catalog ship phase modulo translation becomes a
    candidate and is followed through consecutive generations; it is
    reported once it has been sighted again in the same phase a whole
    number of periods later, strictly farther from the non-matching
    main body than at first sighting.  Velocity is the measured anchor
    shift divided by the elapsed generations.
    """
    ships = [r for r in catalog if r.kind == "ship"]
    if not ships:
        raise ValueError("catalog holds no ships, so nothing can be confirmed")
    shortest = min(r.period for r in ships)
    if horizon < shortest:
        raise ValueError(
            f"horizon {horizon} is shorter than the shortest catalog "
            f"period {shortest}, so no sighting can be confirmed"
        )

    table: dict[frozenset[Cell], _PhaseEntry] = {}
    for report in ships:
        for shape, entry in _phase_entries(report):
            known = table.get(shape)
            if known is None:
                table[shape] = entry
            elif (
                known.report.period != entry.report.period
                or known.report.displacement != entry.report.displacement
            ):
                raise ValueError("two catalog ships share a phase shape")

    events: list[EmissionEvent] = []
    tracks: list[_Track] = []
    q = p
    for generation in range(horizon + 1):
        matched: dict[tuple[frozenset[Cell], Cell], _PhaseEntry] = {}
        body_boxes = []
        for cluster in _clusters(q.cells):
            shape, anchor = _normalize(cluster)
            entry = table.get(shape)
            if entry is not None:
                matched[(shape, anchor)] = entry
            else:
                xs = [x for x, _ in cluster]
                ys = [y for _, y in cluster]
                body_boxes.append((min(xs), min(ys), max(xs), max(ys)))
        body = _union_box(body_boxes)

        surviving: list[_Track] = []
        for track in tracks:
            dx, dy = track.entry.step_offset
            key = (track.entry.next_cells, (track.anchor[0] + dx, track.anchor[1] + dy))
            entry = matched.pop(key, None)
            if entry is None:
                continue
            track.entry = entry
            track.anchor = key[1]
            surviving.append(track)
            if track.confirmed:
                continue
            elapsed = generation - track.first_generation
            if elapsed == 0 or elapsed % track.entry.report.period:
                continue
            if body is not None and track.first_gap is not None:
                w, h = _cluster_extent(key[0])
                here = (
                    track.anchor[0],
                    track.anchor[1],
                    track.anchor[0] + w,
                    track.anchor[1] + h,
                )
                if _box_gap(here, body) <= track.first_gap:
                    continue
            velocity = (
                Fraction(track.anchor[0] - track.first_anchor[0], elapsed),
                Fraction(track.anchor[1] - track.first_anchor[1], elapsed),
            )
            track.confirmed = True
            events.append(
                EmissionEvent(
                    birth_generation=track.first_generation,
                    ship=track.entry.report,
                    ground_velocity=velocity,
                    first_sighting=track.first_anchor,
                )
            )
        tracks = surviving

        for (shape, anchor), entry in matched.items():
            gap = None
            if body is not None:
                w, h = _cluster_extent(shape)
                gap = _box_gap((anchor[0], anchor[1], anchor[0] + w, anchor[1] + h), body)
            tracks.append(
                _Track(
                    entry=entry,
                    anchor=anchor,
                    first_generation=generation,
                    first_anchor=anchor,
                    first_gap=gap,
                )
            )

        if generation < horizon:
            q = step(q)

    events.sort(key=lambda e: (e.birth_generation, e.first_sighting))
    return events


def _cluster_extent(shape: frozenset[Cell]) -> tuple[int, int]:
    return max(x for x, _ in shape), max(y for _, y in shape)
