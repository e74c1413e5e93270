"""Orbit decomposition of the census under the boundary symmetries.

The n rotations and n reflections act on touching lines and hence on
diagrams.  Orbits under the full order-2n group count diagrams up to any
boundary symmetry; orbits under the rotation subgroup count them up to
orientation-preserving symmetry only.  Counting is done twice and
cross-checked: once by streaming canonical forms into a deduplicating set,
once by the standard fixed-point average (Burnside).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .census import Diagram, collect_diagrams, enumerate_diagrams
from .combinat import t_count
from .geometry import GroupElement, group_elements, transform_diagram


@dataclass(frozen=True)
class OrbitRecord:
    representative: Diagram
    orbit_size: int
    stabilizer_order: int
    rotation_period: int        # smallest c > 0 with the c-step rotation fixing the diagram
    reflection_invariant: bool


@dataclass(frozen=True)
class OrbitSummary:
    n: int
    group: str
    orbit_count: int
    size_histogram: dict[int, int]
    total: int                  # sum of orbit sizes; must equal t_count(n)


def canonical_form(d: Diagram, n: int, group: str = "full") -> Diagram:
    """Lexicographically minimal image of the diagram under the chosen group."""
    return min(transform_diagram(g, d, n) for g in group_elements(n, group))


def orbit_of(d: Diagram, n: int, group: str = "full") -> set[Diagram]:
    return {transform_diagram(g, d, n) for g in group_elements(n, group)}


def orbit_record(d: Diagram, n: int, group: str = "full") -> OrbitRecord:
    elems = group_elements(n, group)
    images = [transform_diagram(g, d, n) for g in elems]
    orbit = set(images)
    stab = sum(1 for img in images if img == d)
    rot_fix = [g.param for g, img in zip(elems, images)
               if g.kind == "rotation" and img == d and g.param]
    period = min(rot_fix) if rot_fix else n
    refl = any(g.kind == "reflection" and img == d for g, img in zip(elems, images))
    return OrbitRecord(
        representative=min(orbit),
        orbit_size=len(orbit),
        stabilizer_order=stab,
        rotation_period=period,
        reflection_invariant=refl,
    )


def orbit_counts(n: int, group: str = "full") -> OrbitSummary:
    """Count orbits by streaming canonical forms; histogram keyed by orbit size."""
    elems = group_elements(n, group)
    reps: Counter[Diagram] = Counter()

    def tally(d):
        reps[min(transform_diagram(g, d, n) for g in elems)] += 1

    enumerate_diagrams(n, sink=tally)
    total = sum(reps.values())
    if total != t_count(n):
        raise AssertionError(f"orbit sizes sum to {total}, expected {t_count(n)}")
    hist: dict[int, int] = {}
    for size in reps.values():
        hist[size] = hist.get(size, 0) + 1
    return OrbitSummary(n, group, len(reps), dict(sorted(hist.items())), total)


def burnside_check(n: int, group: str = "full") -> bool:
    """True iff the fixed-point average equals the canonical-form orbit count."""
    elems = group_elements(n, group)
    census = collect_diagrams(n)
    fixed = 0
    for g in elems:
        fixed += sum(1 for d in census if transform_diagram(g, d, n) == d)
    if fixed % len(elems):
        return False
    return fixed // len(elems) == orbit_counts(n, group).orbit_count
