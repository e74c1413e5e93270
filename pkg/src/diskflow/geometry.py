"""Circle-node arithmetic, touching-line triples, and the order-2n symmetry group.

Nodes sit at the vertices of a regular n-gon (n even), labeled 1..n clockwise;
node arithmetic is circular with representative range 1..n (n+1 = 1).

A touching line is coded by a triple (a, p, q): the line is tangent to the
circle at node a, and p, q are the nearest nodes inside the region of the disk
that carries the whole line on its boundary (the "far" region).  When that
region holds a single nearest node the triple degenerates to (a, p, p).  All
three nodes share one parity, and a distinct triple is listed in clockwise
order starting at a.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple


class TouchLine(NamedTuple):
    a: int
    p: int
    q: int


class GroupElement(NamedTuple):
    kind: str   # "rotation" or "reflection"
    param: int  # rotation shift c (i -> i+c), or reflection axis t (i -> t-i)


ROTATION = "rotation"
REFLECTION = "reflection"


def node_mod(i: int, n: int) -> int:
    """Reduce i into the representative range 1..n."""
    r = i % n
    return r if r else n


def cw_distance(i: int, j: int, n: int) -> int:
    """Number of clockwise steps from node i to node j, in 0..n-1."""
    return (j - i) % n


def is_valid_touch_line(a: int, p: int, q: int, n: int) -> bool:
    if not (1 <= a <= n and 1 <= p <= n and 1 <= q <= n):
        return False
    if (a - p) % 2 or (a - q) % 2:
        return False
    if a == p or a == q:
        return False
    if p == q:
        return True
    # distinct triple: clockwise orientation a -> p -> q
    return cw_distance(a, p, n) < cw_distance(a, q, n)


def make_touch_line(a: int, p: int, q: int, n: int) -> TouchLine:
    """Validated TouchLine constructor; raises ValueError on a bad triple."""
    if n < 2 or n % 2:
        raise ValueError(f"node count must be even and >= 2, got {n}")
    if not (1 <= a <= n and 1 <= p <= n and 1 <= q <= n):
        raise ValueError(f"nodes out of range 1..{n}: ({a},{p},{q})")
    if (a - p) % 2 or (a - q) % 2:
        raise ValueError(f"parity mismatch in ({a},{p},{q})")
    if a == p or a == q:
        raise ValueError(f"touch node repeated in ({a},{p},{q})")
    if p != q and cw_distance(a, p, n) >= cw_distance(a, q, n):
        raise ValueError(f"({a},{p},{q}) is not clockwise oriented")
    return TouchLine(a, p, q)


def region_sizes(v: TouchLine, n: int) -> tuple[int, int, int]:
    """Node counts (k, l, m) of the three sub-disks cut off by a line.

    Splitting the disk along the line and shrinking the cut on each piece
    adds one new node per piece; the far piece keeps nodes p..q, the two
    near pieces keep the open arcs (a..p) and (q..a).  Always k+l+m = n+2
    with every component even and >= 2.
    """
    a, p, q = v
    k = cw_distance(p, q, n) + 2
    l = cw_distance(a, p, n)
    m = cw_distance(q, a, n)
    return k, l, m


def group_elements(n: int, group: str = "full") -> list[GroupElement]:
    """The 2n rotations/reflections ("full") or the n rotations ("rotations")."""
    rots = [GroupElement(ROTATION, c) for c in range(n)]
    if group == "rotations":
        return rots
    if group == "full":
        return rots + [GroupElement(REFLECTION, t) for t in range(n)]
    raise ValueError(f"unknown group {group!r}")


def apply_to_node(g: GroupElement, i: int, n: int) -> int:
    if g.kind == ROTATION:
        return node_mod(i + g.param, n)
    return node_mod(g.param - i, n)


def apply_to_line(g: GroupElement, v: TouchLine, n: int) -> TouchLine:
    """Transform a touching line; reflections swap p and q to stay clockwise."""
    a, p, q = v
    if g.kind == ROTATION:
        c = g.param
        return TouchLine(node_mod(a + c, n), node_mod(p + c, n), node_mod(q + c, n))
    t = g.param
    return TouchLine(node_mod(t - a, n), node_mod(t - q, n), node_mod(t - p, n))


def compose(g2: GroupElement, g1: GroupElement, n: int) -> GroupElement:
    """The element acting as g2 after g1."""
    k2, a2 = g2
    k1, a1 = g1
    if k1 == ROTATION and k2 == ROTATION:
        return GroupElement(ROTATION, (a1 + a2) % n)
    if k1 == ROTATION and k2 == REFLECTION:
        return GroupElement(REFLECTION, (a2 - a1) % n)
    if k1 == REFLECTION and k2 == ROTATION:
        return GroupElement(REFLECTION, (a1 + a2) % n)
    return GroupElement(ROTATION, (a2 - a1) % n)


def transform_diagram(g: GroupElement, lines: Iterable[TouchLine], n: int) -> tuple[TouchLine, ...]:
    """Apply a group element to every line and re-sort canonically."""
    return tuple(sorted(apply_to_line(g, v, n) for v in lines))
