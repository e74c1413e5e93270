"""The conflict graph over touching lines and its complement, the compatibility graph.

Vertices are all valid touching-line triples for n nodes; there are
n^2(n-2)/8 of them.  Two distinct lines are *compatible* (an edge of the
compatibility graph) exactly when they can be drawn in the disk without
crossing while both keep their coding.  The test is purely combinatorial:

Each line meets the boundary circle at three contacts - the tangency node a
and two curve endpoints, one in the node gap just before p and one in the gap
just after q.  The contacts split the circle into the three boundary arcs of
the line's complement regions.  Two lines coexist iff the four endpoint
contacts can be ordered inside their gaps (order is only ever shared between
the two lines, never within one) so that each line's three contacts fall
strictly inside a single region arc of the other.  Disjoint convex hulls,
nesting inside the far region, and the interlocked configuration all come out
as special cases of this one criterion.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .geometry import TouchLine, cw_distance, is_valid_touch_line, node_mod

COMPATIBILITY = "compatibility"
CONFLICT = "conflict"

# Contact coordinates: node k sits at 6(k-1); the gap between node g and
# node g+1 offers interior slots 6(g-1)+2 .. 6(g-1)+4.  Two lines share at
# most two gaps, each holding one endpoint of each line, so slot offsets
# {2, 4} are always enough.
_SLOT_LO = 2
_SLOT_MID = 3
_SLOT_HI = 4


def _in_open_arc(t: int, lo: int, hi: int, period: int) -> bool:
    """True iff t lies strictly inside the clockwise arc from lo to hi."""
    return 0 < (t - lo) % period < (hi - lo) % period


def _contacts_in_one_region(own: tuple[int, int, int], other: tuple[int, int, int], period: int) -> bool:
    a, x, y = own
    region = -1
    for t in other:
        if _in_open_arc(t, a, x, period):
            r = 0
        elif _in_open_arc(t, x, y, period):
            r = 1
        elif _in_open_arc(t, y, a, period):
            r = 2
        else:
            return False  # t coincides with a boundary contact
        if region < 0:
            region = r
        elif region != r:
            return False
    return True


def compatible(v1: TouchLine, v2: TouchLine, n: int) -> bool:
    """True iff the two lines can appear together in one diagram."""
    if v1 == v2 or v1[0] == v2[0]:
        # two lines tangent at the same node always cross
        return False
    period = 6 * n
    a1 = 6 * (v1[0] - 1)
    a2 = 6 * (v2[0] - 1)
    gaps1 = (node_mod(v1[1] - 1, n), v1[2])   # x-gap before p, y-gap after q
    gaps2 = (node_mod(v2[1] - 1, n), v2[2])

    # endpoints sharing a gap across the two lines get both orders tried
    shared = [(i, j) for i in (0, 1) for j in (0, 1) if gaps1[i] == gaps2[j]]
    choices = product((_SLOT_LO, _SLOT_HI), repeat=len(shared)) if shared else ((),)
    for assignment in choices:
        off1 = [_SLOT_MID, _SLOT_MID]
        off2 = [_SLOT_MID, _SLOT_MID]
        for (i, j), slot in zip(shared, assignment):
            off1[i] = slot
            off2[j] = _SLOT_LO + _SLOT_HI - slot
        c1 = (a1, 6 * (gaps1[0] - 1) + off1[0], 6 * (gaps1[1] - 1) + off1[1])
        c2 = (a2, 6 * (gaps2[0] - 1) + off2[0], 6 * (gaps2[1] - 1) + off2[1])
        if _contacts_in_one_region(c1, c2, period) and _contacts_in_one_region(c2, c1, period):
            return True
    return False


def build_vertices(n: int) -> list[TouchLine]:
    """All touching lines for n nodes in canonical (lexicographic) order."""
    if n % 2 or n < 4:
        raise ValueError(f"node count must be even and >= 4, got {n}")
    verts = []
    for a in range(1, n + 1):
        mates = [x for x in range(1 + (a - 1) % 2, n + 1, 2) if x != a]
        for p in mates:
            for q in mates:
                if p == q or cw_distance(a, p, n) < cw_distance(a, q, n):
                    verts.append(TouchLine(a, p, q))
    verts.sort()
    expected = n * n * (n - 2) // 8
    if len(verts) != expected:
        raise AssertionError(f"vertex count {len(verts)} != n^2(n-2)/8 = {expected}")
    return verts


@dataclass(frozen=True)
class CompatibilityGraph:
    """Immutable graph over the canonical vertex list; adjacency as bitset rows."""
    n: int
    sense: str
    vertices: tuple[TouchLine, ...]
    adj: tuple[int, ...]
    _index: dict = field(repr=False, hash=False, compare=False, default_factory=dict)

    def __post_init__(self):
        self._index.update({v: i for i, v in enumerate(self.vertices)})

    def index(self, v: TouchLine) -> int:
        return self._index[v]

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree(self, i: int) -> int:
        return self.adj[i].bit_count()

    def neighbors(self, i: int) -> list[int]:
        return _bits(self.adj[i])


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def build_graph(n: int, sense: str = COMPATIBILITY) -> CompatibilityGraph:
    """Build the compatibility graph or its complement, deterministically."""
    if sense not in (COMPATIBILITY, CONFLICT):
        raise ValueError(f"unknown sense {sense!r}")
    verts = build_vertices(n)
    V = len(verts)
    adj = [0] * V
    for i in range(V):
        vi = verts[i]
        for j in range(i + 1, V):
            if compatible(vi, verts[j], n):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    if sense == CONFLICT:
        full = (1 << V) - 1
        adj = [full ^ m ^ (1 << i) for i, m in enumerate(adj)]
    return CompatibilityGraph(n, sense, tuple(verts), tuple(adj))


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    edge_count: int
    degree_histogram: dict[int, int]
    component_count: int
    component_sizes: tuple[int, ...]
    is_regular: bool
    triangle_count: int


def components(g: CompatibilityGraph) -> list[int]:
    """Connected components as vertex bitmasks, in order of least vertex."""
    seen = 0
    out = []
    for i in range(g.vertex_count):
        if (seen >> i) & 1:
            continue
        comp = 0
        frontier = 1 << i
        while frontier:
            comp |= frontier
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~comp
        seen |= comp
        out.append(comp)
    return out


def graph_stats(g: CompatibilityGraph) -> GraphStats:
    degs = [g.degree(i) for i in range(g.vertex_count)]
    hist: dict[int, int] = {}
    for d in degs:
        hist[d] = hist.get(d, 0) + 1
    comps = components(g)
    sizes = tuple(sorted((c.bit_count() for c in comps), reverse=True))
    triangles = 0
    for i in range(g.vertex_count):
        above_i = g.adj[i] >> (i + 1) << (i + 1)
        for j in _bits(above_i):
            above_j = g.adj[j] >> (j + 1) << (j + 1)
            triangles += (g.adj[i] & above_j).bit_count()
    return GraphStats(
        vertex_count=g.vertex_count,
        edge_count=g.edge_count,
        degree_histogram=dict(sorted(hist.items())),
        component_count=len(comps),
        component_sizes=sizes,
        is_regular=len(hist) == 1,
        triangle_count=triangles,
    )


def is_bipartite_component_k33(g: CompatibilityGraph, component: int) -> bool:
    """True iff the component (vertex bitmask) is a K_{3,3}: 6 vertices,
    9 edges, bipartite with parts of size 3, every degree 3."""
    nodes = _bits(component)
    if len(nodes) != 6:
        return False
    inside = {v: g.adj[v] & component for v in nodes}
    if any(m.bit_count() != 3 for m in inside.values()):
        return False
    if sum(m.bit_count() for m in inside.values()) != 18:
        return False
    color = {nodes[0]: 0}
    stack = [nodes[0]]
    while stack:
        v = stack.pop()
        for w in _bits(inside[v]):
            if w in color:
                if color[w] == color[v]:
                    return False
            else:
                color[w] = 1 - color[v]
                stack.append(w)
    return sorted(sum(1 for v in nodes if color[v] == c) for c in (0, 1)) == [3, 3]
