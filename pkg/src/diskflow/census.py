"""Enumerate the diagram census for n boundary nodes.

A diagram is a set of n/2-1 pairwise-compatible touching lines, i.e. a
maximal clique of the compatibility graph.  Three independent enumerators
are provided:

  enumerate_diagrams      the production path: depth-first search over
                          vertices grouped by touch node in increasing
                          order, with bitset candidate intersection and
                          exact-size pruning (every maximal clique has
                          size n/2-1, so size-(n/2-1) cliques are exactly
                          the maximal cliques);
  maximal_cliques_generic a pivoting Bron-Kerbosch enumeration making no
                          size assumption, used to verify the uniform
                          clique size on small n;
  oracle_enumerate        an unoptimized recursive generator that builds
                          every diagram by splitting the disk along a
                          touching line, written directly from the
                          counting recurrences.  Set equality between the
                          oracle and the clique census is the decisive
                          cross-check of the edge rules.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from . import combinat
from .geometry import TouchLine, node_mod
from .graph import COMPATIBILITY, build_graph, compatible

Diagram = tuple  # tuple of TouchLine, sorted

GENERIC_BOUND = 10
ORACLE_BOUND = 10


class CensusError(RuntimeError):
    """A discovered clique contradicts the uniform-size guarantee."""


@dataclass
class CensusResult:
    n: int
    count: int
    enumerator: str
    elapsed: float
    size_histogram: dict[int, int] = field(default_factory=dict)


def diagram_size(n: int) -> int:
    return n // 2 - 1


def b_nodes(d: Diagram) -> frozenset[int]:
    return frozenset(v[0] for v in d)


def a_nodes(d: Diagram, n: int) -> frozenset[int]:
    return frozenset(range(1, n + 1)) - b_nodes(d)


def validate_diagram(n: int, lines: list[tuple[int, int, int]]) -> Diagram:
    """Check all diagram invariants; return the canonical sorted tuple."""
    from .geometry import make_touch_line

    if n % 2 or n < 2:
        raise ValueError(f"node count must be even and >= 2, got {n}")
    if len(lines) != diagram_size(n):
        raise ValueError(f"expected {diagram_size(n)} lines for n={n}, got {len(lines)}")
    vs = sorted(make_touch_line(a, p, q, n) for a, p, q in lines)
    touches = [v.a for v in vs]
    if len(set(touches)) != len(touches):
        raise ValueError(f"duplicate touch node among {touches}: two lines tangent at one node")
    for v1, v2 in combinations(vs, 2):
        if not compatible(v1, v2, n):
            raise ValueError(f"incompatible line pair {tuple(v1)} / {tuple(v2)}")
    return tuple(vs)


# ---------------------------------------------------------------------------
# specialized fixed-size clique search
# ---------------------------------------------------------------------------

def _adjacency_tables(n: int):
    g = build_graph(n, COMPATIBILITY)
    V = g.vertex_count
    adj = list(g.adj)
    adj_gt = [adj[i] >> (i + 1) << (i + 1) for i in range(V)]
    blocks = []
    for a in range(1, n + 1):
        mask = 0
        for i, v in enumerate(g.vertices):
            if v.a == a:
                mask |= 1 << i
        blocks.append(mask)
    return g, adj, adj_gt, blocks


def _spans_blocks(P: int, blocks: list[int], need: int) -> bool:
    """True iff candidates in P cover at least `need` distinct touch nodes."""
    c = 0
    for bm in blocks:
        if P & bm:
            c += 1
            if c == need:
                return True
    return False


def _count_extensions(P: int, needed: int, adj_gt: list[int], blocks: list[int]) -> int:
    total = 0
    Pi = P
    while Pi:
        b = Pi & -Pi
        Pi ^= b
        v = b.bit_length() - 1
        P2 = P & adj_gt[v]
        if needed == 2:
            total += P2.bit_count()
        elif P2.bit_count() >= needed - 1 and _spans_blocks(P2, blocks, needed - 1):
            total += _count_extensions(P2, needed - 1, adj_gt, blocks)
    return total


def _emit_extensions(P, needed, chosen, common, emit, verts, adj, adj_gt, blocks, check_max):
    Pi = P
    while Pi:
        b = Pi & -Pi
        Pi ^= b
        v = b.bit_length() - 1
        chosen.append(v)
        if needed == 1:
            if check_max and common & adj[v]:
                raise CensusError(
                    f"clique {[tuple(verts[i]) for i in chosen]} is extendable: "
                    "a maximal clique larger than n/2-1 exists")
            emit(tuple(verts[i] for i in chosen))
        else:
            P2 = P & adj_gt[v]
            if P2.bit_count() >= needed - 1 and _spans_blocks(P2, blocks, needed - 1):
                _emit_extensions(P2, needed - 1, chosen, common & adj[v],
                                 emit, verts, adj, adj_gt, blocks, check_max)
        chosen.pop()


def enumerate_diagrams(n: int, sink=None, verify_maximal: bool | None = None) -> CensusResult:
    """Emit every diagram exactly once, in canonical order, and count them.

    `sink`, if given, receives each diagram as a sorted tuple of TouchLine.
    `verify_maximal` additionally asserts that no emitted clique extends to
    a larger one (defaults to on for n <= 10); a violation raises
    CensusError, since it would contradict the uniform clique size that the
    whole search relies on.
    """
    if n % 2 or n < 2:
        raise ValueError(f"node count must be even and >= 2, got {n}")
    t0 = time.perf_counter()
    if n == 2:
        # no touching lines at all; the single empty diagram
        if sink is not None:
            sink(())
        return CensusResult(2, 1, "specialized", time.perf_counter() - t0, {0: 1})
    if verify_maximal is None:
        verify_maximal = n <= 10
    g, adj, adj_gt, blocks = _adjacency_tables(n)
    m = diagram_size(n)
    full = (1 << g.vertex_count) - 1
    count = 0
    if sink is None and not verify_maximal:
        if m == 1:
            count = g.vertex_count
        else:
            count = _count_extensions(full, m, adj_gt, blocks)
    else:
        got = []

        def emit(d):
            nonlocal count
            count += 1
            if sink is not None:
                sink(d)

        _emit_extensions(full, m, [], full, emit, g.vertices, adj, adj_gt, blocks,
                         verify_maximal)
    return CensusResult(n, count, "specialized", time.perf_counter() - t0, {m: count})


def collect_diagrams(n: int) -> list[Diagram]:
    out: list[Diagram] = []
    enumerate_diagrams(n, sink=out.append)
    return out


# ---------------------------------------------------------------------------
# parallel counting (the search tree is partitioned by the first line)
# ---------------------------------------------------------------------------

_worker_state: dict = {}


def _init_worker(n, adj_gt, blocks, m):
    _worker_state.update(n=n, adj_gt=adj_gt, blocks=blocks, m=m)


def _count_root(root: int) -> int:
    adj_gt = _worker_state["adj_gt"]
    m = _worker_state["m"]
    if m == 1:
        return 1
    P = adj_gt[root]
    if not P:
        return 0
    if m == 2:
        return P.bit_count()
    blocks = _worker_state["blocks"]
    if P.bit_count() < m - 1 or not _spans_blocks(P, blocks, m - 1):
        return 0
    return _count_extensions(P, m - 1, adj_gt, blocks)


def count_diagrams(n: int, workers: int = 1) -> CensusResult:
    """Count diagrams without materializing them; workers > 1 forks a pool."""
    if workers <= 1 or n <= 4:
        return enumerate_diagrams(n, verify_maximal=False)
    import multiprocessing as mp

    t0 = time.perf_counter()
    g, adj, adj_gt, blocks = _adjacency_tables(n)
    m = diagram_size(n)
    ctx = mp.get_context("fork")
    with ctx.Pool(workers, initializer=_init_worker, initargs=(n, adj_gt, blocks, m)) as pool:
        count = sum(pool.imap_unordered(_count_root, range(g.vertex_count), chunksize=8))
    return CensusResult(n, count, "specialized", time.perf_counter() - t0, {m: count})


# ---------------------------------------------------------------------------
# generic maximal-clique enumeration (pivoting Bron-Kerbosch)
# ---------------------------------------------------------------------------

def maximal_cliques_generic(n: int, sink=None, bound: int = GENERIC_BOUND) -> CensusResult:
    """Enumerate ALL maximal cliques with no size assumption.

    Exponential in general; guarded by `bound` (the uniform-size theorem is
    exactly what this enumerator is meant to double-check, so it must not
    assume it).
    """
    if n % 2 or n < 2:
        raise ValueError(f"node count must be even and >= 2, got {n}")
    if n > bound:
        raise ValueError(f"generic enumeration bounded to n <= {bound}, got {n}")
    t0 = time.perf_counter()
    if n == 2:
        if sink is not None:
            sink(())
        return CensusResult(2, 1, "generic", time.perf_counter() - t0, {0: 1})
    g = build_graph(n, COMPATIBILITY)
    adj = g.adj
    verts = g.vertices
    hist: dict[int, int] = {}
    count = 0

    def bk(R: list[int], P: int, X: int):
        nonlocal count
        if not P and not X:
            count += 1
            hist[len(R)] = hist.get(len(R), 0) + 1
            if sink is not None:
                sink(tuple(verts[i] for i in R))
            return
        PX = P | X
        pivot = -1
        best = -1
        Pi = PX
        while Pi:
            b = Pi & -Pi
            Pi ^= b
            u = b.bit_length() - 1
            deg = (P & adj[u]).bit_count()
            if deg > best:
                best, pivot = deg, u
        cand = P & ~adj[pivot]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            R.append(v)
            bk(R, P & adj[v], X & adj[v])
            R.pop()
            P ^= b
            X |= b
    bk([], (1 << g.vertex_count) - 1, 0)
    return CensusResult(n, count, "generic", time.perf_counter() - t0,
                        dict(sorted(hist.items())))


# ---------------------------------------------------------------------------
# recursive oracle
# ---------------------------------------------------------------------------
#
# Every diagram arises exactly once from the case split on node 1:
#
#  * node 1 is a source: recurse on the full node arc 2..n with node 1 as
#    the distinguished source;
#  * node 1 is a touch node: its line (1, p, q) cuts the disk into three
#    sub-disks carrying the node arcs (2..p-1), (p..q) and (q+1..n), each
#    with one new distinguished source node born from the cut.
#
# A sub-disk is represented by its contiguous arc of original labels; the
# newborn node is implicit.  When a generated line has the newborn in a
# nearest-node slot it resolves to the first original node beyond the cut:
# arc_end + 1 for the p slot and arc_start - 1 for the q slot (mod n).
# The distinguished-source recursion in turn splits along the unique line
# whose region around the source holds no other node; the three placements
# of that line each pair an even split of the remaining arc.

def oracle_enumerate(n: int, bound: int = ORACLE_BOUND) -> set[Diagram]:
    """All diagrams for n nodes via the recursive disk-splitting construction."""
    if n % 2 or n < 2:
        raise ValueError(f"node count must be even and >= 2, got {n}")
    if n > bound:
        raise ValueError(f"oracle bounded to n <= {bound}, got {n}")
    if n == 2:
        return {()}

    @lru_cache(maxsize=None)
    def d0(arc: tuple[int, ...]) -> tuple[frozenset, ...]:
        """Diagrams of the sub-disk (marked newborn source + arc), as line sets."""
        s = len(arc) + 1
        if s == 2:
            return (frozenset(),)
        pres = node_mod(arc[-1] + 1, n)
        qres = node_mod(arc[0] - 1, n)
        out = []
        # source sits in a near region on the q side of the split line
        for qp in range(2, s - 1, 2):
            lam = TouchLine(arc[s - 2], arc[0], arc[qp - 2])
            for dF in d0(arc[0:qp - 1]):
                for dM in d0(arc[qp - 1:s - 2]):
                    out.append(dF | dM | {lam})
        # source sits in a near region on the p side
        for pp in range(4, s + 1, 2):
            lam = TouchLine(arc[0], arc[pp - 2], arc[s - 2])
            for dL in d0(arc[1:pp - 2]):
                for dF in d0(arc[pp - 2:s - 1]):
                    out.append(dL | dF | {lam})
        # source alone in the far region: both nearest slots are the newborn
        for ap in range(3, s, 2):
            lam = TouchLine(arc[ap - 2], pres, qres)
            for dM in d0(arc[0:ap - 2]):
                for dL in d0(arc[ap - 1:s - 1]):
                    out.append(dM | dL | {lam})
        return tuple(out)

    diagrams: set[Diagram] = set()
    for ls in d0(tuple(range(2, n + 1))):
        diagrams.add(tuple(sorted(ls)))
    for p in range(3, n, 2):
        for q in range(p, n, 2):
            lam = TouchLine(1, p, q)
            for dL in d0(tuple(range(2, p))):
                for dF in d0(tuple(range(p, q + 1))):
                    for dM in d0(tuple(range(q + 1, n + 1))):
                        diagrams.add(tuple(sorted(dL | dF | dM | {lam})))
    d0.cache_clear()
    return diagrams


# ---------------------------------------------------------------------------
# per-line multiplicities and the touch-node distribution
# ---------------------------------------------------------------------------

def vertex_multiplicity(v: TouchLine, n: int) -> int:
    """Number of diagrams containing the line: 3^(n/2-2) * C_(k/2-1)C_(l/2-1)C_(m/2-1)
    with (k, l, m) the sub-disk sizes from region_sizes."""
    from .geometry import region_sizes

    if n % 2 or n < 4:
        raise ValueError(f"node count must be even and >= 4, got {n}")
    k, l, m = region_sizes(v, n)
    return (3 ** (n // 2 - 2) * combinat.catalan(k // 2 - 1)
            * combinat.catalan(l // 2 - 1) * combinat.catalan(m // 2 - 1))


def b_node_distribution(n: int, include_zero: bool | None = None) -> dict[frozenset[int], int]:
    """Diagram counts grouped by the set of touch nodes.

    Key space is the (n/2-1)-subsets of nodes; subsets admitting no diagram
    are reported with count 0 for n <= 10 and omitted for larger n (the
    default), to keep the output bounded.
    """
    if include_zero is None:
        include_zero = n <= 10
    counts: dict[frozenset[int], int] = {}
    if include_zero:
        for sub in combinations(range(1, n + 1), diagram_size(n)):
            counts[frozenset(sub)] = 0

    def tally(d):
        key = b_nodes(d)
        counts[key] = counts.get(key, 0) + 1

    enumerate_diagrams(n, sink=tally)
    return counts
