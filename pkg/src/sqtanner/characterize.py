"""When does a pair of pair-labeled graphs carry a quantum Tanner code?

This module works with two delta^2-regular graphs g0, g1 whose local
views are labeled by pairs (a, b), a and b in 0..delta-1 (packed as
a * delta + b, so a local view reads as a delta x delta matrix of edge
ids), plus a bijection psi between their edge sets (default: positional
identity).

Three questions, in increasing strictness:

* condition_ii_check: do overlapping local views always meet in whole
  rows or whole columns, cell-aligned through psi?  This is exactly the
  condition under which the two Tanner codes form a CSS pair for every
  choice of local codes.
* swapping_condition_check: does psi act on every edge's label pair by
  exchanging the second components?  Edge records are ordered, and the
  check is positional: an edge (a,b)@p / (a',b')@q must map to an edge
  carrying (a',b) at its first endpoint and (a,b') at its second, the
  flipped storage order being accepted only when b != b' makes the flip
  detectable.  Degenerate labels therefore make the stored endpoint
  order significant; every construction in this package stores diagonal
  edges base-corner-first, which is the orientation this check expects.
* reconstruct_schreier_pair: under both checks, rebuild the square
  complex (one square per psi-matched edge pair) and split its underlying
  graph into the two labeled graphs whose diagonal construction returns
  (g0, g1, identity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf2
from .errors import (
    ConditionIIError,
    DimensionError,
    InvalidSpecError,
    SelfLoopError,
    SizeMismatchError,
    SwappingConditionError,
)
from .codes import CssCode, LinearCode, make_css, tanner_parity
from .gf2 import BitMatrix
from .graphs import Edge, LabeledGraph
from .squares import SquareComplex, build_complex, square_graphs


@dataclass(frozen=True)
class PsiMap:
    """A bijection edge-index -> edge-index between two edge sets."""

    image: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise InvalidSpecError("psi is not a bijection on edge indices")

    @classmethod
    def identity(cls, n_edges: int) -> "PsiMap":
        return cls(tuple(range(n_edges)))

    def __call__(self, i: int) -> int:
        return self.image[i]

    def compose_transposition(self, i: int, j: int) -> "PsiMap":
        """psi followed by swapping images i and j (a targeted mutation)."""
        img = list(self.image)
        img[i], img[j] = img[j], img[i]
        return PsiMap(tuple(img))


def _base_delta(g: LabeledGraph) -> int:
    d = math.isqrt(g.delta)
    if d * d != g.delta:
        raise DimensionError(f"degree {g.delta} is not a perfect square")
    return d


def _unpack(label: int, d: int) -> tuple[int, int]:
    return divmod(label, d)


def local_view_matrix(g: LabeledGraph, v: int) -> list[list[int]]:
    """The local view of v as a d x d grid of edge ids, entry (a, b) being
    the edge labeled (a, b) at v."""
    d = _base_delta(g)
    return [[g.out_edge(v, a * d + b)[1] for b in range(d)] for a in range(d)]


def _check_inputs(g0: LabeledGraph, g1: LabeledGraph, psi: Optional[PsiMap]) -> PsiMap:
    if g0.delta != g1.delta:
        raise DimensionError("the two graphs must share the same degree")
    _base_delta(g0)
    if g0.n != g1.n:
        raise SizeMismatchError("the two graphs must have the same vertex count")
    if len(g0.edges) != len(g1.edges):
        raise SizeMismatchError("edge counts differ")
    if g0.has_self_loop() or g1.has_self_loop():
        raise SelfLoopError("pair-labeled graphs with self-loops are not supported")
    if psi is None:
        psi = PsiMap.identity(len(g0.edges))
    if len(psi.image) != len(g0.edges):
        raise SizeMismatchError("psi length != edge count")
    return psi


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.ok


def condition_ii_check(
    g0: LabeledGraph, g1: LabeledGraph, psi: Optional[PsiMap] = None
) -> CheckResult:
    """Whole-rows-or-columns overlap condition between psi-images of g0
    local views and g1 local views.

    Returns ok=True, or ok=False with witness (v, w, overlap cells) for
    the smallest offending pair.
    """
    psi = _check_inputs(g0, g1, psi)
    d = _base_delta(g0)
    views1 = [local_view_matrix(g1, w) for w in range(g1.n)]
    cell_in_view1: list[dict[int, tuple[int, int]]] = [
        {view[a][b]: (a, b) for a in range(d) for b in range(d)} for view in views1
    ]
    views0 = [local_view_matrix(g0, v) for v in range(g0.n)]

    for v in range(g0.n):
        view0 = views0[v]
        pre: dict[int, tuple[int, int]] = {
            psi(view0[a][b]): (a, b) for a in range(d) for b in range(d)
        }
        touched: dict[int, set[int]] = {}
        for eid in pre:
            f = g1.edges[eid]
            touched.setdefault(f.u, set()).add(eid)
            touched.setdefault(f.v, set()).add(eid)
        for w, eids in sorted(touched.items()):
            cells = sorted(cell_in_view1[w][e] for e in eids)
            cell_set = set(cells)
            rows_hit = sorted({a for a, _ in cells})
            cols_hit = sorted({b for _, b in cells})
            full_rows = len(cells) == len(rows_hit) * d and all(
                (a, b) in cell_set for a in rows_hit for b in range(d)
            )
            full_cols = len(cells) == len(cols_hit) * d and all(
                (a, b) in cell_set for a in range(d) for b in cols_hit
            )
            aligned = False
            if full_rows:
                aligned = all(_row_aligned(views1[w], pre, a, d) for a in rows_hit)
            if not aligned and full_cols:
                aligned = all(_col_aligned(views1[w], pre, b, d) for b in cols_hit)
            if not aligned:
                return CheckResult(False, (v, w, tuple(cells)))
    return CheckResult(True)


def _row_aligned(view1, pre, a: int, d: int) -> bool:
    """Row a of view1 must be the psi-image of a single row of view0 with
    matching column positions."""
    if any(view1[a][b] not in pre for b in range(d)):
        return False
    source_rows = {pre[view1[a][b]][0] for b in range(d)}
    if len(source_rows) != 1:
        return False
    a0 = source_rows.pop()
    return all(pre[view1[a][b]] == (a0, b) for b in range(d))


def _col_aligned(view1, pre, b: int, d: int) -> bool:
    if any(view1[a][b] not in pre for a in range(d)):
        return False
    source_cols = {pre[view1[a][b]][1] for a in range(d)}
    if len(source_cols) != 1:
        return False
    b0 = source_cols.pop()
    return all(pre[view1[a][b]] == (a, b0) for a in range(d))


def swapping_condition_check(
    g0: LabeledGraph, g1: LabeledGraph, psi: Optional[PsiMap] = None
) -> CheckResult:
    """Per-edge second-component swap of label pairs through psi.

    For an edge with labels (a, b) at its first stored endpoint and
    (a', b') at its second, the psi-image must carry (a', b) first and
    (a, b') second; the flipped storage order is accepted only when
    b != b' (otherwise the flip is indistinguishable from a genuine
    violation, and the strict order decides).  Fails exactly on the
    edges whose labels are carried over unswapped.
    """
    psi = _check_inputs(g0, g1, psi)
    d = _base_delta(g0)
    for k, e in enumerate(g0.edges):
        a1, b1 = _unpack(e.lu, d)
        a2, b2 = _unpack(e.lv, d)
        f = g1.edges[psi(k)]
        m1, m2 = _unpack(f.lu, d), _unpack(f.lv, d)
        swap_first, swap_second = (a2, b1), (a1, b2)
        if (m1, m2) == (swap_first, swap_second):
            continue
        if (m1, m2) == (swap_second, swap_first) and b1 != b2:
            continue
        return CheckResult(False, (k, psi(k)))
    return CheckResult(True)


def general_qtanner_checks(
    g0: LabeledGraph,
    g1: LabeledGraph,
    psi: Optional[PsiMap],
    ca: LinearCode,
    cb: LinearCode,
) -> tuple[BitMatrix, BitMatrix]:
    """Raw (h0, h1) for arbitrary inputs, without any CSS validation.

    h1's columns are pulled back through psi so both matrices index
    qubits by g0's edge order.
    """
    psi = _check_inputs(g0, g1, psi)
    d = _base_delta(g0)
    if ca.n != d or cb.n != d:
        raise DimensionError(f"local codes must have length {d}")
    h0 = tanner_parity(g0, gf2.kron(ca.generator, cb.generator))
    reindexed = LabeledGraph(
        g1.n, g1.delta, [g1.edges[psi(j)] for j in range(len(g1.edges))]
    )
    h1 = tanner_parity(reindexed, gf2.kron(ca.parity, cb.parity))
    return h0, h1


def general_qtanner_css(
    g0: LabeledGraph,
    g1: LabeledGraph,
    psi: Optional[PsiMap],
    ca: LinearCode,
    cb: LinearCode,
    force: bool = False,
) -> CssCode:
    """CSS code from any pair satisfying the overlap condition.

    Unless forced, refuses inputs failing condition_ii_check (for such
    inputs some local codes break orthogonality); the CSS identity is
    then validated on the produced matrices either way.
    """
    if not force:
        res = condition_ii_check(g0, g1, psi)
        if not res:
            raise ConditionIIError(
                f"row/column overlap condition fails at {res.witness[:2]}",
                witness=res.witness,
            )
    h0, h1 = general_qtanner_checks(g0, g1, psi, ca, cb)
    return make_css(h0, h1)


# ---------------------------------------------------------------------------
# reconstruction (the reverse direction)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Reconstruction:
    a_graph: LabeledGraph
    b_graph: LabeledGraph
    partition: tuple[int, ...]
    complex: SquareComplex


def reconstruct_schreier_pair(
    g0: LabeledGraph, g1: LabeledGraph, psi: Optional[PsiMap] = None
) -> Reconstruction:
    """Rebuild a commuting pair whose diagonal construction gives (g0, g1).

    Requires both the overlap condition and the swapping condition; then
    every edge e = (a,b)@p, (a',b')@q with image (a',b)@w, (a,b')@w' is
    glued into one square on corners (p,0), (q,0), (w,1), (w',1), equal
    vertices and equally-labeled parallel edges are identified, and the
    underlying graph splits into the first-component-labeled and
    second-component-labeled graphs.
    """
    psi = _check_inputs(g0, g1, psi)
    res = condition_ii_check(g0, g1, psi)
    if not res:
        raise ConditionIIError(
            f"row/column overlap condition fails at {res.witness[:2]}",
            witness=res.witness,
        )
    res = swapping_condition_check(g0, g1, psi)
    if not res:
        raise SwappingConditionError(
            f"swapping condition fails on edge pair {res.witness}", witness=res.witness
        )
    d = _base_delta(g0)
    n0 = g0.n

    a_out: dict[tuple[int, int], tuple[int, int]] = {}
    b_out: dict[tuple[int, int], tuple[int, int]] = {}

    def add(table, side0_vertex: int, label: int, side1_vertex: int, far_label: int, kind: str):
        key = (side0_vertex, label)
        val = (side1_vertex, far_label)
        if table.get(key, val) != val:
            raise InvalidSpecError(
                f"reconstruction clash: {kind}-edges at vertex {side0_vertex} "
                f"label {label} disagree"
            )
        table[key] = val

    for k, e in enumerate(g0.edges):
        a1, b1 = _unpack(e.lu, d)
        a2, b2 = _unpack(e.lv, d)
        f = g1.edges[psi(k)]
        m1 = _unpack(f.lu, d)
        if m1 == (a2, b1):
            w, wp = f.u, f.v
        else:
            w, wp = f.v, f.u
        # two A-edges and two B-edges per square, keyed by their side-0 end
        add(a_out, e.u, a1, w, a2, "A")
        add(a_out, e.v, a2, wp, a1, "A")
        add(b_out, e.u, b1, wp, b2, "B")
        add(b_out, e.v, b2, w, b1, "B")

    def graph_from(table, kind: str) -> LabeledGraph:
        edges = []
        for p in range(n0):
            for lab in range(d):
                if (p, lab) not in table:
                    raise InvalidSpecError(
                        f"reconstruction incomplete: no {kind}-edge at vertex {p} "
                        f"label {lab}"
                    )
                q, far = table[(p, lab)]
                edges.append(Edge(p, n0 + q, lab, far))
        return LabeledGraph(n0 + g1.n, d, edges, partition=[0] * n0 + [1] * g1.n)

    a_graph = graph_from(a_out, "A")
    b_graph = graph_from(b_out, "B")
    x = build_complex(a_graph, b_graph, a_graph.partition)
    return Reconstruction(
        a_graph=a_graph, b_graph=b_graph, partition=a_graph.partition, complex=x
    )


def diagonal_pair_form(
    g0: LabeledGraph, g1: LabeledGraph, psi: Optional[PsiMap] = None
) -> tuple:
    """Canonical, order-insensitive form of (g0, g1, psi) for round-trip
    comparisons: the sorted multiset of psi-matched normalized edge pairs."""
    psi = _check_inputs(g0, g1, psi)

    def norm(e: Edge) -> tuple:
        return (e.u, e.v, e.lu, e.lv) if (e.u, e.lu) <= (e.v, e.lv) else (e.v, e.u, e.lv, e.lu)

    pairs = sorted(
        (norm(e), norm(g1.edges[psi(k)])) for k, e in enumerate(g0.edges)
    )
    return (g0.n, g1.n, g0.delta, tuple(pairs))


# ---------------------------------------------------------------------------
# the strictness witness
# ---------------------------------------------------------------------------


def example_red_nonempty() -> tuple[LabeledGraph, PsiMap]:
    """A 3-vertex, 4-regular pair-labeled graph where the overlap condition
    holds with the identity bijection but the swapping condition fails.

    Each arrow v -> v+1 carries (a0, b_i) at its source and (a1, b_i) at
    its target, i in {0, 1}; using the graph against itself with the
    identity bijection keeps every label pair fixed while the two labels
    of each edge differ in their first component.
    """
    d = 2
    edges = []
    for v in range(3):
        for j in range(2):
            edges.append(Edge(v, (v + 1) % 3, 0 * d + j, 1 * d + j))
    g = LabeledGraph(3, 4, edges)
    return g, PsiMap.identity(len(edges))
