"""Square complexes from a commuting graph pair, and their diagonal graphs.

Given two delta-regular graphs A and B on the same vertex set, commuting,
with no overlapping edges and both bipartite on a common partition, every
triple (v on side 0, a-label, b-label) spans a unique square

        (w', 1) ---e2--- (v', 0)
           |                |
          e3               e4
           |                |
        (v, 0)  ---e1--- (w, 1)

with e1, e2 from A and e3, e4 from B, where the label of e1 at v is a,
the label of e3 at v is b, the label of e2 at w' equals a, and the label
of e4 at w equals b.  The two base corners (v, a, b) and (v', a2, b2)
describe the same square with its edge pairs swapped; each square is
stored once under a canonical representative.

Each square contributes one edge to each diagonal graph: side-0 corners
(v, v') become an edge of the first diagonal graph, side-1 corners
(w, w') one of the second.  Diagonal edges are indexed by their square,
so the two diagonal graphs come out aligned position-by-position.

Label conventions for the diagonal graphs (the main foot-gun, spelled
out against the square above):

* first diagonal graph, edge (v, v'): label (a, b) at v, and at v' the
  pair (label of e2 at v', label of e4 at v');
* second diagonal graph, edge (w, w'): at w the pair (label of e1 at w,
  label of e4 at w), at w' the pair (label of e2 at w', label of e3 at
  w').

A pair label (x, y) with x, y in 0..delta-1 is packed into the single
index x * delta + y, matching the row-major flattening used for tensor
codes, so slot j of a local view corresponds to column j of a Kronecker
product of two delta-column matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .errors import (
    DegreeMismatchError,
    NonCommutingError,
    NotBipartiteError,
    OverlappingEdgesError,
    PairingIncompatibleError,
    SizeMismatchError,
)
from .graphs import Edge, LabeledGraph, commute_check, inverse_pair_compat, overlap_check


class Square(NamedTuple):
    """One square: base corner, far corners, labels and the four edge ids."""

    v: int
    w: int
    wp: int
    vp: int
    a: int
    b: int
    e1: int
    e2: int
    e3: int
    e4: int


@dataclass(frozen=True)
class SquareComplex:
    """Vertices V0 | V1, the two tagged edge sets, and the canonical squares."""

    a: LabeledGraph
    b: LabeledGraph
    partition: tuple[int, ...]
    v0: tuple[int, ...]
    v1: tuple[int, ...]
    squares: tuple[Square, ...]

    @property
    def delta(self) -> int:
        return self.a.delta

    @property
    def n_squares(self) -> int:
        return len(self.squares)


def build_complex(
    a: LabeledGraph, b: LabeledGraph, partition: Optional[Sequence[int]] = None
) -> SquareComplex:
    """Assemble the square complex of a commuting pair.

    Preconditions, each with its own error: same vertex set, equal
    degrees, commuting permutations, no overlapping edges, both graphs
    bipartite on the partition, and matching inverse-pair multisets
    along edges.  Squares are enumerated base-vertex-major, then by
    a-label, then b-label, keeping the representative whose (e1, e3)
    pair is lexicographically smallest.
    """
    if a.n != b.n:
        raise SizeMismatchError(f"vertex sets differ: {a.n} vs {b.n}")
    if a.delta != b.delta:
        raise DegreeMismatchError(f"degrees differ: {a.delta} vs {b.delta}")
    if partition is None:
        partition = a.partition if a.partition is not None else b.partition
    if partition is None:
        raise NotBipartiteError("no partition given and none attached to the graphs")
    partition = tuple(partition)
    if not commute_check(a, b):
        raise NonCommutingError("the two graphs do not commute")
    overlap = overlap_check(a, b)
    if overlap:
        raise OverlappingEdgesError(f"graphs share edges on vertex pairs {overlap[:5]}")
    if not a.is_bipartite_on(partition):
        raise NotBipartiteError("first graph is not bipartite on the partition")
    if not b.is_bipartite_on(partition):
        raise NotBipartiteError("second graph is not bipartite on the partition")
    if not inverse_pair_compat(a, b):
        raise PairingIncompatibleError("inverse-pair multisets differ along some edge")

    v0 = tuple(v for v in range(a.n) if partition[v] == 0)
    v1 = tuple(v for v in range(a.n) if partition[v] == 1)
    delta = a.delta

    squares: list[Square] = []
    seen: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    for v in v0:
        for la in range(delta):
            for lb in range(delta):
                w, e1 = a.out_edge(v, la)
                wp, e3 = b.out_edge(v, lb)
                vp, e2 = a.out_edge(wp, la)
                vp2, e4 = b.out_edge(w, lb)
                if vp != vp2:
                    raise NonCommutingError(
                        f"square at (v={v}, a={la}, b={lb}) does not close"
                    )
                key = ((e1, e3), (e2, e4)) if (e1, e3) <= (e2, e4) else ((e2, e4), (e1, e3))
                if key in seen:
                    continue
                seen.add(key)
                if (e1, e3) <= (e2, e4):
                    squares.append(Square(v, w, wp, vp, la, lb, e1, e2, e3, e4))
                else:
                    # canonical representative is the partner orientation
                    la2 = a.edges[e2].lu if a.edges[e2].u == vp else a.edges[e2].lv
                    lb2 = b.edges[e4].lu if b.edges[e4].u == vp else b.edges[e4].lv
                    squares.append(Square(vp, wp, w, v, la2, lb2, e2, e1, e4, e3))

    expected = len(v0) * delta * delta
    if expected % 2 != 0 or len(squares) != expected // 2:
        raise NonCommutingError(
            f"square count {len(squares)} != |V0| delta^2 / 2 = {expected / 2:g}"
        )
    return SquareComplex(a=a, b=b, partition=partition, v0=v0, v1=v1, squares=tuple(squares))


def square_graphs(x: SquareComplex) -> tuple[LabeledGraph, LabeledGraph]:
    """The two diagonal graphs, edge i of each coming from square i.

    Vertices are reindexed 0..|V0|-1 and 0..|V1|-1 in increasing order of
    the original ids; labels are packed (a, b) pairs (see module
    docstring).  Both outputs are delta^2-regular and well-labeled, and
    loop-free thanks to the no-overlap precondition.
    """
    d = x.delta
    idx0 = {v: i for i, v in enumerate(x.v0)}
    idx1 = {v: i for i, v in enumerate(x.v1)}

    def a_at(eid: int, vert: int) -> int:
        return x.a.label_pair(eid, vert)[0]

    def b_at(eid: int, vert: int) -> int:
        return x.b.label_pair(eid, vert)[0]

    e0: list[Edge] = []
    e1: list[Edge] = []
    for sq in x.squares:
        lab_v = sq.a * d + sq.b
        lab_vp = a_at(sq.e2, sq.vp) * d + b_at(sq.e4, sq.vp)
        e0.append(Edge(idx0[sq.v], idx0[sq.vp], lab_v, lab_vp))
        lab_w = a_at(sq.e1, sq.w) * d + b_at(sq.e4, sq.w)
        lab_wp = a_at(sq.e2, sq.wp) * d + b_at(sq.e3, sq.wp)
        e1.append(Edge(idx1[sq.w], idx1[sq.wp], lab_w, lab_wp))
    g0 = LabeledGraph(len(x.v0), d * d, e0)
    g1 = LabeledGraph(len(x.v1), d * d, e1)
    return g0, g1


def complex_to_dict(x: SquareComplex) -> dict:
    """JSON-ready dump: vertices with sides, tagged edges, squares as
    4-tuples of edge ids (A-edge, A-edge, B-edge, B-edge)."""
    return {
        "n": x.a.n,
        "delta": x.delta,
        "partition": list(x.partition),
        "a_edges": [list(e) for e in x.a.edges],
        "b_edges": [list(e) for e in x.b.edges],
        "squares": [[sq.e1, sq.e2, sq.e3, sq.e4] for sq in x.squares],
    }
