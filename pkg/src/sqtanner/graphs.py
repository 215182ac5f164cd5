"""Labeled regular multigraphs, Schreier/Cayley constructors, and checks.

The central representation is :class:`LabeledGraph`: an undirected
multigraph stored as edge records ``(u, v, lu, lv)``, meaning the edge
carries label ``lu`` in the local view of ``u`` and ``lv`` in the local
view of ``v``.  Equivalently, the directed view has an arc ``u -> v``
labeled ``lu`` paired with the arc ``v -> u`` labeled ``lv``.  A record
with ``u == v`` and ``lu == lv`` is a half-paired self-loop occupying a
single slot of the local view; ``u == v`` with ``lu != lv`` is a loop
occupying two slots.

Labels are opaque 0-based indices ``0..delta-1``; group-element semantics
live only in :class:`GroupTable` and the Cayley constructors.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .errors import (
    DegreeMismatchError,
    InvalidSpecError,
    NonCommutingError,
    SizeMismatchError,
    UnsupportedError,
)


class Edge(NamedTuple):
    u: int
    v: int
    lu: int
    lv: int

    def is_loop(self) -> bool:
        return self.u == self.v

    def is_half_loop(self) -> bool:
        return self.u == self.v and self.lu == self.lv


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------


def is_permutation(image: Sequence[int]) -> bool:
    n = len(image)
    return sorted(image) == list(range(n))


def perm_inverse(image: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(image)
    for i, j in enumerate(image):
        out[j] = i
    return tuple(out)


def perm_compose(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    """The permutation v -> p(q(v))."""
    return tuple(p[q[v]] for v in range(len(q)))


def perms_commute(p: Sequence[int], q: Sequence[int]) -> bool:
    return all(p[q[v]] == q[p[v]] for v in range(len(p)))


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

_FULL_ASSOC_LIMIT = 64
_ASSOC_SAMPLES = 1000


@dataclass(frozen=True)
class GroupTable:
    """A finite group given by its multiplication table.

    Elements are 0-based indices; ``mul[a][b]`` is the product a*b.
    Associativity is verified exhaustively up to order 64 and on 1000
    random triples above that.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...] = field(init=False)
    identity: int = field(init=False)

    def __post_init__(self):
        n = self.order
        if len(self.mul) != n or any(len(row) != n for row in self.mul):
            raise InvalidSpecError("multiplication table must be order x order")
        ident = None
        for e in range(n):
            if all(self.mul[e][x] == x and self.mul[x][e] == x for x in range(n)):
                ident = e
                break
        if ident is None:
            raise InvalidSpecError("no identity element in table")
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.mul[a][b] == ident and self.mul[b][a] == ident:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise InvalidSpecError(f"element {a} has no inverse")
        if n <= _FULL_ASSOC_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(0)
            triples = (
                (rng.randrange(n), rng.randrange(n), rng.randrange(n))
                for _ in range(_ASSOC_SAMPLES)
            )
        for a, b, c in triples:
            if self.mul[self.mul[a][b]][c] != self.mul[a][self.mul[b][c]]:
                raise InvalidSpecError(f"table is not associative at ({a},{b},{c})")
        object.__setattr__(self, "inv", tuple(inv))
        object.__setattr__(self, "identity", ident)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise InvalidSpecError("cyclic group order must be >= 1")
    return GroupTable(n, tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def dihedral_group(n: int) -> GroupTable:
    """Dihedral group of order 2n; element r^i s^f encoded as i + n*f."""
    if n < 1:
        raise InvalidSpecError("dihedral parameter must be >= 1")

    def mul(x: int, y: int) -> int:
        i, f = x % n, x // n
        j, g = y % n, y // n
        # (r^i s^f)(r^j s^g) = r^(i + j*(-1)^f) s^(f+g)
        k = (i + (j if f == 0 else -j)) % n
        return k + n * ((f + g) % 2)

    return GroupTable(2 * n, tuple(tuple(mul(a, b) for b in range(2 * n)) for a in range(2 * n)))


# ---------------------------------------------------------------------------
# Schreier specifications
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SchreierSpec:
    """A group action presented as one permutation per label, plus an
    involution pairing each label with the label carrying its inverse."""

    n_vertices: int
    perms: tuple[tuple[int, ...], ...]
    pairing: tuple[int, ...]

    def __post_init__(self):
        n, d = self.n_vertices, len(self.perms)
        for a, p in enumerate(self.perms):
            if len(p) != n or not is_permutation(p):
                raise InvalidSpecError(f"perms[{a}] is not a permutation of 0..{n - 1}")
        if len(self.pairing) != d:
            raise InvalidSpecError(f"pairing must have {d} entries, got {len(self.pairing)}")
        for a, b in enumerate(self.pairing):
            if not (0 <= b < d) or self.pairing[b] != a:
                raise InvalidSpecError("pairing is not an involution on the labels")
            if self.perms[b] != perm_inverse(self.perms[a]):
                raise InvalidSpecError(
                    f"perm[{b}] is not the inverse of perm[{a}] but pairing says so"
                )

    @property
    def delta(self) -> int:
        return len(self.perms)


# ---------------------------------------------------------------------------
# labeled graphs
# ---------------------------------------------------------------------------


class LabeledGraph:
    """A delta-regular well-labeled multigraph (see module docstring).

    Immutable after construction.  ``partition`` is an optional 0/1 side
    per vertex; when every edge crosses sides, edge records are expected
    to be oriented side-0 endpoint first (all constructors here do that).
    """

    __slots__ = ("n", "delta", "edges", "partition", "_out")

    def __init__(
        self,
        n: int,
        delta: int,
        edges: Sequence[Edge | tuple],
        partition: Optional[Sequence[int]] = None,
        validate: bool = True,
    ):
        self.n = n
        self.delta = delta
        self.edges: tuple[Edge, ...] = tuple(Edge(*e) for e in edges)
        self.partition = None if partition is None else tuple(partition)
        if self.partition is not None:
            if len(self.partition) != n:
                raise InvalidSpecError("partition length != vertex count")
            if any(s not in (0, 1) for s in self.partition):
                raise InvalidSpecError("partition entries must be 0 or 1")
        out: dict[tuple[int, int], tuple[int, int]] = {}
        in_count: dict[tuple[int, int], int] = {}
        for idx, e in enumerate(self.edges):
            arcs = [(e.u, e.v, e.lu)] if e.is_half_loop() else [(e.u, e.v, e.lu), (e.v, e.u, e.lv)]
            for src, dst, lab in arcs:
                if not (0 <= src < n and 0 <= dst < n):
                    raise InvalidSpecError(f"edge {idx} references a vertex out of range")
                if not (0 <= lab < delta):
                    raise InvalidSpecError(f"edge {idx} label {lab} out of range")
                key = (src, lab)
                if validate and key in out:
                    raise InvalidSpecError(
                        f"vertex {src} has two out-edges labeled {lab}: not well-labeled"
                    )
                out[key] = (dst, idx)
                in_count[(dst, lab)] = in_count.get((dst, lab), 0) + 1
        if validate:
            for v in range(n):
                for lab in range(delta):
                    if (v, lab) not in out:
                        raise InvalidSpecError(
                            f"vertex {v} has no out-edge labeled {lab}: not well-labeled"
                        )
                    if in_count.get((v, lab), 0) != 1:
                        raise InvalidSpecError(
                            f"vertex {v} has {in_count.get((v, lab), 0)} in-edges "
                            f"labeled {lab}: not well-labeled"
                        )
        self._out = out

    # -- structure queries ----------------------------------------------

    def out_edge(self, v: int, label: int) -> tuple[int, int]:
        """(neighbor, edge index) of the arc leaving v with the given label."""
        return self._out[(v, label)]

    def label_pair(self, idx: int, at_vertex: int) -> tuple[int, int]:
        """(label here, label at far end) of edge idx as seen from at_vertex."""
        e = self.edges[idx]
        if at_vertex == e.u:
            return (e.lu, e.lv)
        if at_vertex == e.v:
            return (e.lv, e.lu)
        raise InvalidSpecError(f"vertex {at_vertex} is not an endpoint of edge {idx}")

    def permutations(self) -> tuple[tuple[int, ...], ...]:
        """The label permutations v -> out-neighbor; defined for any
        well-labeled graph."""
        return tuple(
            tuple(self._out[(v, lab)][0] for v in range(self.n)) for lab in range(self.delta)
        )

    def has_self_loop(self) -> bool:
        return any(e.is_loop() for e in self.edges)

    def adjacency(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=np.int64)
        for e in self.edges:
            if e.is_half_loop():
                m[e.u, e.u] += 1
            else:
                m[e.v, e.u] += 1
                m[e.u, e.v] += 1
        return m

    def endpoint_pairs(self) -> set[tuple[int, int]]:
        return {(min(e.u, e.v), max(e.u, e.v)) for e in self.edges}

    def components(self) -> list[list[int]]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.edges:
            ru, rv = find(e.u), find(e.v)
            if ru != rv:
                parent[ru] = rv
        groups: dict[int, list[int]] = {}
        for v in range(self.n):
            groups.setdefault(find(v), []).append(v)
        return sorted(groups.values())

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def two_coloring(self) -> Optional[list[int]]:
        """A proper 2-coloring if the graph is bipartite, else None."""
        color = [-1] * self.n
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            if e.is_loop():
                return None
            adj[e.u].append(e.v)
            adj[e.v].append(e.u)
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                v = stack.pop()
                for w in adj[v]:
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        stack.append(w)
                    elif color[w] == color[v]:
                        return None
        return color

    def is_bipartite_on(self, partition: Sequence[int]) -> bool:
        """Whether every edge crosses the given 0/1 partition."""
        return all(partition[e.u] != partition[e.v] for e in self.edges)

    def canonical_edge_order(self) -> tuple[Edge, ...]:
        """Edges sorted by (min endpoint, max endpoint, label at min endpoint),
        parallel ties broken by stored order."""

        def key(item):
            i, e = item
            if e.u <= e.v:
                return (e.u, e.v, e.lu, e.lv, i)
            return (e.v, e.u, e.lv, e.lu, i)

        return tuple(e for _, e in sorted(enumerate(self.edges), key=key))

    def canonical_form(self) -> tuple:
        """Hashable normal form used for graph-equality comparisons."""
        norm = []
        for e in self.canonical_edge_order():
            if e.u <= e.v:
                norm.append((e.u, e.v, e.lu, e.lv))
            else:
                norm.append((e.v, e.u, e.lv, e.lu))
        return (self.n, self.delta, tuple(norm))

    def __repr__(self) -> str:
        return f"LabeledGraph(n={self.n}, delta={self.delta}, edges={len(self.edges)})"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def schreier_graph(spec: SchreierSpec, partition: Optional[Sequence[int]] = None) -> LabeledGraph:
    """The Schreier graph of a spec: one arc v -> perm[a](v) per (v, a),
    paired with the arc perm[pairing(a)] provides in the other direction.

    Edges are emitted in vertex-major then label order, each undirected
    edge at its first encounter.
    """
    n, d = spec.n_vertices, spec.delta
    edges: list[Edge] = []
    for v in range(n):
        for a in range(d):
            w = spec.perms[a][v]
            ab = spec.pairing[a]
            # the partner arc is (w, ab); keep the lexicographically first
            if (v, a) <= (w, ab):
                edges.append(Edge(v, w, a, ab))
    return LabeledGraph(n, d, edges, partition=partition)


def spec_from_graph(g: LabeledGraph) -> Optional[SchreierSpec]:
    """Recover a SchreierSpec when the label pairing is globally constant,
    else None."""
    pairing: list[Optional[int]] = [None] * g.delta
    for e in g.edges:
        for a, b in ((e.lu, e.lv), (e.lv, e.lu)):
            if pairing[a] is None:
                pairing[a] = b
            elif pairing[a] != b:
                return None
    if any(p is None for p in pairing):
        return None
    try:
        return SchreierSpec(g.n, g.permutations(), tuple(pairing))  # type: ignore[arg-type]
    except InvalidSpecError:
        return None


def cayley_graph(
    group: GroupTable,
    labels: Sequence[int],
    side: str = "left",
    pairing: Optional[Sequence[int]] = None,
) -> SchreierSpec:
    """Cayley action spec for a label multiset of group elements.

    ``side='left'`` acts by g -> a*g, ``side='right'`` by g -> g*b.  With
    the default pairing the multiset must be symmetric (closed under
    inverses); duplicate self-inverse labels are paired with themselves.
    """
    if side not in ("left", "right"):
        raise InvalidSpecError("side must be 'left' or 'right'")
    for a in labels:
        if not (0 <= a < group.order):
            raise InvalidSpecError(f"label {a} is not a group element")
    if pairing is None:
        pairing_list: list[Optional[int]] = [None] * len(labels)
        slots: dict[int, list[int]] = {}
        for i, a in enumerate(labels):
            slots.setdefault(a, []).append(i)
        for a, idxs in slots.items():
            inv = group.inv[a]
            if inv == a:
                for i in idxs:
                    pairing_list[i] = i
            else:
                partner = slots.get(inv, [])
                if len(partner) != len(idxs):
                    raise InvalidSpecError(
                        f"label multiset is not symmetric: {a} occurs {len(idxs)} "
                        f"times but its inverse {inv} occurs {len(partner)} times"
                    )
                for i, j in zip(idxs, partner):
                    pairing_list[i] = j
        pairing = tuple(pairing_list)  # type: ignore[assignment]
    if side == "left":
        perms = tuple(tuple(group.mul[a][g] for g in range(group.order)) for a in labels)
    else:
        perms = tuple(tuple(group.mul[g][a] for g in range(group.order)) for a in labels)
    return SchreierSpec(group.order, perms, tuple(pairing))


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------


def _perms_of(g) -> tuple[tuple[int, ...], ...]:
    if isinstance(g, SchreierSpec):
        return g.perms
    return g.permutations()


def _n_of(g) -> int:
    return g.n_vertices if isinstance(g, SchreierSpec) else g.n


def commute_check(a, b) -> bool:
    """Whether every defining permutation of a commutes with every one of b.

    Accepts SchreierSpec or LabeledGraph on the same vertex set.
    """
    if _n_of(a) != _n_of(b):
        raise SizeMismatchError("graphs live on different vertex sets")
    return all(perms_commute(p, q) for p in _perms_of(a) for q in _perms_of(b))


def overlap_check(a: LabeledGraph, b: LabeledGraph) -> list[tuple[int, int]]:
    """All unordered vertex pairs joined by at least one edge in both graphs.

    An empty result is the total-no-conjugacy analog for the pair.
    """
    if a.n != b.n:
        raise SizeMismatchError("graphs live on different vertex sets")
    return sorted(a.endpoint_pairs() & b.endpoint_pairs())


def _inverse_pair_multiset(g: LabeledGraph, v: int) -> tuple[tuple[int, int], ...]:
    return tuple(sorted(g.label_pair(g.out_edge(v, lab)[1], v) for lab in range(g.delta)))


def inverse_pair_compat(a: LabeledGraph, b: LabeledGraph) -> bool:
    """For every edge (v, w) of one graph, the multiset of (label, inverse
    label) pairs of the other graph's local view must agree at v and w."""
    if a.n != b.n:
        raise SizeMismatchError("graphs live on different vertex sets")
    for first, second in ((a, b), (b, a)):
        sig = [_inverse_pair_multiset(second, v) for v in range(second.n)]
        for e in first.edges:
            if sig[e.u] != sig[e.v]:
                return False
    return True


# ---------------------------------------------------------------------------
# covers and the four-part construction
# ---------------------------------------------------------------------------


def bipartite_double_cover(g: LabeledGraph) -> LabeledGraph:
    """The double cover: each arc (v, w, label) lifts to an edge between
    (v, side 0) and (w, side 1).  Side-0 copies keep ids 0..n-1, side-1
    copies get n..2n-1; the result is bipartite and loop-free with the
    same degree.
    """
    n = g.n
    edges = []
    for e in g.edges:
        arcs = [(e.u, e.v, e.lu, e.lv)]
        if not e.is_half_loop():
            arcs.append((e.v, e.u, e.lv, e.lu))
        for src, dst, ls, ld in arcs:
            edges.append(Edge(src, dst + n, ls, ld))
    partition = [0] * n + [1] * n
    return LabeledGraph(2 * n, g.delta, edges, partition=partition)


def disjoint_double(g: LabeledGraph) -> LabeledGraph:
    """Two disjoint copies of g, block-diagonal adjacency, with the copy
    index attached as the partition."""
    n = g.n
    edges = [Edge(e.u, e.v, e.lu, e.lv) for e in g.edges]
    edges += [Edge(e.u + n, e.v + n, e.lu, e.lv) for e in g.edges]
    return LabeledGraph(2 * n, g.delta, edges, partition=[0] * n + [1] * n)


def quadripartite_pair(a: LabeledGraph, b: LabeledGraph) -> tuple[LabeledGraph, LabeledGraph]:
    """(double cover of a, two disjoint copies of b) on a shared partition.

    The outputs commute and never have overlapping edges, which removes
    the no-overlap obstruction for any commuting input pair.  Note that
    only the first output is bipartite across the shared partition: the
    copies of b keep their edges inside each side, so a pipeline that
    needs both graphs bipartite on one partition must take the bipartite
    double cover of both outputs afterwards.
    """
    if a.n != b.n:
        raise SizeMismatchError("graphs live on different vertex sets")
    if not commute_check(a, b):
        raise NonCommutingError("input graphs do not commute")
    return bipartite_double_cover(a), disjoint_double(b)


# ---------------------------------------------------------------------------
# even-degree Schreier structuring
# ---------------------------------------------------------------------------


def _euler_circuit(n: int, edge_list: list[tuple[int, int]]) -> list[tuple[int, int, int]]:
    """Hierholzer's algorithm on one connected even-degree multigraph.

    Returns the traversal as oriented arcs (src, dst, edge_id).
    """
    incident: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edge_list):
        incident[u].append((eid, v))
        if u != v:
            incident[v].append((eid, u))
    used = [False] * len(edge_list)
    ptr = [0] * n
    start = edge_list[0][0]
    stack: list[tuple[int, Optional[tuple[int, int, int]]]] = [(start, None)]
    arcs: list[tuple[int, int, int]] = []
    while stack:
        v, via = stack[-1]
        advanced = False
        while ptr[v] < len(incident[v]):
            eid, w = incident[v][ptr[v]]
            ptr[v] += 1
            if used[eid]:
                continue
            used[eid] = True
            stack.append((w, (v, w, eid)))
            advanced = True
            break
        if not advanced:
            stack.pop()
            if via is not None:
                arcs.append(via)
    arcs.reverse()
    return arcs


def _bipartite_perfect_matching(n: int, arcs_by_src: list[list[int]], dst: list[int]) -> list[int]:
    """One perfect matching source -> arc in a k-regular bipartite multigraph.

    Returns the chosen arc index per source vertex (Hall's condition holds
    for regular bipartite graphs, so this never fails).
    """
    src_of_dst: dict[int, int] = {}
    match_of_src: list[Optional[int]] = [None] * n

    def augment(src: int, seen: set[int]) -> bool:
        for arc in arcs_by_src[src]:
            d = dst[arc]
            if d in seen:
                continue
            seen.add(d)
            if d not in src_of_dst or augment(src_of_dst[d], seen):
                src_of_dst[d] = src
                match_of_src[src] = arc
                return True
        return False

    for s in range(n):
        if not augment(s, set()):
            raise InvalidSpecError("no perfect matching in a regular bipartite graph")
    return [a for a in match_of_src]  # type: ignore[return-value]


def two_factorization(g: LabeledGraph) -> SchreierSpec:
    """Structure an even-degree regular multigraph as a Schreier graph.

    Per component, an Eulerian orientation splits the edges into a
    (delta/2)-out-regular digraph, which is then peeled into delta/2
    permutations by repeated perfect matchings.  The returned spec has
    those permutations and their inverses, paired up, and reproduces the
    input's edge multiset (labels are fresh).
    """
    if g.delta % 2 != 0:
        raise UnsupportedError("only even-degree structuring is supported")
    half = g.delta // 2
    arcs: list[tuple[int, int]] = []
    for comp in g.components():
        members = set(comp)
        comp_edges = [(e.u, e.v) for e in g.edges if e.u in members]
        if not comp_edges:
            continue
        circuit = _euler_circuit(g.n, comp_edges)
        if len(circuit) != len(comp_edges):
            raise InvalidSpecError("component admits no Eulerian circuit")
        arcs.extend((src, dstv) for src, dstv, _ in circuit)
    # peel the oriented arcs into `half` permutation layers
    perms: list[tuple[int, ...]] = []
    remaining = list(range(len(arcs)))
    for _ in range(half):
        arcs_by_src: list[list[int]] = [[] for _ in range(g.n)]
        for idx in remaining:
            arcs_by_src[arcs[idx][0]].append(idx)
        dst = [arcs[i][1] for i in range(len(arcs))]
        chosen = _bipartite_perfect_matching(g.n, arcs_by_src, dst)
        perms.append(tuple(arcs[c][1] for c in chosen))
        taken = set(chosen)
        remaining = [i for i in remaining if i not in taken]
    assert not remaining
    all_perms = tuple(perms) + tuple(perm_inverse(p) for p in perms)
    pairing = tuple(range(half, 2 * half)) + tuple(range(half))
    return SchreierSpec(g.n, all_perms, pairing)


# ---------------------------------------------------------------------------
# block-matrix analysis for a connected graph commuting with a 2-component one
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockCommutationReport:
    """Truth of the three block relations that make M_A and M_B commute
    when M_B is block-diagonal."""

    a2_b2_eq_b1_a2: bool
    a1_b1_commute: bool
    a3_b2_commute: bool

    @property
    def overall(self) -> bool:
        return self.a2_b2_eq_b1_a2 and self.a1_b1_commute and self.a3_b2_commute


def _split_blocks(ma: np.ndarray, mb: np.ndarray, split: int):
    ma = np.asarray(ma)
    mb = np.asarray(mb)
    if ma.shape != mb.shape or ma.shape[0] != ma.shape[1]:
        raise DegreeMismatchError("block matrices must be square and equally sized")
    if not (0 < split < ma.shape[0]):
        raise DegreeMismatchError("split index out of range")
    a1, a2, a3 = ma[:split, :split], ma[:split, split:], ma[split:, split:]
    if not np.array_equal(ma[split:, :split], a2.T):
        raise InvalidSpecError("lower-left block is not the transpose of the upper-right")
    if np.any(mb[:split, split:]) or np.any(mb[split:, :split]):
        raise InvalidSpecError("second matrix is not block-diagonal at the split")
    b1, b2 = mb[:split, :split], mb[split:, split:]
    return a1, a2, a3, b1, b2


def block_commutation_report(ma: np.ndarray, mb: np.ndarray, split: int) -> BlockCommutationReport:
    """Check A2 B2 = B1 A2, A1 B1 = B1 A1 and A3 B2 = B2 A3 for
    ma = [[A1, A2], [A2^T, A3]] against block-diagonal mb = diag(B1, B2)."""
    a1, a2, a3, b1, b2 = _split_blocks(ma, mb, split)
    rep = BlockCommutationReport(
        a2_b2_eq_b1_a2=np.array_equal(a2 @ b2, b1 @ a2),
        a1_b1_commute=np.array_equal(a1 @ b1, b1 @ a1),
        a3_b2_commute=np.array_equal(a3 @ b2, b2 @ a3),
    )
    # the three relations are exactly M_A M_B = M_B M_A
    assert rep.overall == bool(np.array_equal(np.asarray(ma) @ mb, np.asarray(mb) @ ma))
    return rep


@dataclass(frozen=True)
class ConjugationResult:
    matrix: np.ndarray
    conjugate_commutes_with_b2: bool
    result_commutes_with_mb: bool


def conjugate_component(
    ma: np.ndarray, p: Sequence[int], mb: np.ndarray, split: int
) -> ConjugationResult:
    """Replace the A3 block by P A3 P^T and report whether commutation
    with mb survives (it does precisely when P A3 P^T commutes with B2)."""
    a1, a2, a3, _, b2 = _split_blocks(ma, mb, split)
    m = a3.shape[0]
    if len(p) != m or not is_permutation(p):
        raise InvalidSpecError("p must be a permutation of the A3 block's index set")
    pm = np.zeros((m, m), dtype=np.asarray(ma).dtype)
    for i, j in enumerate(p):
        pm[j, i] = 1
    conj = pm @ a3 @ pm.T
    new = np.block([[a1, a2], [a2.T, conj]])
    res = ConjugationResult(
        matrix=new,
        conjugate_commutes_with_b2=bool(np.array_equal(conj @ b2, b2 @ conj)),
        result_commutes_with_mb=bool(np.array_equal(new @ mb, np.asarray(mb) @ new)),
    )
    return res
