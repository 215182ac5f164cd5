"""Classical codes, tensor and Tanner parity checks, and the CSS pair.

Parity-check matrices are kept exactly as assembled (rows may be
redundant); dimensions always come from ranks.  Tensor codewords are
flattened row-major, i.e. a matrix codeword C becomes
(c_11, ..., c_1nB, ..., c_nA1, ..., c_nAnB), which makes H_A (x) H_B a
parity check of the dual-tensor code and column (a*nB + b) of a
Kronecker product line up with pair label (a, b) of a diagonal graph.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

from . import gf2
from .errors import BudgetError, CssViolationError, DimensionError, SelfLoopError
from .gf2 import BitMatrix
from .graphs import (
    GroupTable,
    LabeledGraph,
    bipartite_double_cover,
    cayley_graph,
    schreier_graph,
)
from .squares import SquareComplex, build_complex, square_graphs


class LinearCode:
    """A binary linear code held by a parity-check matrix.

    The generator is the deterministic nullspace basis of the parity
    check; k = n - rank(parity).
    """

    __slots__ = ("n", "parity", "generator", "k")

    def __init__(self, parity: BitMatrix):
        self.n = parity.cols
        self.parity = parity
        self.generator = gf2.nullspace_basis(parity)
        self.k = self.generator.rows

    @classmethod
    def from_parity_rows(cls, rows: Sequence[Sequence[int]]) -> "LinearCode":
        return cls(BitMatrix.from_rows(rows))

    @classmethod
    def repetition(cls, n: int) -> "LinearCode":
        """[n, 1, n]: parity rows x_i + x_{i+1}."""
        return cls.from_parity_rows(
            [[1 if j in (i, i + 1) else 0 for j in range(n)] for i in range(n - 1)]
        )

    @classmethod
    def single_parity_check(cls, n: int) -> "LinearCode":
        """[n, n-1, 2]: one all-ones parity row."""
        return cls.from_parity_rows([[1] * n])

    @classmethod
    def full_space(cls, n: int) -> "LinearCode":
        return cls(BitMatrix.zeros(0, n))

    def codewords(self):
        """All 2^k codewords as int bitsets (Gray-code order)."""
        word = 0
        yield word
        rows = self.generator.data
        for i in range(1, 1 << self.k):
            word ^= rows[(i & -i).bit_length() - 1]
            yield word

    def min_distance(self) -> Optional[int]:
        """Exact minimum weight by enumeration; None for the trivial code."""
        if self.k == 0:
            return None
        best = self.n + 1
        word = 0
        rows = self.generator.data
        for i in range(1, 1 << self.k):
            word ^= rows[(i & -i).bit_length() - 1]
            w = word.bit_count()
            if w < best:
                best = w
        return best


def dual_parity(c: LinearCode) -> LinearCode:
    """The dual code: its parity check is a generator of c."""
    return LinearCode(c.generator)


def tensor_parity(ca: LinearCode, cb: LinearCode) -> tuple[BitMatrix, BitMatrix]:
    """(parity of the tensor code, parity of the dual-tensor code).

    The tensor code (columns in ca, rows in cb, flattened row-major) is
    checked by stacking H_A (x) I and I (x) H_B; the dual-tensor code
    (dual of the tensor of the two dual codes) is checked by H_A (x) H_B.
    """
    ha, hb = ca.parity, cb.parity
    tensor = gf2.kron(ha, BitMatrix.identity(cb.n)).vstack(
        gf2.kron(BitMatrix.identity(ca.n), hb)
    )
    dual_tensor = gf2.kron(ha, hb)
    return tensor, dual_tensor


def tanner_parity(g: LabeledGraph, local_parity: BitMatrix) -> BitMatrix:
    """Vertex-major stacked parity check of the Tanner code Tan(g, local).

    Block j applies the local parity through the label order of vertex
    j's local view: local column l lands in the column of the edge whose
    label at vertex j is l.  Requires a loop-free graph whose degree
    equals the local block length.
    """
    if g.has_self_loop():
        raise SelfLoopError("Tanner codes require a loop-free graph")
    if local_parity.cols != g.delta:
        raise DimensionError(
            f"local code length {local_parity.cols} != graph degree {g.delta}"
        )
    n_edges = len(g.edges)
    rows: list[int] = []
    for v in range(g.n):
        slots = [g.out_edge(v, lab)[1] for lab in range(g.delta)]
        for r in local_parity.data:
            word = 0
            rr = r
            while rr:
                lsb = rr & -rr
                word |= 1 << slots[lsb.bit_length() - 1]
                rr ^= lsb
            rows.append(word)
    return BitMatrix(g.n * local_parity.rows, n_edges, rows)


@dataclass(frozen=True)
class SparsityReport:
    h0_max_row: int
    h0_max_col: int
    h0_mean_row: float
    h0_mean_col: float
    h1_max_row: int
    h1_max_col: int
    h1_mean_row: float
    h1_mean_col: float


@dataclass(frozen=True)
class CssCode:
    """A CSS pair (h0, h1) with h0 h1^T = 0, plus derived parameters."""

    n: int
    h0: BitMatrix
    h1: BitMatrix
    k: int
    dx: Optional[int] = None
    dz: Optional[int] = None

    @property
    def sparsity(self) -> SparsityReport:
        return ldpc_report(self)


def css_orthogonal(h0: BitMatrix, h1: BitMatrix) -> bool:
    return h0.mul(h1.transpose()).is_zero()


def css_dimension(h0: BitMatrix, h1: BitMatrix) -> int:
    """k = dim C0 + dim C1 - n, valid only for a genuine CSS pair."""
    if h0.cols != h1.cols:
        raise DimensionError("h0 and h1 have different block lengths")
    if not css_orthogonal(h0, h1):
        raise CssViolationError("h0 h1^T != 0: not a CSS pair")
    n = h0.cols
    return (n - gf2.rank(h0)) + (n - gf2.rank(h1)) - n


def make_css(h0: BitMatrix, h1: BitMatrix) -> CssCode:
    return CssCode(n=h0.cols, h0=h0, h1=h1, k=css_dimension(h0, h1))


def css_from_complex(x: SquareComplex, ca: LinearCode, cb: LinearCode) -> CssCode:
    """The CSS pair of a square complex and two local codes of length delta.

    h0 checks the Tanner code of the first diagonal graph against the
    dual of the tensor code (local parity: generator (x) generator);
    h1 checks the second diagonal graph against the dual-tensor code
    (local parity: H_A (x) H_B).  Shared square indexing makes the two
    qubit orderings agree position-by-position.
    """
    if ca.n != x.delta or cb.n != x.delta:
        raise DimensionError(
            f"local codes must have length {x.delta}, got {ca.n} and {cb.n}"
        )
    g0, g1 = square_graphs(x)
    h0 = tanner_parity(g0, gf2.kron(ca.generator, cb.generator))
    h1 = tanner_parity(g1, gf2.kron(ca.parity, cb.parity))
    return make_css(h0, h1)


def ldpc_report(code: CssCode) -> SparsityReport:
    """Max and mean row/column weights of both parity checks."""

    def stats(m: BitMatrix) -> tuple[int, int, float, float]:
        rw = m.row_weights() or [0]
        cw = m.col_weights() or [0]
        return max(rw), max(cw), sum(rw) / len(rw), sum(cw) / len(cw)

    r0, c0, mr0, mc0 = stats(code.h0)
    r1, c1, mr1, mc1 = stats(code.h1)
    return SparsityReport(
        h0_max_row=r0, h0_max_col=c0, h0_mean_row=mr0, h0_mean_col=mc0,
        h1_max_row=r1, h1_max_col=c1, h1_mean_row=mr1, h1_mean_col=mc1,
    )


# ---------------------------------------------------------------------------
# distances
# ---------------------------------------------------------------------------

DEFAULT_DISTANCE_CAP = 24


@dataclass(frozen=True)
class DistanceResult:
    dx: Optional[int]
    dz: Optional[int]
    exact: bool
    note: str = ""


def _min_weight_outside(
    code_basis: BitMatrix, excluded: gf2.RowSpace, threads: int = 1
) -> Optional[int]:
    """min |c| over span(code_basis) minus the excluded row space.

    Enumerates the span in Gray-code order; membership in the excluded
    space is only tested when a word improves the current best, so the
    test cost is amortized away.  Sharded over workers by fixing the top
    basis bits; the minimum over shards is shard-count-invariant.
    """
    k = code_basis.rows
    rows = code_basis.data
    if k == 0:
        return None

    shard_bits = 0
    while (1 << shard_bits) < threads and shard_bits < k:
        shard_bits += 1
    low = rows[: k - shard_bits]
    high = rows[k - shard_bits :]

    def scan(offset_idx: int) -> Optional[int]:
        offset = 0
        oi = offset_idx
        for j, row in enumerate(high):
            if (oi >> j) & 1:
                offset ^= row
        best: Optional[int] = None
        word = offset
        if word and not excluded.contains(word):
            best = word.bit_count()
        for i in range(1, 1 << len(low)):
            word ^= low[(i & -i).bit_length() - 1]
            w = word.bit_count()
            if (best is None or w < best) and word and not excluded.contains(word):
                best = w
        return best

    if shard_bits == 0:
        results = [scan(0)]
    else:
        with ThreadPoolExecutor(max_workers=1 << shard_bits) as pool:
            results = list(pool.map(scan, range(1 << shard_bits)))
    found = [r for r in results if r is not None]
    return min(found) if found else None


def css_distances(
    code: CssCode,
    cap: int = DEFAULT_DISTANCE_CAP,
    force: bool = False,
    threads: int = 1,
) -> DistanceResult:
    """Exact dx/dz by codeword enumeration with dual-space filtering.

    dx minimizes over null(h0) minus rowspace(h1), dz symmetrically.
    Refuses (BudgetError) when either enumeration dimension exceeds the
    cap, unless forced.  A None distance means that side has no logical
    operators (the k = 0 degenerate case).
    """
    basis0 = gf2.nullspace_basis(code.h0)
    basis1 = gf2.nullspace_basis(code.h1)
    dim0, dim1 = basis0.rows, basis1.rows
    if not force and max(dim0, dim1) > cap:
        raise BudgetError(
            f"enumeration dimensions ({dim0}, {dim1}) exceed cap {cap}; "
            "raise the cap or use the randomized probe for an upper bound"
        )
    dx = _min_weight_outside(basis0, gf2.RowSpace(code.h1), threads=threads)
    dz = _min_weight_outside(basis1, gf2.RowSpace(code.h0), threads=threads)
    return DistanceResult(dx=dx, dz=dz, exact=True)


def css_distance_probe(code: CssCode, iterations: int = 200, seed: int = 0) -> DistanceResult:
    """Randomized information-set probe: an upper bound, not exact.

    Repeatedly row-reduces the logical space against random column
    orders and keeps the lightest representative seen.
    """
    import random

    rng = random.Random(seed)

    def probe_side(h_self: BitMatrix, h_other: BitMatrix) -> Optional[int]:
        basis = gf2.nullspace_basis(h_self)
        dual = gf2.RowSpace(h_other)
        candidates = [r for r in basis.data if not dual.contains(r)]
        if not candidates:
            return None
        best = min(r.bit_count() for r in candidates)
        pool = list(basis.data)
        for _ in range(iterations):
            word = 0
            for r in pool:
                if rng.random() < 0.5:
                    word ^= r
            if word and word.bit_count() < best and not dual.contains(word):
                best = word.bit_count()
        return best

    return DistanceResult(
        dx=probe_side(code.h0, code.h1),
        dz=probe_side(code.h1, code.h0),
        exact=False,
        note="bound, not exact",
    )


# ---------------------------------------------------------------------------
# the one-call Cayley pipeline
# ---------------------------------------------------------------------------


def cayley_quantum_tanner(
    group: GroupTable,
    a_labels: Sequence[int],
    b_labels: Sequence[int],
    ca: LinearCode,
    cb: LinearCode,
) -> CssCode:
    """Left/right Cayley graphs -> double covers -> complex -> CSS code.

    The no-overlap check on the covers enforces the group-level
    total-no-conjugacy condition (a g != g b for all g).
    """
    spec_a = cayley_graph(group, a_labels, side="left")
    spec_b = cayley_graph(group, b_labels, side="right")
    ga = bipartite_double_cover(schreier_graph(spec_a))
    gb = bipartite_double_cover(schreier_graph(spec_b))
    x = build_complex(ga, gb, ga.partition)
    return css_from_complex(x, ca, cb)


# ---------------------------------------------------------------------------
# alist interchange (MacKay format)
# ---------------------------------------------------------------------------


def to_alist(m: BitMatrix) -> str:
    """Serialize to the plain-text alist format, bit-exactly reproducible.

    Line 1: n m (columns, rows); line 2: max column/row weight; lines 3-4:
    per-column and per-row weights; then per-column 1-based row indices
    padded with 0, then per-row column indices likewise.
    """
    n, rows = m.cols, m.rows
    col_support: list[list[int]] = [[] for _ in range(n)]
    row_support: list[list[int]] = []
    for i in range(rows):
        r = m.row(i)
        support = []
        while r:
            lsb = r & -r
            j = lsb.bit_length() - 1
            support.append(j + 1)
            col_support[j].append(i + 1)
            r ^= lsb
        row_support.append(support)
    col_w = [len(c) for c in col_support]
    row_w = [len(r) for r in row_support]
    max_col = max(col_w, default=0)
    max_row = max(row_w, default=0)
    lines = [
        f"{n} {rows}",
        f"{max_col} {max_row}",
        " ".join(str(w) for w in col_w),
        " ".join(str(w) for w in row_w),
    ]
    for c in col_support:
        lines.append(" ".join(str(i) for i in c + [0] * (max_col - len(c))))
    for r in row_support:
        lines.append(" ".join(str(j) for j in r + [0] * (max_row - len(r))))
    return "\n".join(lines) + "\n"


def from_alist(text: str) -> BitMatrix:
    """Parse an alist string back into a BitMatrix, validating both the
    column-major and row-major sections against each other."""
    from .errors import FormatError

    tokens_by_line = [line.split() for line in text.splitlines()]
    try:
        ints = [[int(t) for t in line] for line in tokens_by_line]
    except ValueError as exc:
        raise FormatError(f"alist: non-integer token ({exc})") from exc
    if len(ints) < 4:
        raise FormatError("alist: fewer than 4 header lines")
    if len(ints[0]) != 2:
        raise FormatError("alist line 1: expected 'n m'")
    n, rows = ints[0]
    if len(ints[1]) != 2:
        raise FormatError("alist line 2: expected max column/row weights")
    max_col, max_row = ints[1]
    col_w, row_w = ints[2], ints[3]
    if len(col_w) != n:
        raise FormatError(f"alist line 3: expected {n} column weights, got {len(col_w)}")
    if len(row_w) != rows:
        raise FormatError(f"alist line 4: expected {rows} row weights, got {len(row_w)}")
    if len(ints) != 4 + n + rows:
        raise FormatError(f"alist: expected {4 + n + rows} lines, got {len(ints)}")
    data = [0] * rows
    for j in range(n):
        entries = [i for i in ints[4 + j] if i != 0]
        if len(ints[4 + j]) != max_col or len(entries) != col_w[j]:
            raise FormatError(f"alist column {j + 1}: malformed index line")
        for i in entries:
            if not (1 <= i <= rows):
                raise FormatError(f"alist column {j + 1}: row index {i} out of range")
            data[i - 1] |= 1 << j
    for i in range(rows):
        entries = [j for j in ints[4 + n + i] if j != 0]
        if len(ints[4 + n + i]) != max_row or len(entries) != row_w[i]:
            raise FormatError(f"alist row {i + 1}: malformed index line")
        word = 0
        for j in entries:
            if not (1 <= j <= n):
                raise FormatError(f"alist row {i + 1}: column index {j} out of range")
            word |= 1 << (j - 1)
        if word != data[i]:
            raise FormatError(f"alist row {i + 1}: row and column sections disagree")
    return BitMatrix(rows, n, data)
