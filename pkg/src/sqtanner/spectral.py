"""Symmetric eigenvalue computation and spectral expansion checks.

The eigensolver is a cyclic Jacobi iteration (deterministic, accurate to
~1e-9 on the integer adjacency matrices this package meets), not a
library call.  Everything downstream of it: the nontrivial-eigenvalue
measure of a regular graph, the Ramanujan test, and the product/sum
spectrum consistency report for a commuting pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, NonCommutingError, SizeMismatchError
from .graphs import Edge, LabeledGraph

_OFFDIAG_STOP = 1e-12
_EIG_TOLERANCE = 1e-9
_MATCH_TOL = 1e-6
_CLUSTER_TOL = 1e-5
_MAX_SWEEPS = 60


def jacobi_eigh(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues and orthonormal eigenvectors of a symmetric matrix.

    Cyclic Jacobi sweeps until the off-diagonal Frobenius norm drops
    below 1e-12 times the norm of the input.  Returns (values, vectors)
    sorted by descending eigenvalue; vectors are columns.
    """
    a = np.array(m, dtype=np.float64)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DomainError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise DomainError("matrix must be symmetric")
    v = np.eye(n)
    norm = np.linalg.norm(a)
    if n <= 1 or norm == 0.0:
        vals = np.diag(a).copy()
    else:
        stop = _OFFDIAG_STOP * norm
        for _ in range(_MAX_SWEEPS):
            # square only the off-diagonal entries; the subtraction form
            # sqrt(|A|^2 - |diag|^2) has a cancellation floor near sqrt(eps)
            strict = a - np.diag(np.diag(a))
            off = math.sqrt((strict * strict).sum())
            if off < stop:
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = a[p, q]
                    if abs(apq) < stop / (n * n):
                        continue
                    tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                    c = 1.0 / math.sqrt(1.0 + t * t)
                    s = t * c
                    rot_p = c * a[:, p] - s * a[:, q]
                    rot_q = s * a[:, p] + c * a[:, q]
                    a[:, p], a[:, q] = rot_p, rot_q
                    rot_p = c * a[p, :] - s * a[q, :]
                    rot_q = s * a[p, :] + c * a[q, :]
                    a[p, :], a[q, :] = rot_p, rot_q
                    rot_p = c * v[:, p] - s * v[:, q]
                    rot_q = s * v[:, p] + c * v[:, q]
                    v[:, p], v[:, q] = rot_p, rot_q
        else:
            raise DomainError("Jacobi iteration failed to converge")
        vals = np.diag(a).copy()
    order = np.argsort(-vals, kind="stable")
    return vals[order], v[:, order]


@dataclass(frozen=True)
class Spectrum:
    """All eigenvalues of a symmetric matrix, sorted descending."""

    eigenvalues: tuple[float, ...]
    tolerance: float = _EIG_TOLERANCE

    def __len__(self) -> int:
        return len(self.eigenvalues)


def eigenvalues_symmetric(m: np.ndarray) -> Spectrum:
    """Spectrum of an integer (or real) symmetric matrix."""
    vals, _ = jacobi_eigh(np.asarray(m, dtype=np.float64))
    return Spectrum(tuple(float(x) for x in vals))


def _lambda_from_values(values: Sequence[float], delta: int, bipartite: bool) -> float:
    """Drop one +delta eigenvalue (and one -delta if bipartite), return the
    largest remaining magnitude."""
    vals = sorted(values, reverse=True)
    if abs(vals[0] - delta) > _MATCH_TOL:
        raise DomainError(f"largest eigenvalue {vals[0]:.6f} does not match degree {delta}")
    vals = vals[1:]
    if bipartite:
        if abs(vals[-1] + delta) > _MATCH_TOL:
            raise DomainError("bipartite graph lacks a -delta eigenvalue")
        vals = vals[:-1]
    return max(abs(x) for x in vals)


def lambda_value(g: LabeledGraph) -> float:
    """The spectral measure max{|eig| : eig != +-delta} of a regular graph.

    Defined for more than two vertices; a disconnected graph scores delta
    by convention.
    """
    if g.n <= 2:
        raise DomainError("lambda is defined only for graphs with more than 2 vertices")
    if not g.is_connected():
        return float(g.delta)
    spec = eigenvalues_symmetric(g.adjacency())
    return _lambda_from_values(spec.eigenvalues, g.delta, g.two_coloring() is not None)


def ramanujan_bound(delta: int) -> float:
    return 2.0 * math.sqrt(delta - 1)


def is_ramanujan(g: LabeledGraph) -> bool:
    """lambda(g) <= 2 sqrt(delta - 1), up to the eigenvalue tolerance."""
    return lambda_value(g) <= ramanujan_bound(g.delta) + _EIG_TOLERANCE


def _common_eigenbasis(ma: np.ndarray, mb: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Simultaneous diagonalization of commuting symmetric matrices.

    Diagonalizes ma, then re-diagonalizes mb inside each eigenspace of ma.
    Returns (lams_a, lams_b, basis columns), with the eigenvalues read off
    as Rayleigh quotients of the common vectors.
    """
    vals_a, vecs = jacobi_eigh(ma)
    n = len(vals_a)
    basis = np.zeros((n, n))
    col = 0
    i = 0
    while i < n:
        j = i
        while j + 1 < n and abs(vals_a[j + 1] - vals_a[i]) < _CLUSTER_TOL:
            j += 1
        q = vecs[:, i : j + 1]
        sub = q.T @ mb @ q
        sub = (sub + sub.T) / 2.0
        _, w = jacobi_eigh(sub)
        basis[:, col : col + q.shape[1]] = q @ w
        col += q.shape[1]
        i = j + 1
    lams_a = np.einsum("ij,ij->j", basis, ma @ basis)
    lams_b = np.einsum("ij,ij->j", basis, mb @ basis)
    return lams_a, lams_b, basis


def _matrix_components(m: np.ndarray) -> list[list[int]]:
    n = m.shape[0]
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in np.nonzero(m[v])[0]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(int(w))
        comps.append(sorted(comp))
    return comps


@dataclass(frozen=True)
class ProductSpectrumReport:
    """Consistency of the product/sum spectra of a commuting pair with a
    common-eigenbasis pairing, plus the 4(delta-1) bound when its
    hypotheses are in force."""

    pairing_residual: float
    sum_residual: float
    product_lambda: Optional[float]
    bound: Optional[float]
    hypotheses_hold: bool
    bound_ok: Optional[bool]
    u_minus_u_seen: Optional[bool]

    @property
    def max_residual(self) -> float:
        return max(self.pairing_residual, self.sum_residual)


def product_spectrum_check(a: LabeledGraph, b: LabeledGraph) -> ProductSpectrumReport:
    """Verify that eigenvalues of M_A M_B (and M_A + M_B) are the paired
    products (sums) of the two spectra over a common eigenbasis.

    When the degrees agree, the first graph is connected Ramanujan, and
    the second splits into exactly two Ramanujan components with the
    balanced-row-weight condition on the blocks of M_A, the report also
    checks the product graph against the 4(delta-1) bound.  For a
    two-component second graph it flags whether the extra degree-
    eigenvalue vector has the (u, -u) shape.
    """
    ma = a.adjacency().astype(np.float64)
    mb = b.adjacency().astype(np.float64)
    if ma.shape != mb.shape:
        raise SizeMismatchError("graphs live on different vertex sets")
    if not np.array_equal(ma @ mb, mb @ ma):
        raise NonCommutingError("adjacency matrices do not commute")

    lams_a, lams_b, basis = _common_eigenbasis(ma, mb)
    prod_direct = np.sort(jacobi_eigh(ma @ mb)[0])
    sum_direct = np.sort(jacobi_eigh(ma + mb)[0])
    pairing_residual = float(np.max(np.abs(np.sort(lams_a * lams_b) - prod_direct)))
    sum_residual = float(np.max(np.abs(np.sort(lams_a + lams_b) - sum_direct)))

    comps_b = b.components()
    u_minus_u: Optional[bool] = None
    if len(comps_b) == 2 and a.is_connected():
        u_minus_u = False
        mask = np.zeros(b.n)
        mask[comps_b[0]] = 1.0
        for j in range(basis.shape[1]):
            if abs(lams_b[j] - b.delta) > _MATCH_TOL:
                continue
            vec = basis[:, j]
            on0 = vec[comps_b[0]]
            on1 = vec[comps_b[1]]
            flat0 = np.max(np.abs(on0 - on0.mean())) < 1e-6
            flat1 = np.max(np.abs(on1 - on1.mean())) < 1e-6
            if flat0 and flat1 and on0.mean() * on1.mean() < -1e-9:
                u_minus_u = True

    hypotheses = _bound_hypotheses(a, b, comps_b)
    product_lambda = bound = bound_ok = None
    if hypotheses:
        delta = a.delta
        prod_vals = list(prod_direct)
        prod_adj = ma @ mb
        connected = len(_matrix_components(prod_adj != 0)) == 1
        if not connected:
            product_lambda = float(delta * delta)
        else:
            # for a connected regular graph, bipartite iff -degree is an eigenvalue
            bip = abs(min(prod_vals) + delta * delta) < _MATCH_TOL
            product_lambda = _lambda_from_values(prod_vals, delta * delta, bip)
        bound = 4.0 * (delta - 1)
        bound_ok = product_lambda <= bound + _MATCH_TOL
    return ProductSpectrumReport(
        pairing_residual=pairing_residual,
        sum_residual=sum_residual,
        product_lambda=product_lambda,
        bound=bound,
        hypotheses_hold=hypotheses,
        bound_ok=bound_ok,
        u_minus_u_seen=u_minus_u,
    )


def _bound_hypotheses(a: LabeledGraph, b: LabeledGraph, comps_b: list[list[int]]) -> bool:
    """Hypotheses under which lambda of the product graph is at most
    4(delta-1): equal degrees, first graph connected Ramanujan, second
    graph two Ramanujan components, and equal row weights in the A1/A2
    blocks of the first adjacency under the component split."""
    if a.delta != b.delta or len(comps_b) != 2:
        return False
    if not a.is_connected():
        return False
    try:
        if not is_ramanujan(a):
            return False
        for comp in comps_b:
            sub = _induced_subgraph(b, comp)
            if not is_ramanujan(sub):
                return False
    except DomainError:
        return False
    ma = a.adjacency()
    c0, c1 = comps_b
    a1 = ma[np.ix_(c0, c0)]
    a2 = ma[np.ix_(c0, c1)]
    w1 = set(a1.sum(axis=1).tolist())
    w2 = set(a2.sum(axis=1).tolist())
    return len(w1) == 1 and len(w2) == 1 and w1 == w2


def _induced_subgraph(g: LabeledGraph, vertices: list[int]) -> LabeledGraph:
    """The induced labeled subgraph on a union of components (labels kept)."""
    index = {v: i for i, v in enumerate(vertices)}
    edges = [
        Edge(index[e.u], index[e.v], e.lu, e.lv)
        for e in g.edges
        if e.u in index and e.v in index
    ]
    return LabeledGraph(len(vertices), g.delta, edges, validate=True)
