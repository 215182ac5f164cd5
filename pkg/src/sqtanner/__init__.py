"""Quantum CSS codes from commuting Schreier graphs and square complexes."""

from .gf2 import BitMatrix, kron, nullspace_basis, rank, row_space_contains
from .graphs import (
    Edge,
    GroupTable,
    LabeledGraph,
    SchreierSpec,
    bipartite_double_cover,
    block_commutation_report,
    cayley_graph,
    commute_check,
    conjugate_component,
    cyclic_group,
    dihedral_group,
    inverse_pair_compat,
    overlap_check,
    quadripartite_pair,
    schreier_graph,
    two_factorization,
)
from .spectral import (
    Spectrum,
    eigenvalues_symmetric,
    is_ramanujan,
    lambda_value,
    product_spectrum_check,
)
from .squares import SquareComplex, build_complex, square_graphs
from .codes import (
    CssCode,
    LinearCode,
    cayley_quantum_tanner,
    css_dimension,
    css_distances,
    css_from_complex,
    dual_parity,
    from_alist,
    ldpc_report,
    tanner_parity,
    tensor_parity,
    to_alist,
)
from .characterize import (
    PsiMap,
    condition_ii_check,
    example_red_nonempty,
    general_qtanner_css,
    reconstruct_schreier_pair,
    swapping_condition_check,
)

__version__ = "0.1.0"
