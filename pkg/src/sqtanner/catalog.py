"""Built-in example graphs, pairs and pipelines.

These are code, not data files: the matrices the examples are checked
against live in unit tests, and every object here is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .codes import CssCode, LinearCode, cayley_quantum_tanner, css_from_complex
from .errors import InvalidSpecError
from .graphs import (
    Edge,
    GroupTable,
    LabeledGraph,
    SchreierSpec,
    bipartite_double_cover,
    cyclic_group,
    quadripartite_pair,
    schreier_graph,
)
from .squares import SquareComplex, build_complex


def petersen_spec() -> SchreierSpec:
    """The Petersen graph as a 3-label action on 10 points.

    Vertices 0..4 are the outer 5-cycle, 5..9 the inner one; label 0 is
    the self-paired spoke swap, labels 1/2 rotate the outer cycle one
    step and the inner cycle two steps (and back).
    """
    def outer(i):
        return (i + 1) % 5

    def inner(i):
        return 5 + ((i - 5) + 2) % 5

    swap = tuple((v + 5) % 10 for v in range(10))
    rot = tuple(outer(v) if v < 5 else inner(v) for v in range(10))
    rot_inv = tuple(rot.index(v) for v in range(10))
    return SchreierSpec(10, (swap, rot, rot_inv), (0, 2, 1))


def petersen_partner_spec() -> SchreierSpec:
    """The 2-component one-step rotation commuting with the Petersen action."""
    rot = tuple((v + 1) % 5 if v < 5 else 5 + ((v - 5) + 1) % 5 for v in range(10))
    rot_inv = tuple(rot.index(v) for v in range(10))
    return SchreierSpec(10, (rot, rot_inv), (1, 0))


def petersen_pair() -> tuple[LabeledGraph, LabeledGraph]:
    return schreier_graph(petersen_spec()), schreier_graph(petersen_partner_spec())


def cycle_blocks_c5() -> tuple[np.ndarray, np.ndarray]:
    """The two 5-cycle adjacency patterns: steps of 1 and steps of 2."""
    c5 = np.zeros((5, 5), dtype=np.int64)
    c5p = np.zeros((5, 5), dtype=np.int64)
    for i in range(5):
        c5[i, (i + 1) % 5] = c5[(i + 1) % 5, i] = 1
        c5p[i, (i + 2) % 5] = c5p[(i + 2) % 5, i] = 1
    return c5, c5p


def petersen_partner_with_loops_spec() -> SchreierSpec:
    """The partner graph brought up to degree 3 by a self-loop everywhere."""
    base = petersen_partner_spec()
    ident = tuple(range(10))
    return SchreierSpec(10, base.perms + (ident,), (1, 0, 2))


@dataclass(frozen=True)
class RemediedPetersen:
    """The degree-equalized Petersen pipeline, stage by stage."""

    a_quad: LabeledGraph
    b_quad: LabeledGraph
    a_final: LabeledGraph
    b_final: LabeledGraph
    complex: SquareComplex


def remedied_petersen_pipeline() -> RemediedPetersen:
    """Equalize degrees with self-loops, split with the double-cover /
    two-copies step, then cover both outputs so they become bipartite on
    one partition, and build the square complex (40 vertices, degree 3).
    """
    a = schreier_graph(petersen_spec())
    b = schreier_graph(petersen_partner_with_loops_spec())
    a_quad, b_quad = quadripartite_pair(a, b)
    a_final = bipartite_double_cover(a_quad)
    b_final = bipartite_double_cover(b_quad)
    x = build_complex(a_final, b_final, a_final.partition)
    return RemediedPetersen(a_quad=a_quad, b_quad=b_quad, a_final=a_final, b_final=b_final, complex=x)


def remedied_petersen_css(ca: LinearCode | None = None, cb: LinearCode | None = None) -> CssCode:
    if ca is None:
        ca = LinearCode.repetition(3)
    if cb is None:
        cb = LinearCode.single_parity_check(3)
    return css_from_complex(remedied_petersen_pipeline().complex, ca, cb)


def cyclic_pair_specs(m: int, a_step: int = 1, b_step: int = 2) -> tuple[SchreierSpec, SchreierSpec]:
    """Left/right Cayley actions of a cyclic group with steps +-a and +-b."""
    from .graphs import cayley_graph

    g = cyclic_group(m)
    spec_a = cayley_graph(g, [a_step % m, (-a_step) % m], side="left")
    spec_b = cayley_graph(g, [b_step % m, (-b_step) % m], side="right")
    return spec_a, spec_b


def cyclic_complex(m: int, a_step: int = 1, b_step: int = 2) -> SquareComplex:
    """Double covers of the two cyclic-group cycles, then the complex.

    Requires a_step != +-b_step mod m, otherwise the covers share edges.
    """
    spec_a, spec_b = cyclic_pair_specs(m, a_step, b_step)
    ga = bipartite_double_cover(schreier_graph(spec_a))
    gb = bipartite_double_cover(schreier_graph(spec_b))
    return build_complex(ga, gb, ga.partition)


def cyclic_css(m: int, ca: LinearCode | None = None, cb: LinearCode | None = None,
               a_step: int = 1, b_step: int = 2) -> CssCode:
    if ca is None:
        ca = LinearCode.repetition(2)
    if cb is None:
        cb = LinearCode.repetition(2)
    return css_from_complex(cyclic_complex(m, a_step, b_step), ca, cb)
