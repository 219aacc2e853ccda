"""Exact arithmetic for block decompositions of binary words and the
block-graded Lie algebra of generator polynomials, with a batch relation
verifier, an HTTP service, and a thin-client CLI.
"""

__version__ = "0.1.0"

from .blocks import (
    BlockTuple,
    bl,
    bl_inverse,
    block_decompose,
    block_degree,
    depth,
    depth_of_monomial,
    depth_sign_transform,
    duality,
    framed_block_degree,
    hoffman_count,
    pi_bl,
    pi_bl_inverse,
    weight,
)
from .blockpoly import (
    block_differential,
    block_shuffle_sum,
    cyclic_sum,
    generator_closed_form,
    generator_poly,
    generator_solution_space,
    half_generator,
    ihara_action,
    ihara_action_unsigned,
    ihara_bracket,
    left_nested_bg,
    left_nested_reduced,
    lyndon_dim,
    reduce_block_poly,
    reduced_bracket,
    reduced_generator,
    unreduce_block_poly,
)
from .cpoly import CPoly, InexactDivision, parse_monomial
from .linalg import rank_over_q
from .ncpoly import NCPoly
from .verify import RelationReport, SUITE_NAMES, VerifyConfig, full_report, run_suite
from .wordops import (
    FormalII,
    TensorTerm,
    delta1,
    graded_delta1,
    ihara_bracket_word,
    ihara_word,
    infinitesimal_coaction,
    is_lie_element,
    shuffle,
    star,
)

__all__ = [
    "BlockTuple",
    "CPoly",
    "FormalII",
    "InexactDivision",
    "NCPoly",
    "RelationReport",
    "SUITE_NAMES",
    "TensorTerm",
    "VerifyConfig",
    "bl",
    "bl_inverse",
    "block_decompose",
    "block_degree",
    "block_differential",
    "block_shuffle_sum",
    "cyclic_sum",
    "delta1",
    "depth",
    "depth_of_monomial",
    "depth_sign_transform",
    "duality",
    "framed_block_degree",
    "full_report",
    "generator_closed_form",
    "generator_poly",
    "generator_solution_space",
    "graded_delta1",
    "half_generator",
    "hoffman_count",
    "ihara_action",
    "ihara_action_unsigned",
    "ihara_bracket",
    "ihara_bracket_word",
    "ihara_word",
    "infinitesimal_coaction",
    "is_lie_element",
    "left_nested_bg",
    "left_nested_reduced",
    "lyndon_dim",
    "parse_monomial",
    "pi_bl",
    "pi_bl_inverse",
    "rank_over_q",
    "reduce_block_poly",
    "reduced_bracket",
    "reduced_generator",
    "run_suite",
    "shuffle",
    "star",
    "unreduce_block_poly",
    "weight",
]
