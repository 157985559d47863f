"""Exact diagram calculus for the annular Temperley-Lieb category at q = 1.

Morphisms are integer-coefficient-free formal sums of annular diagrams
over the Gaussian rationals, reduced to a canonical circle-free form.
The default working mode is the quotient in which essential circles are
set to zero; see `configure` to switch to the raw category.
"""

from .canon import coordinates, enumerate_basis, ess_equal, f_apply, f_inverse, phi_chain
from .cheb import cheb_j, cheb_l, decat_check, poly_str
from .config import MODE_QUOTIENT, MODE_RAW, configure, get_config, set_config
from .diagram import (
    AnnularDiagram,
    Morphism,
    compose,
    crossing,
    gen_cap,
    gen_cup,
    gen_d,
    gen_id,
    gen_u,
)
from .planar import (
    ess_generator,
    factorize,
    iota,
    iota_prime,
    is_planar,
    nested_caps,
    nested_cups,
    partial_trace,
    tensor,
)
from .projectors import (
    IsoPair,
    extremal,
    extremal_by_recursion,
    highest_weight,
    iso_diff,
    iso_diff_maps,
    iso_equal,
    jones_wenzl,
    jw_k0_check,
    jw_pair,
    jw_partial_trace_check,
    kariso_contract,
    linked_check,
    lowest_weight,
    nested_form_check,
    overlap_check,
    split_idempotent,
    split_idempotent_nested,
    verify_properties,
    weight_tensor,
)
from .rep import WeightMap, extremal_matrix, phi
from .scalar import GaussianRational
from .verify import SUITES, run_suite

__version__ = "0.1.0"

__all__ = [
    "AnnularDiagram",
    "GaussianRational",
    "IsoPair",
    "MODE_QUOTIENT",
    "MODE_RAW",
    "Morphism",
    "SUITES",
    "WeightMap",
    "cheb_j",
    "cheb_l",
    "compose",
    "configure",
    "coordinates",
    "crossing",
    "decat_check",
    "enumerate_basis",
    "ess_equal",
    "ess_generator",
    "extremal",
    "extremal_by_recursion",
    "extremal_matrix",
    "f_apply",
    "f_inverse",
    "factorize",
    "gen_cap",
    "gen_cup",
    "gen_d",
    "gen_id",
    "gen_u",
    "get_config",
    "highest_weight",
    "iota",
    "iota_prime",
    "is_planar",
    "iso_diff",
    "iso_diff_maps",
    "iso_equal",
    "jones_wenzl",
    "jw_k0_check",
    "jw_pair",
    "jw_partial_trace_check",
    "kariso_contract",
    "linked_check",
    "lowest_weight",
    "nested_caps",
    "nested_cups",
    "nested_form_check",
    "overlap_check",
    "partial_trace",
    "phi",
    "phi_chain",
    "poly_str",
    "run_suite",
    "set_config",
    "split_idempotent",
    "split_idempotent_nested",
    "tensor",
    "verify_properties",
    "weight_tensor",
]
