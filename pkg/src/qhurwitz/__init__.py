"""Exact quantum weighted Hurwitz numbers.

Three independent constructions of the same weighted enumerative
invariants over the field of rational functions in the deformation
parameters, plus the coefficient tables of the generating series that
tie them together:

* exhaustive weighted walk counts in the transposition Cayley graph
  (:mod:`qhurwitz.group_algebra`),
* central-element eigenvalues by content products
  (:mod:`qhurwitz.hurwitz`, :mod:`qhurwitz.tau`),
* weighted branched-cover configuration sums
  (:mod:`qhurwitz.hurwitz`).

Everything is exact: arbitrary-precision rationals, sparse multivariate
polynomials and reduced rational functions (:mod:`qhurwitz.scalars`).
The walk counter has a compiled kernel with a pure-Python fallback,
selected at import; ``qhurwitz.group_algebra.path_kernel_name()`` reports
which one is active.
"""

from .errors import (
    BoundExceededError,
    ContextMismatchError,
    EvaluationPoleError,
    OrderMismatchError,
    ParseError,
    QHurwitzError,
    ScalarDivisionError,
    WeightMismatchError,
)
from .scalars import (
    Poly,
    Rational,
    Scalar,
    ZSeries,
    make_params,
    scalar_arith,
    scalar_eval,
    scalar_from_string,
    scalar_to_string,
    zseries_arith,
    zseries_scale_argument,
)
from .partitions import (
    Partition,
    aut_order,
    colength,
    contents,
    dominance_less,
    enumerate_partitions,
    hook_product,
    pochhammer_partition,
    z_mu,
    z_mu_qt,
)
from .characters import CharacterTable, central_character, char_table, character
from .symfunc import (
    SymmetricFunction,
    b_lambda,
    convert,
    g_j_series,
    g_lambda_value,
    hl_q_lambda,
    jack_g_lambda,
    macdonald_P,
    scalar_product_qt,
)
from .group_algebra import (
    CentralElement,
    PathCountMatrix,
    Permutation,
    central_multiply,
    class_basis_change,
    enumerate_paths,
    jm_symmetric_apply,
    path_kernel_name,
)
from .hurwitz import (
    WeightFamily,
    fd_bruteforce,
    fd_character,
    gj_cycle_expansion_check,
    hde_geometric,
    pure_hurwitz,
    weight_WE,
    weight_WH,
)
from .tau import ContentProductSeries, TauTable, r_lambda, tau_tables, weight_series

__version__ = "0.1.0"

__all__ = [
    "BoundExceededError",
    "CentralElement",
    "CharacterTable",
    "ContentProductSeries",
    "ContextMismatchError",
    "EvaluationPoleError",
    "OrderMismatchError",
    "ParseError",
    "Partition",
    "PathCountMatrix",
    "Permutation",
    "Poly",
    "QHurwitzError",
    "Rational",
    "Scalar",
    "ScalarDivisionError",
    "SymmetricFunction",
    "TauTable",
    "WeightFamily",
    "WeightMismatchError",
    "ZSeries",
    "aut_order",
    "b_lambda",
    "central_character",
    "central_multiply",
    "char_table",
    "character",
    "class_basis_change",
    "colength",
    "contents",
    "convert",
    "dominance_less",
    "enumerate_partitions",
    "enumerate_paths",
    "fd_bruteforce",
    "fd_character",
    "g_j_series",
    "g_lambda_value",
    "gj_cycle_expansion_check",
    "hde_geometric",
    "hl_q_lambda",
    "hook_product",
    "jack_g_lambda",
    "jm_symmetric_apply",
    "macdonald_P",
    "make_params",
    "path_kernel_name",
    "pochhammer_partition",
    "pure_hurwitz",
    "r_lambda",
    "scalar_arith",
    "scalar_eval",
    "scalar_from_string",
    "scalar_product_qt",
    "scalar_to_string",
    "tau_tables",
    "weight_WE",
    "weight_WH",
    "weight_series",
    "z_mu",
    "z_mu_qt",
    "zseries_arith",
    "zseries_scale_argument",
]
