"""Order spectra and same-order types of finite groups.

Build a group from a small expression language (cyclic, dihedral, dicyclic,
symmetric, alternating, Frobenius, special linear and unitary families plus
direct products), enumerate it, and compute how many elements it has of each
order.  The distinct counts form the group's same-order type; the package
verifies which small simple groups have a five-size type and exhibits
solvable groups of order 168 sharing that cardinality with PSL(2,7).
"""

from .core import (
    AlphaType,
    DEFAULT_CAP,
    Group,
    GroupElement,
    NonIsoCertificate,
    PairElement,
    Spectrum,
    alpha_type,
    element_order,
    noniso_certificate,
    product_group,
    spectrum_checks,
    spectrum_direct_product,
)
from .dsl import eval_expr, group_for, normalize_expr, parse_expr, print_expr
from .errors import (
    CapExceededError,
    DslError,
    EngineError,
    InvalidParameterError,
    NoWitnessError,
    OrderMismatchError,
    VerificationError,
)
from .fields import FiniteField, field_make
from .matrices import (
    MatrixElement,
    MatrixGroup,
    classical_order,
    projectivize,
    psl_group,
    psu_group,
    sl_group,
    su_group,
)
from .perms import Permutation, direct_product, family_group, permutation_group
from .reports import ENGINE_VERSION, build_report, report_for
from .verify import counterexample_report, hunt_report, theorem_report

__version__ = ENGINE_VERSION

__all__ = [
    "AlphaType",
    "CapExceededError",
    "DEFAULT_CAP",
    "DslError",
    "ENGINE_VERSION",
    "EngineError",
    "FiniteField",
    "Group",
    "GroupElement",
    "InvalidParameterError",
    "MatrixElement",
    "MatrixGroup",
    "NonIsoCertificate",
    "NoWitnessError",
    "OrderMismatchError",
    "PairElement",
    "Permutation",
    "Spectrum",
    "VerificationError",
    "alpha_type",
    "build_report",
    "classical_order",
    "counterexample_report",
    "direct_product",
    "element_order",
    "eval_expr",
    "family_group",
    "field_make",
    "group_for",
    "hunt_report",
    "noniso_certificate",
    "normalize_expr",
    "parse_expr",
    "permutation_group",
    "print_expr",
    "product_group",
    "projectivize",
    "psl_group",
    "psu_group",
    "report_for",
    "sl_group",
    "spectrum_checks",
    "spectrum_direct_product",
    "su_group",
    "theorem_report",
]
