"""Exact degenerate poly-Bernoulli numbers, polynomials and identities.

Everything is computed over Q or Q[lambda] with arbitrary-precision
rationals; there is no floating point anywhere.
"""

from .errors import (
    ConstantTermNotOne,
    NonUnitLeadingCoefficient,
    NonzeroConstantTerm,
    NonzeroInnerConstant,
    NotDelta,
    NotInvertible,
    PolybernError,
    PrecisionExceeded,
    UnknownIdentity,
)
from .families import (
    DEFAULT_PRECISION,
    FAMILY_IDS,
    SequenceTable,
    bernoulli,
    carlitz_beta,
    carlitz_beta_poly,
    daehee,
    dpb_gf,
    dpb_higher_gf,
    dpb_higher_numbers,
    dpb_higher_poly,
    dpb_numbers,
    dpb_poly,
    elam,
    poly_bernoulli,
    polylog_series,
)
from .identities import CATALOG_IDS, IdentityReport, Witness, verify
from .parser import eval_expr, parse, render
from .polynomials import Polynomial
from .ring import LAMBDA, LambdaPoly, Rational, lambda_eval, lambda_is_constant
from .series import Series
from .umbral import (
    Functional,
    difference_property,
    invariant_integral,
    op_apply,
    pair,
    sheffer_verify,
    shift,
)

__version__ = "0.1.0"
