"""trikernel: computer-algebra kernel for two-part graded polynomial rings.

The objects here carry a Z2 grading with a nilpotent odd part, a second
commutative product on that odd part, and scalar actions that may twist by
the Frobenius map over a quadratic field extension.  The kernel provides
Groebner bases with cofactor tracking, graded radical membership through an
auxiliary-variable construction, and exhaustive point enumeration over
finite base fields, plus a text frontend and CLI.
"""

from .arith import (
    QQ,
    PrimeField,
    QuadraticField,
    TrifieldModel,
    TrifieldScalar,
    prime_field,
    quadratic_field,
    symmetric_model,
    twisted_model,
)
from .errors import (
    BudgetExceededError,
    DomainMismatchError,
    ElaborationError,
    EnumerationUnsupportedError,
    FrontendError,
    GradingError,
    SharpOnEvenPartError,
    TrikernelError,
    TriSyntaxError,
    UnclosedTriidealError,
)
from .groebner import (
    GroebnerBasis,
    buchberger,
    ideal_member,
    ideal_trivial,
    minimal_power,
    normal_form,
    radical_member,
    representation,
    s_polynomial,
)
from .poly import (
    GREVLEX,
    GRLEX,
    LEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    PolyRing,
    VariableSet,
    divide,
)
from .triring import (
    TriIdeal,
    TriPoint,
    TriPolynomial,
    TriPolyRing,
    odd_rabinowitsch_ideal,
)
from .varieties import (
    DEFAULT_BUDGET,
    NullstellensatzReport,
    VarietyPair,
    check_containment,
    enumerate_varieties,
    ideal_of_varieties,
    in_ideal_of,
    nss_check,
    vanishing_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "QQ",
    "PrimeField",
    "QuadraticField",
    "TrifieldModel",
    "TrifieldScalar",
    "prime_field",
    "quadratic_field",
    "symmetric_model",
    "twisted_model",
    "TrikernelError",
    "DomainMismatchError",
    "SharpOnEvenPartError",
    "UnclosedTriidealError",
    "EnumerationUnsupportedError",
    "BudgetExceededError",
    "FrontendError",
    "TriSyntaxError",
    "ElaborationError",
    "GradingError",
    "Monomial",
    "MonomialOrder",
    "LEX",
    "GRLEX",
    "GREVLEX",
    "VariableSet",
    "PolyRing",
    "Polynomial",
    "divide",
    "GroebnerBasis",
    "s_polynomial",
    "normal_form",
    "buchberger",
    "ideal_member",
    "ideal_trivial",
    "radical_member",
    "minimal_power",
    "representation",
    "TriPolyRing",
    "TriPolynomial",
    "TriPoint",
    "TriIdeal",
    "odd_rabinowitsch_ideal",
    "DEFAULT_BUDGET",
    "VarietyPair",
    "NullstellensatzReport",
    "enumerate_varieties",
    "check_containment",
    "in_ideal_of",
    "vanishing_ideal",
    "ideal_of_varieties",
    "nss_check",
    "__version__",
]
