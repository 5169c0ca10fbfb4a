"""Numerical ranges and certified lower bounds on the Crouzeix ratio.

For a square matrix A the ratio psi(A) is the supremum of ``||p(A)||`` over
polynomials with ``|p| <= 1`` on the numerical range W(A). Every estimate
returned here is a true lower bound: the denominator is a certified
supremum over a polygon containing W(A).
"""

from .errors import (
    BoundCheckError,
    CeilingViolation,
    ConsistencyError,
    ContainmentError,
    ContourError,
    ConvergenceError,
    CrouzeixError,
    DegeneracyError,
    DomainError,
    InputError,
    ReportIOError,
    SingularityError,
)
from .functions import Affine, Disk, Mobius, Plane, PolynomialFunction, PuncturedPlane, Strip, TanhStrip
from .matcore import complex_schur, eval_fn, eval_poly, op_norm, resolvent
from .numrange import Membership, RangeModel, build_range, classify_spectrum, contains, refine_range
from .polynomial import Polynomial
from .ratio import (
    CEILING,
    KNOWN,
    RatioEstimate,
    best_of,
    ratio_lb_candidate,
    ratio_lb_poly,
    regularized_ratio,
    relative_ratio_lb,
)
from .structure import (
    Contour,
    boundary_split,
    induction_bound_check,
    iterated_split,
    riesz_projection,
    similarity_construction,
)

__version__ = "0.1.0"
