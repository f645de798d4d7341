"""CayleyQMC boundary base module.

This module provides the two-dimensional dynamical system that governs
level-homogeneous boundary data h^(n) = [[x, y e^{i phi}], [y e^{-i phi}, x]]
of the XY-model chain:

* ``pushdown`` maps level n+1 data (x', y') to level n data (x, y);
* ``pullup`` is its explicit square-root inverse, defined iff
  x >= condition_number(beta) * y;
* ``orbit`` iterates ``pullup`` until it converges to the fixed point
  (1 / cosh^4 beta, 0), leaves the well-definedness region, or runs out of
  steps.

Example:

    from cayleyqmc.src.boundary import BoundaryPoint, orbit

    result = orbit(BoundaryPoint(1.0, 0.5), beta=1.0, max_steps=200)
    print(result.termination, result.step)   # Termination.DOMAIN_VIOLATION 2
"""
import math

from dataclasses import dataclass
from dataclasses import field

from cayleyqmc.settings import CAYLEYQMC_ORBIT_CONVERGENCE_TOL
from cayleyqmc.settings import CAYLEYQMC_ORBIT_MAX_STEPS

from cayleyqmc.src import utils

from cayleyqmc.src.definitions import Termination
from cayleyqmc.src.errors import DomainError
from cayleyqmc.src.errors import DomainViolation
from cayleyqmc.src.errors import NotApplicableError
from cayleyqmc.src.errors import ParameterError

logger = utils.create_logger(__name__)


@dataclass(frozen=True)
class BoundaryPoint:
    """Diagonal entry x = a11 = a22 and off-diagonal modulus y = |a12|."""
    x: float
    y: float

    def __post_init__(self):
        x, y = float(self.x), float(self.y)
        if not (math.isfinite(x) and math.isfinite(y)) or x < 0 or y < 0:
            raise DomainError(f'Boundary point ({x}, {y}) must be finite '
                              'and nonnegative')
        object.__setattr__(self, 'x', x)
        object.__setattr__(self, 'y', y)

    @property
    def in_domain(self):
        return self.x > self.y >= 0

    def distance(self, other):
        return math.hypot(self.x - other.x, self.y - other.y)


def _hyperbolics(beta):
    beta = utils.require_positive(beta, 'beta', ParameterError)
    return math.sinh(beta), math.cosh(beta)


def condition_number(beta):
    """Return 2 sqrt(cosh^3 beta) / (1 + cosh beta).

    ``pullup(x, y)`` is defined iff x >= condition_number(beta) * y.
    """
    _, c = _hyperbolics(beta)
    return 2.0 * math.sqrt(c ** 3) / (1.0 + c)


def contraction_factor(beta):
    """Return sinh(beta) (1 + cosh beta) / cosh^3 beta, which is < 1."""
    s, c = _hyperbolics(beta)
    return s * (1.0 + c) / c ** 3


def is_admissible(p, beta):
    """Query whether ``pullup`` is defined at ``p`` (p in the domain and the
    well-definedness condition holds).

    :rtype: ``bool``
    """
    return p.in_domain and p.x >= condition_number(beta) * p.y


def pushdown(p, beta):
    """Map level n+1 data (x', y') to level n data (x, y).

    :rtype: :class:`BoundaryPoint`
    """
    s, c = _hyperbolics(beta)
    x = p.x ** 2 * c ** 4 + p.y ** 2 * s ** 2 * c
    y = p.x * p.y * s * c * (1.0 + c)
    return BoundaryPoint(x, y)


def pullup(p, beta):
    """Map level n data (x, y) to level n+1 data (x', y').

    :raises DomainViolation: if x < condition_number(beta) * y.

    :rtype: :class:`BoundaryPoint`
    """
    s, c = _hyperbolics(beta)
    if p.y == 0 and p.x <= 0:
        raise DomainError(f'{p} is outside the domain x > y >= 0')
    threshold = condition_number(beta) * p.y
    if p.x < threshold:
        raise DomainViolation(p.x, p.y, threshold)
    root = math.sqrt(max(p.x ** 2 - threshold ** 2, 0.0))
    x_next = math.sqrt((p.x + root) / (2.0 * c ** 4))
    # Second equation of the push-down map solved for y'
    y_next = p.y / (x_next * s * c * (1.0 + c)) if p.y > 0 else 0.0
    return BoundaryPoint(x_next, y_next)


def fixed_point(beta):
    """Return the unique fixed point (1 / cosh^4 beta, 0) in the domain.

    :rtype: :class:`BoundaryPoint`
    """
    _, c = _hyperbolics(beta)
    return BoundaryPoint(1.0 / c ** 4, 0.0)


def off_diagonal_fixed_point_square(beta):
    """Return y^2 of the would-be fixed point with y != 0.

    Such a point needs x = 1 / (sinh cosh (1 + cosh)); the returned value is
    negative for every beta > 0, so no such fixed point exists.
    """
    s, c = _hyperbolics(beta)
    lhs = s * c * (1.0 + c)
    return (lhs - c ** 4) / (lhs ** 2 * s ** 2 * c)


@dataclass
class OrbitResult:
    """Pull-up trajectory starting from ``points[0]``."""
    beta: float
    points: list
    termination: Termination
    step: int
    violation: DomainViolation = field(default=None, repr=False)

    @property
    def converged(self):
        return self.termination is Termination.CONVERGED

    @property
    def label(self):
        if self.termination is Termination.DOMAIN_VIOLATION:
            return f'DomainViolation@{self.step}'
        if self.termination is Termination.CONVERGED:
            return 'Converged'
        return 'MaxSteps'


def orbit(p0, beta, max_steps=CAYLEYQMC_ORBIT_MAX_STEPS,
          tol=CAYLEYQMC_ORBIT_CONVERGENCE_TOL):
    """Iterate ``pullup`` from ``p0``.

    Stops with ``CONVERGED`` when a diagonal point (y = 0) moves by at most
    ``tol``, with ``DOMAIN_VIOLATION`` when the next pull-up is undefined, or
    with ``MAX_STEPS``.

    :rtype: :class:`OrbitResult`
    """
    if not p0.in_domain:
        raise DomainError(f'{p0} is outside the domain x > y >= 0')
    if max_steps < 1:
        raise ParameterError(f'max_steps must be >= 1, got {max_steps}')
    points = [p0]
    current = p0
    for step in range(1, max_steps + 1):
        try:
            nxt = pullup(current, beta)
        except DomainViolation as violation:
            logger.debug(f'Orbit from {p0} left the domain at step {step}')
            return OrbitResult(beta, points, Termination.DOMAIN_VIOLATION,
                               step, violation)
        points.append(nxt)
        if nxt.y == 0 and nxt.distance(current) <= tol:
            logger.debug(f'Orbit from {p0} converged at step {step}')
            return OrbitResult(beta, points, Termination.CONVERGED, step)
        current = nxt
    logger.debug(f'Orbit from {p0} hit max_steps={max_steps}')
    return OrbitResult(beta, points, Termination.MAX_STEPS, max_steps)


def orbit_closed_form(x0, beta, n):
    """Return x^(n) = (x0 cosh^4 beta)^(1 / 2^n) / cosh^4 beta for y0 = 0."""
    _, c = _hyperbolics(beta)
    c4 = c ** 4
    return (x0 * c4) ** (0.5 ** n) / c4


def trajectory_bound(p0, beta, n):
    """Return q^n x0 / y0, an upper bound on x^(n) / y^(n) along the orbit."""
    if p0.y <= 0:
        raise NotApplicableError('The ratio bound needs y > 0')
    return contraction_factor(beta) ** n * p0.x / p0.y


def orbit_length_bound(p0, beta):
    """Return the first n with q^n x0 / y0 < condition_number(beta).

    Since x^(n) / y^(n) < q^n x0 / y0 with q = contraction_factor(beta), the
    pull-up is undefined at step n + 1 at the latest.

    :rtype: ``int``
    """
    if p0.y <= 0:
        raise NotApplicableError('Diagonal orbits never terminate')
    q = contraction_factor(beta)
    ratio = p0.x / p0.y
    bound = condition_number(beta)
    if ratio < bound:
        return 0
    return int(math.floor(math.log(bound / ratio) / math.log(q))) + 1


def ratio_contraction_check(p, beta):
    """Check x'/y' < (sinh (1 + cosh) / cosh^3) * x / y for (x', y') = pullup(p).

    :rtype: ``bool``
    """
    if p.y == 0:
        raise NotApplicableError('The ratio bound needs y > 0')
    if not p.in_domain:
        raise DomainError(f'{p} is outside the domain x > y >= 0')
    nxt = pullup(p, beta)
    return nxt.x / nxt.y < contraction_factor(beta) * p.x / p.y
