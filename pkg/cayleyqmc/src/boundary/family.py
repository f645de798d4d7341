"""Boundary conditions (w0, {h^(n)}) for the XY-model chain.

``solution_family`` is the one-parameter family of scalar solutions
w0 = I / alpha, h^(n) = (alpha cosh^4 beta)^(1/2^n) / cosh^4 beta * I; alpha_0
= 1 / cosh^4 beta gives the constant fixed-point family.
``boundary_from_orbit`` reads non-scalar boundary data off a pull-up orbit.

Example:

    from cayleyqmc.src.boundary import solution_family

    bc = solution_family(alpha=2.0, beta=1.0, n_max=3)
    print(bc.normalization())   # (1+0j)
"""
import math

from dataclasses import dataclass
from dataclasses import field
from functools import cached_property

import numpy as np

from cayleyqmc.settings import CAYLEYQMC_OPERATOR_TOL

from cayleyqmc.src import utils

from cayleyqmc.src.errors import BoundaryError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.linalg import SiteOperator
from cayleyqmc.src.linalg import sqrtm_positive

logger = utils.create_logger(__name__)


def _positive_definite(matrix, name):
    matrix = np.array(matrix, dtype=complex)
    if matrix.shape != (2, 2):
        raise BoundaryError(f'{name} must be 2 x 2, got {matrix.shape}')
    if not np.allclose(matrix, matrix.conj().T, rtol=0, atol=1e-12):
        raise BoundaryError(f'{name} is not Hermitian')
    if np.linalg.eigvalsh(matrix).min() <= 0:
        raise BoundaryError(f'{name} is not positive definite')
    return matrix


@dataclass(eq=False)
class BoundaryCondition:
    """Root weight w0 and level-homogeneous boundary fields h^(n)."""
    beta: float
    w0: np.ndarray
    h_levels: tuple
    alpha: float = None
    phase: float = field(default=0.0)

    def __post_init__(self):
        self.beta = utils.require_positive(self.beta, 'beta', ParameterError)
        self.w0 = _positive_definite(self.w0, 'w0')
        if not self.h_levels:
            raise BoundaryError('At least h^(0) is required')
        self.h_levels = tuple(
            _positive_definite(h, f'h^({n})')
            for n, h in enumerate(self.h_levels))

    @property
    def depth(self):
        """Deepest level with boundary data."""
        return len(self.h_levels) - 1

    def h(self, level):
        """Return h^(level).

        :rtype: ``numpy.ndarray``
        """
        if not 0 <= level <= self.depth:
            raise BoundaryError(
                f'No boundary data at level {level} (depth {self.depth})')
        return self.h_levels[level]

    @cached_property
    def w0_sqrt(self):
        return sqrtm_positive(SiteOperator(['w0'], self.w0)).matrix

    def normalization(self):
        """Return tr(w0 h^(0)) with the normalized trace.

        :rtype: ``complex``
        """
        return complex(np.trace(self.w0 @ self.h_levels[0]) / 2)

    def is_normalized(self, tol=CAYLEYQMC_OPERATOR_TOL):
        return abs(self.normalization() - 1) <= tol


def alpha_fixed(beta):
    """Return alpha_0 = 1 / cosh^4 beta, the fixed-point member of the family."""
    beta = utils.require_positive(beta, 'beta', ParameterError)
    return 1.0 / math.cosh(beta) ** 4


def family_scale(alpha, beta, n):
    """Return (alpha cosh^4 beta)^(1/2^n) / cosh^4 beta."""
    c4 = math.cosh(beta) ** 4
    return (alpha * c4) ** (0.5 ** n) / c4


def solution_family(alpha, beta, n_max):
    """Return w0 = I / alpha and h^(n) = family_scale(alpha, beta, n) * I.

    :keyword  n_max:  Deepest level to materialize.
    :type     n_max:  ``int``

    :rtype: :class:`BoundaryCondition`
    """
    alpha = utils.require_positive(alpha, 'alpha', ParameterError)
    beta = utils.require_positive(beta, 'beta', ParameterError)
    if n_max < 0:
        raise ParameterError(f'n_max must be >= 0, got {n_max}')
    eye = np.eye(2)
    h_levels = tuple(family_scale(alpha, beta, n) * eye
                     for n in range(n_max + 1))
    return BoundaryCondition(beta, eye / alpha, h_levels, alpha=alpha)


def boundary_point_matrix(p, phase=0.0):
    """Return [[x, y e^{i phase}], [y e^{-i phase}, x]] for ``p``.

    :rtype: ``numpy.ndarray``
    """
    off = p.y * np.exp(1j * phase)
    return np.array([[p.x, off], [np.conj(off), p.x]], dtype=complex)


def boundary_from_orbit(result, phase=0.0):
    """Return the boundary condition whose level-n field is orbit point n.

    Points are taken while they stay in the domain; w0 = I / x^(0) so that
    tr(w0 h^(0)) = 1.

    :keyword  result:  A pull-up orbit.
    :type     result:  :class:`cayleyqmc.src.boundary.base.OrbitResult`

    :rtype: :class:`BoundaryCondition`
    """
    points = []
    for p in result.points:
        if not p.in_domain:
            break
        points.append(p)
    if not points:
        raise BoundaryError('Orbit has no point inside the domain')
    h_levels = tuple(boundary_point_matrix(p, phase) for p in points)
    w0 = np.eye(2) / points[0].x
    logger.debug(f'Boundary condition of depth {len(points) - 1} from orbit')
    return BoundaryCondition(result.beta, w0, h_levels, phase=phase)
