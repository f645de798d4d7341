"""CayleyQMC model base module.

This module provides the XY-model operator factory: Pauli matrices, the edge
Hamiltonian H_<u,v> = (sx sx + sy sy) / 2 and the edge operator
K_<u,v> = exp(beta H_<u,v>) in its closed form
I + sinh(beta) H + (cosh(beta) - 1) H^2.

Example:

    from cayleyqmc.src.model import k_edge
    from cayleyqmc.src.tree import TreeCoordinate

    root, child = TreeCoordinate(), TreeCoordinate((1,))
    K = k_edge(root, child, beta=1.0)
    print(K.matrix.matrix.real)
"""
from dataclasses import dataclass
from dataclasses import field

import numpy as np

from cayleyqmc.settings import CAYLEYQMC_OPERATOR_TOL

from cayleyqmc.src import utils

from cayleyqmc.src.definitions import Axis
from cayleyqmc.src.errors import on_error_raise
from cayleyqmc.src.errors import ModelError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.errors import SiteError
from cayleyqmc.src.linalg import SiteOperator
from cayleyqmc.src.linalg import expm_hermitian
from cayleyqmc.src.linalg import identity
from cayleyqmc.src.linalg import tensor
from cayleyqmc.src.tree import ROOT

logger = utils.create_logger(__name__)

handle_error = on_error_raise(ModelError, logger, catch_error=ValueError)

PAULI_MATRICES = {
    Axis.X: np.array([[0, 1], [1, 0]], dtype=complex),
    Axis.Y: np.array([[0, -1j], [1j, 0]], dtype=complex),
    Axis.Z: np.array([[1, 0], [0, -1]], dtype=complex),
}


@handle_error
def pauli_matrix(axis):
    """Return the 2 x 2 Pauli matrix for ``axis`` (``Axis`` or 'x'/'y'/'z').

    :rtype: ``numpy.ndarray``
    """
    return PAULI_MATRICES[Axis(axis)].copy()


def pauli(axis, site=ROOT):
    """Return the Pauli operator for ``axis`` on ``site``.

    :rtype: :class:`SiteOperator`
    """
    return SiteOperator([site], pauli_matrix(axis))


def h_edge(u, v):
    """Return H_<u,v> = (sx(u) sx(v) + sy(u) sy(v)) / 2 on sites [u, v].

    :rtype: :class:`SiteOperator`
    """
    if u == v:
        raise SiteError(f'Edge endpoints coincide: {u!r}')
    xx = tensor(pauli(Axis.X, u), pauli(Axis.X, v))
    yy = tensor(pauli(Axis.Y, u), pauli(Axis.Y, v))
    return 0.5 * (xx + yy)


@dataclass(frozen=True)
class EdgeOperator:
    """K_<u,v> = exp(beta H_<u,v>) on sites [u, v]."""
    edge: tuple
    beta: float
    matrix: SiteOperator = field(repr=False)

    @property
    def sites(self):
        return self.edge


def k_edge(u, v, beta):
    """Return the edge operator from its closed form.

    :keyword  beta:  Inverse temperature, strictly positive.
    :type     beta:  ``float``

    :rtype: :class:`EdgeOperator`
    """
    beta = utils.require_positive(beta, 'beta', ParameterError)
    H = h_edge(u, v)
    K = identity([u, v]) + np.sinh(beta) * H + \
        (np.cosh(beta) - 1.0) * (H @ H)
    return EdgeOperator((u, v), beta, K)


def k_edge_expm(u, v, beta):
    """Return exp(beta H_<u,v>) by eigendecomposition (oracle for ``k_edge``).

    :rtype: :class:`SiteOperator`
    """
    return expm_hermitian(h_edge(u, v), beta)


@dataclass
class PowerIdentityReport:
    """Residuals of H^(2m) = H^2, H^(2m-1) = H and of the closed form of K."""
    m_max: int
    even_residuals: list
    odd_residuals: list
    closed_form_residuals: dict
    tol: float = CAYLEYQMC_OPERATOR_TOL
    failures: list = field(default_factory=list)

    @property
    def max_even_residual(self):
        return max(self.even_residuals)

    @property
    def max_odd_residual(self):
        return max(self.odd_residuals)

    @property
    def max_closed_form_residual(self):
        return max(self.closed_form_residuals.values(), default=0.0)

    @property
    def passed(self):
        return not self.failures


def verify_power_identities(m_max, beta_grid=(), tol=CAYLEYQMC_OPERATOR_TOL):
    """Check the power identities of H_<u,v> and the closed form of K_<u,v>.

    :keyword  m_max:  Largest m checked, m_max >= 1.
    :type     m_max:  ``int``
    :keyword  beta_grid:  Inverse temperatures for the closed-form check.
    :type     beta_grid:  iterable of ``float``

    :rtype: :class:`PowerIdentityReport`
    """
    if m_max < 1:
        raise ParameterError(f'm_max must be >= 1, got {m_max}')
    u, v = ROOT, ROOT.child(1)
    H = h_edge(u, v).matrix
    H2 = H @ H
    report = PowerIdentityReport(m_max, [], [], {}, tol)
    power = H.copy()
    for m in range(1, m_max + 1):
        report.odd_residuals.append(float(np.linalg.norm(power - H, 2)))
        power = power @ H
        report.even_residuals.append(float(np.linalg.norm(power - H2, 2)))
        power = power @ H
        if report.odd_residuals[-1] > tol:
            report.failures.append(f'H^{2 * m - 1} != H')
        if report.even_residuals[-1] > tol:
            report.failures.append(f'H^{2 * m} != H^2')
    for beta in beta_grid:
        closed = k_edge(u, v, beta).matrix
        residual = (closed - k_edge_expm(u, v, beta)).norm()
        report.closed_form_residuals[float(beta)] = residual
        if residual > tol:
            report.failures.append(f'closed form differs at beta={beta}')
    logger.debug(f'Power identities up to m={m_max}: '
                 f'{len(report.failures)} failures')
    return report


def edge_symmetry_residuals(beta):
    """Return the spin-flip and total-z commutator residuals of K_<u,v>.

    :rtype: ``dict``
    """
    u, v = ROOT, ROOT.child(1)
    H = h_edge(u, v)
    K = k_edge(u, v, beta).matrix
    flip = tensor(pauli(Axis.X, u), pauli(Axis.X, v))
    zz = tensor(pauli(Axis.Z, u), pauli(Axis.Z, v))
    return {
        'spin_flip_h': (flip @ H @ flip - H).norm(),
        'spin_flip_k': (flip @ K @ flip - K).norm(),
        'total_z_commutator': (K @ zz - zz @ K).norm(),
        'self_adjoint': (K - K.adjoint()).norm(),
    }
