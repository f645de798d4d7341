"""Quasi-conditional expectations of the forward chain on small windows.

The root map E^(a) = tr_0(K_[0,1]^* w0^{1/2} a w0^{1/2} K_[0,1]) and the
level maps E_k(X) = tr_{W_{k-1}}(K_[k-1,k]^* X K_[k-1,k]) are materialized
through their Kraus operators; their Choi matrices certify complete
positivity and chaining them reproduces the finite-volume functional.
"""
from dataclasses import dataclass
from dataclasses import field

import numpy as np
import scipy.linalg

from cayleyqmc.settings import CAYLEYQMC_FUNCTIONAL_TOL
from cayleyqmc.settings import CAYLEYQMC_OPERATOR_TOL

from cayleyqmc.src import utils

from cayleyqmc.src.definitions import EvaluationForm
from cayleyqmc.src.errors import FeasibilityError
from cayleyqmc.src.linalg import SiteOperator
from cayleyqmc.src.linalg import embed
from cayleyqmc.src.linalg import from_factors
from cayleyqmc.src.linalg import identity
from cayleyqmc.src.linalg import normalized_partial_trace
from cayleyqmc.src.linalg import normalized_trace
from cayleyqmc.src.model import pauli_matrix
from cayleyqmc.src.state.dense import build_level_coupler
from cayleyqmc.src.state.dense import expectation_dense
from cayleyqmc.src.state.observable import random_product_observable
from cayleyqmc.src.tree import ROOT
from cayleyqmc.src.tree import TreeCoordinate
from cayleyqmc.src.tree import ball
from cayleyqmc.src.tree import level_set

logger = utils.create_logger(__name__)

MAX_WINDOW = 2
CHAIN_MONOMIALS = 3
MODULE_SITE = TreeCoordinate((1, 1))


def conjugate_trace(kraus, x, traced):
    """Return tr_traced(kraus^* x kraus) with the normalized partial trace.

    Sites of ``x`` outside ``kraus`` are carried along untouched.

    :rtype: :class:`SiteOperator`
    """
    sites = kraus.sites + tuple(s for s in x.sites if s not in kraus.sites)
    kraus = embed(kraus, sites)
    product = kraus.adjoint() @ embed(x, sites) @ kraus
    keep = [s for s in sites if s not in traced]
    return normalized_partial_trace(product, keep)


def choi_matrix(kraus, traced):
    """Return the Choi matrix sum_ij |i><j| x E(|i><j|) of
    E(X) = tr_traced(kraus^* X kraus).

    :rtype: ``numpy.ndarray``
    """
    sites = kraus.sites
    keep = [s for s in sites if s not in traced]
    gone = [s for s in sites if s in traced]
    adjoint = kraus.adjoint().matrix
    n = len(sites)
    perm = [sites.index(s) for s in keep + gone]
    columns = adjoint.reshape((2,) * n + (adjoint.shape[1],))
    columns = columns.transpose(perm + [n])
    dk, dt = 2 ** len(keep), 2 ** len(gone)
    # [(input i, kept k), traced t]
    stacked = columns.reshape(dk, dt, -1).transpose(2, 0, 1).reshape(-1, dt)
    return stacked @ stacked.conj().T / dt


def _relative_min_eigenvalue(matrix):
    eigenvalues = scipy.linalg.eigvalsh(0.5 * (matrix + matrix.conj().T))
    return float(eigenvalues.min() / max(abs(eigenvalues).max(), 1e-300))


def root_kraus(beta, bc):
    """Return w0^{1/2} K_[0,1] on Lambda_1."""
    sites = ball(1, 2)
    return embed(SiteOperator([ROOT], bc.w0_sqrt), sites) @ \
        build_level_coupler(1, beta, sites=sites)


def level_kraus(k, beta):
    """Return K_[k-1,k] on W_{k-1} and W_k."""
    sites = level_set(k - 1, 2).vertices + level_set(k, 2).vertices
    return build_level_coupler(k, beta, sites=sites)


@dataclass(eq=False)
class QuasiConditionalWindow:
    """Root and level maps on Lambda_{n_window} with their checks."""
    n_window: int
    beta: float
    root: SiteOperator = field(repr=False)
    levels: dict = field(repr=False)
    choi_min_eigenvalues: dict = field(default_factory=dict)
    module_residual: float = None
    chain_residual: float = None
    identity_residual: float = None

    def hat_e1(self, a):
        """Apply the root map to ``a`` (supported in the window)."""
        return conjugate_trace(self.root, a, (ROOT,))

    def e_level(self, k, x):
        """Apply E_k to ``x`` supported on W_{k-1} and beyond."""
        return conjugate_trace(
            self.levels[k], x, level_set(k - 1, 2).vertices)

    def chain(self, a, h_top):
        """Return tr(h_top^{x W_n} E_n(... E_2(E^(a)) ...)) for the window top
        level n."""
        x = self.hat_e1(a)
        for k in range(2, self.n_window + 1):
            x = self.e_level(k, x)
        top = level_set(self.n_window, 2).vertices
        leaves = from_factors({v: h_top for v in top}, top)
        return normalized_trace(leaves @ x)

    def checks(self):
        out = {f'choi_{name}': value
               for name, value in self.choi_min_eigenvalues.items()}
        out.update({
            'module': self.module_residual,
            'chain': self.chain_residual,
            'identity': self.identity_residual,
        })
        return {name: value for name, value in out.items() if value is not None}

    def passed(self, operator_tol=CAYLEYQMC_OPERATOR_TOL,
               functional_tol=CAYLEYQMC_FUNCTIONAL_TOL):
        choi = all(v >= -functional_tol
                   for v in self.choi_min_eigenvalues.values())
        module = self.module_residual is None or \
            self.module_residual <= operator_tol
        chain = self.chain_residual is None or \
            self.chain_residual <= functional_tol
        return choi and module and chain


def quasi_conditional_window(n_window, beta, bc, seed=0):
    """Materialize the quasi-conditional maps on Lambda_{n_window} and check
    complete positivity, the module property and the chained evaluation.

    :keyword  n_window:  1 or 2.
    :type     n_window:  ``int``
    :keyword  seed:  Seed of the random window operator and monomials.
    :type     seed:  ``int``

    :rtype: :class:`QuasiConditionalWindow`
    """
    if n_window not in range(1, MAX_WINDOW + 1):
        raise FeasibilityError(
            f'Window Lambda_{n_window} is outside the dense range '
            f'1..{MAX_WINDOW}')
    rng = np.random.default_rng(seed)
    window = QuasiConditionalWindow(
        n_window, beta, root_kraus(beta, bc),
        {k: level_kraus(k, beta) for k in range(2, n_window + 1)})

    window.choi_min_eigenvalues['hat_e1'] = _relative_min_eigenvalue(
        choi_matrix(window.root, (ROOT,)))
    for k, kraus in window.levels.items():
        window.choi_min_eigenvalues[f'e{k}'] = _relative_min_eigenvalue(
            choi_matrix(kraus, level_set(k - 1, 2).vertices))

    # Pulled back to the level-1 boundary field, E^(I) must be a state.
    leaves = from_factors({v: bc.h(1) for v in level_set(1, 2)},
                          level_set(1, 2).vertices)
    window.identity_residual = abs(normalized_trace(
        leaves @ window.hat_e1(identity([ROOT]))) - 1)

    if n_window >= 2:
        sites = ball(n_window, 2)
        dim = 2 ** len(sites)
        a = SiteOperator(sites, rng.normal(size=(dim, dim)) +
                         1j * rng.normal(size=(dim, dim)))
        c = SiteOperator([MODULE_SITE], pauli_matrix('x'))
        expected = c @ window.hat_e1(a)
        window.module_residual = (window.hat_e1(c @ a) - expected).norm() / \
            max(1.0, expected.norm())

    chain = 0.0
    for _ in range(CHAIN_MONOMIALS):
        obs = random_product_observable(rng, ball(n_window - 1, 2))
        direct = expectation_dense(obs, n_window - 1, beta, bc,
                                   form=EvaluationForm.PADDED)
        chained = window.chain(
            obs.to_operator(ball(n_window - 1, 2)), bc.h(n_window))
        chain = max(chain, abs(chained - direct))
    window.chain_residual = chain
    logger.debug(f'Quasi-conditional window n={n_window}: {window.checks()}')
    return window
