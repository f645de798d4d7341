"""CayleyQMC dense engine.

This module builds the level couplers K_[m-1,m], the density operators
W_n] = K_n K_n^* on Lambda_n and evaluates expectations as normalized traces.
Volumes beyond the dense cap are reachable only through ``matrix_free_trace``,
which applies the local factors of K_n to batches of basis vectors.
"""
from dataclasses import dataclass

import numpy as np

from cayleyqmc.settings import CAYLEYQMC_DENSE_MAX_SITES
from cayleyqmc.settings import CAYLEYQMC_FUNCTIONAL_TOL
from cayleyqmc.settings import CAYLEYQMC_MATRIX_FREE_BATCH
from cayleyqmc.settings import CAYLEYQMC_MATRIX_FREE_MAX_SITES

from cayleyqmc.src import utils

from cayleyqmc.src.definitions import EvaluationForm
from cayleyqmc.src.errors import FeasibilityError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.linalg import SiteOperator
from cayleyqmc.src.linalg import apply_local
from cayleyqmc.src.linalg import embed
from cayleyqmc.src.linalg import from_factors
from cayleyqmc.src.linalg import identity
from cayleyqmc.src.linalg import normalized_trace
from cayleyqmc.src.linalg import sqrtm_positive
from cayleyqmc.src.model import k_edge
from cayleyqmc.src.state.compatibility import density_level
from cayleyqmc.src.state.compatibility import resolve_form
from cayleyqmc.src.tree import ROOT
from cayleyqmc.src.tree import ball
from cayleyqmc.src.tree import leg_index
from cayleyqmc.src.tree import level_set
from cayleyqmc.src.tree import successors

logger = utils.create_logger(__name__)


def ball_size(n, k=2):
    """Return |Lambda_n| = (k^(n+1) - 1) / (k - 1)."""
    return n + 1 if k == 1 else (k ** (n + 1) - 1) // (k - 1)


def _check_dense(n_sites):
    if n_sites > CAYLEYQMC_DENSE_MAX_SITES:
        raise FeasibilityError(
            f'{n_sites} sites exceed the dense limit of '
            f'{CAYLEYQMC_DENSE_MAX_SITES}; use the transfer engine')


def _edges(m, k=2):
    """Edges of K_[m-1,m] in product order: forward parents, forward children."""
    return [(x, y) for x in level_set(m - 1, k) for y in successors(x, k)]


def build_level_coupler(m, beta, k=2, sites=None):
    """Return K_[m-1,m] = prod_{x in W_{m-1}} prod_{y in S(x)} K_<x,y>.

    :keyword  m:  Level of the children, m >= 1.
    :type     m:  ``int``
    :keyword  sites:  Target sites (default Lambda_m); must contain
        W_{m-1} and W_m.
    :type     sites:  sequence of :class:`TreeCoordinate`

    :rtype: :class:`cayleyqmc.src.linalg.SiteOperator`
    """
    if not isinstance(m, int) or m < 1:
        raise ParameterError(f'Coupler level must be >= 1, got {m!r}')
    sites = ball(m, k) if sites is None else tuple(sites)
    _check_dense(len(sites))
    coupler = identity(sites)
    for x, y in _edges(m, k):
        coupler = coupler @ embed(k_edge(x, y, beta).matrix, sites)
    logger.debug(f'Built K_[{m - 1},{m}] on {len(sites)} sites')
    return coupler


@dataclass(frozen=True, eq=False)
class Density:
    """W_n] on Lambda_n with its normalization flag."""
    n: int
    operator: SiteOperator
    normalized: bool

    @property
    def sites(self):
        return self.operator.sites

    def trace(self):
        return normalized_trace(self.operator)

    def expectation(self, obs):
        """Return tr(W_n] a) for an observable supported in Lambda_n.

        :rtype: ``complex``
        """
        obs.check_support(self.n)
        return normalized_trace(self.operator @ obs.to_operator(self.sites))


def build_density(n, beta, bc):
    """Return W_n] = w0^{1/2} K_[0,1] ... K_[n-1,n] (x h^(n)) K^* ... w0^{1/2}.

    :rtype: :class:`Density`
    """
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f'Level must be a nonnegative integer, got {n!r}')
    sites = ball(n, 2)
    _check_dense(len(sites))
    k_n = embed(SiteOperator([ROOT], bc.w0_sqrt), sites)
    for m in range(1, n + 1):
        k_n = k_n @ build_level_coupler(m, beta, sites=sites)
    leaves = from_factors({x: bc.h(n) for x in level_set(n, 2)}, sites)
    operator = k_n @ leaves @ k_n.adjoint()
    normalized = bc.is_normalized()
    if not normalized:
        logger.warning(f'Boundary data is not normalized '
                       f'(tr(w0 h0) = {bc.normalization():.6g}); W_{n}] is '
                       'not a density operator')
    return Density(n, operator, normalized)


def _kraus_sequence(n, beta, bc):
    """Local factors of K_n = w0^{1/2} C_1 ... C_n (x h^(n))^{1/2} in the
    order they act on a vector."""
    h_sqrt = sqrtm_positive(SiteOperator([ROOT], bc.h(n))).matrix
    sequence = [((x,), h_sqrt) for x in level_set(n, 2)]
    for m in range(n, 0, -1):
        sequence.extend(
            ((x, y), k_edge(x, y, beta).matrix.matrix)
            for x, y in reversed(_edges(m)))
    sequence.append(((ROOT,), bc.w0_sqrt))
    return sequence


def matrix_free_trace(obs, n, beta, bc, batch=CAYLEYQMC_MATRIX_FREE_BATCH):
    """Return tr(W_n] a) without materializing W_n].

    Uses tr(K K^* a) = sum_i <K e_i, a K e_i> over the computational basis,
    processed ``batch`` basis vectors at a time.

    :rtype: ``complex``
    """
    obs.check_support(n)
    legs = leg_index(n, 2)
    n_sites = len(legs)
    if n_sites > CAYLEYQMC_MATRIX_FREE_MAX_SITES:
        raise FeasibilityError(
            f'{n_sites} sites exceed the matrix-free limit of '
            f'{CAYLEYQMC_MATRIX_FREE_MAX_SITES}')
    sequence = _kraus_sequence(n, beta, bc)
    dim = 2 ** n_sites
    logger.debug(f'Matrix-free trace over {dim} basis vectors on {n_sites} '
                 f'sites ({len(sequence)} local factors)')
    total = 0j
    for start in range(0, dim, batch):
        size = min(batch, dim - start)
        states = np.zeros((size, dim), dtype=complex)
        states[np.arange(size), start + np.arange(size)] = 1.0
        states = states.reshape((size,) + (2,) * n_sites)
        for sites, matrix in sequence:
            states = apply_local(states, matrix, [legs[s] for s in sites])
        for term in obs.terms:
            image = states
            for vertex, factor in term.factors:
                image = apply_local(image, factor, [legs[vertex]])
            total += term.coeff * np.vdot(states, image)
    return complex(total / dim)


def expectation_dense(obs, n, beta, bc, form=EvaluationForm.AUTO,
                      allow_matrix_free=False, tol=CAYLEYQMC_FUNCTIONAL_TOL):
    """Return the expectation of ``obs`` on Lambda_n from the density operator.

    The COROLLARY form evaluates tr(W_n] a), the PADDED form
    tr(W_{n+1]} (a x I)). Densities above the dense cap are evaluated
    matrix-free when ``allow_matrix_free`` is set.

    :rtype: ``complex``
    """
    obs.check_support(n)
    form = resolve_form(form, bc, n, beta, tol)
    level = density_level(form, n)
    n_sites = ball_size(level)
    if n_sites <= CAYLEYQMC_DENSE_MAX_SITES:
        return build_density(level, beta, bc).expectation(obs)
    if n_sites <= CAYLEYQMC_MATRIX_FREE_MAX_SITES and allow_matrix_free:
        return matrix_free_trace(obs, level, beta, bc)
    hint = '' if n_sites > CAYLEYQMC_MATRIX_FREE_MAX_SITES else \
        ' (pass allow_matrix_free=True for the matrix-free trace)'
    raise FeasibilityError(
        f'Density W_{level}] on {n_sites} sites is beyond the dense engine'
        f'{hint}; use the transfer engine')
