"""CayleyQMC linalg base module.

This module provides a dense operator type (SiteOperator) for operators living
on an ordered list of two-dimensional sites, together with the tensor
embedding, normalized (partial) traces and Hermitian functional calculus the
other components are built on.

Legs are ordered big-endian: the first site of ``sites`` is the most
significant qubit of the matrix index, so ``tensor(a, b).matrix`` equals
``numpy.kron(a.matrix, b.matrix)``.

Example:

    import numpy as np
    from cayleyqmc.src.linalg import SiteOperator
    from cayleyqmc.src.linalg import embed, normalized_partial_trace

    sz = SiteOperator(['u'], np.diag([1, -1]))
    zz = embed(sz, ['u', 'v']) @ embed(SiteOperator(['v'], sz.matrix), ['u', 'v'])
    print(normalized_partial_trace(zz, ['u']).matrix)  # zero matrix
"""
import numpy as np

from cayleyqmc.settings import CAYLEYQMC_HERMITIAN_TOL

from cayleyqmc.src import utils

from cayleyqmc.src.errors import on_error_raise
from cayleyqmc.src.errors import DisjointnessError
from cayleyqmc.src.errors import EmbeddingError
from cayleyqmc.src.errors import HermiticityError
from cayleyqmc.src.errors import LinalgError
from cayleyqmc.src.errors import SiteError

logger = utils.create_logger(__name__)

handle_error = on_error_raise(
    LinalgError,
    logger,
    catch_error=(np.linalg.LinAlgError, ValueError))

SITE_DIM = 2


class SiteOperator:
    """Dense complex matrix attached to an ordered list of sites."""

    def __init__(self, sites, matrix):
        """
        :keyword  sites:  Site labels; order defines tensor-leg order.
        :type     sites:  sequence of hashable
        :keyword  matrix:  Square matrix of dimension ``2 ** len(sites)``.
        :type     matrix:  array-like
        """
        sites = tuple(sites)
        if len(set(sites)) != len(sites):
            raise SiteError(f'Duplicate sites in {sites}')
        matrix = np.array(matrix, dtype=complex)
        dim = SITE_DIM ** len(sites)
        if matrix.shape != (dim, dim):
            raise SiteError(
                f'Matrix of shape {matrix.shape} does not fit '
                f'{len(sites)} sites (expected {dim} x {dim})')
        self._sites = sites
        self._matrix = matrix

    @property
    def sites(self):
        return self._sites

    @property
    def matrix(self):
        return self._matrix

    @property
    def dim(self):
        return self._matrix.shape[0]

    def _aligned(self, other):
        if not isinstance(other, SiteOperator):
            return NotImplemented
        if other.sites == self.sites:
            return self, other
        target = self.sites + tuple(
            s for s in other.sites if s not in self.sites)
        return embed(self, target), embed(other, target)

    def __matmul__(self, other):
        pair = self._aligned(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return SiteOperator(a.sites, a.matrix @ b.matrix)

    def __add__(self, other):
        pair = self._aligned(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return SiteOperator(a.sites, a.matrix + b.matrix)

    def __sub__(self, other):
        return self + (-1) * other

    def __mul__(self, scalar):
        if isinstance(scalar, SiteOperator):
            return NotImplemented
        return SiteOperator(self.sites, scalar * self.matrix)

    __rmul__ = __mul__

    def __neg__(self):
        return (-1) * self

    def __repr__(self):
        labels = ', '.join(str(s) for s in self.sites)
        return f'SiteOperator([{labels}], dim={self.dim})'

    def adjoint(self):
        """Return the conjugate transpose on the same sites."""
        return SiteOperator(self.sites, self.matrix.conj().T)

    def norm(self):
        """Return the operator (spectral) norm."""
        if self.dim == 0:
            return 0.0
        return float(np.linalg.norm(self.matrix, 2))

    def is_hermitian(self, tol=CAYLEYQMC_HERMITIAN_TOL):
        """Query hermiticity within ``tol`` relative to the operator norm.

        :rtype: ``bool``
        """
        scale = max(self.norm(), 1.0)
        return float(np.max(np.abs(
            self.matrix - self.matrix.conj().T))) <= tol * scale

    @handle_error
    def is_positive(self, tol=CAYLEYQMC_HERMITIAN_TOL):
        """Query positivity: Hermitian with all eigenvalues >= -tol * norm.

        :rtype: ``bool``
        """
        if not self.is_hermitian(tol):
            return False
        eigenvalues = np.linalg.eigvalsh(_hermitian_part(self.matrix))
        scale = max(float(np.max(np.abs(eigenvalues))), 1e-300)
        return bool(eigenvalues.min() >= -tol * scale)


def _hermitian_part(matrix):
    return 0.5 * (matrix + matrix.conj().T)


def _permute_legs(matrix, perm):
    """Reorder legs so that output leg j is input leg ``perm[j]``."""
    n = len(perm)
    if n == 0 or list(perm) == list(range(n)):
        return matrix
    tensor = matrix.reshape((SITE_DIM,) * (2 * n))
    axes = list(perm) + [p + n for p in perm]
    return tensor.transpose(axes).reshape(matrix.shape)


def identity(sites):
    """Return the identity operator on ``sites``.

    :rtype: :class:`SiteOperator`
    """
    sites = tuple(sites)
    return SiteOperator(sites, np.eye(SITE_DIM ** len(sites)))


def from_factors(factors, sites):
    """Return the product operator of single-site ``factors`` on ``sites``.

    Sites absent from ``factors`` carry the identity.

    :keyword  factors:  Map from site to a 2 x 2 matrix.
    :type     factors:  ``dict``
    :keyword  sites:  Target site order.
    :type     sites:  sequence

    :rtype: :class:`SiteOperator`
    """
    sites = tuple(sites)
    unknown = set(factors) - set(sites)
    if unknown:
        raise EmbeddingError(f'Factor sites {sorted(map(str, unknown))} '
                             'are not among the target sites')
    matrix = np.ones((1, 1), dtype=complex)
    eye = np.eye(SITE_DIM, dtype=complex)
    for site in sites:
        matrix = np.kron(matrix, factors.get(site, eye))
    return SiteOperator(sites, matrix)


def tensor(a, b):
    """Return ``a`` tensor ``b`` on the concatenated site list.

    :rtype: :class:`SiteOperator`
    """
    overlap = set(a.sites) & set(b.sites)
    if overlap:
        raise DisjointnessError(
            f'Tensor factors share sites {sorted(map(str, overlap))}')
    return SiteOperator(a.sites + b.sites, np.kron(a.matrix, b.matrix))


def embed(a, target_sites):
    """Tensor identities on the missing sites and reorder to ``target_sites``.

    :rtype: :class:`SiteOperator`
    """
    target = tuple(target_sites)
    if len(set(target)) != len(target):
        raise SiteError(f'Duplicate sites in {target}')
    if not set(a.sites) <= set(target):
        missing = set(a.sites) - set(target)
        raise EmbeddingError(
            f'Sites {sorted(map(str, missing))} are not in the target')
    if a.sites == target:
        return a
    extra = tuple(s for s in target if s not in a.sites)
    current = a.sites + extra
    matrix = np.kron(a.matrix, np.eye(SITE_DIM ** len(extra)))
    perm = [current.index(s) for s in target]
    return SiteOperator(target, _permute_legs(matrix, perm))


def normalized_trace(a):
    """Return ``Tr(a) / 2 ** len(a.sites)``.

    :rtype: ``complex``
    """
    return complex(np.trace(a.matrix) / a.dim)


def normalized_partial_trace(a, keep):
    """Trace out every site not in ``keep``, dividing by the traced dimension.

    The result lives on ``keep`` in the given order.

    :rtype: :class:`SiteOperator`
    """
    keep = tuple(keep)
    if len(set(keep)) != len(keep):
        raise SiteError(f'Duplicate sites in {keep}')
    if not set(keep) <= set(a.sites):
        missing = set(keep) - set(a.sites)
        raise SiteError(
            f'Sites {sorted(map(str, missing))} are not in the operator')
    traced = tuple(s for s in a.sites if s not in keep)
    order = keep + traced
    matrix = _permute_legs(a.matrix, [a.sites.index(s) for s in order])
    dk = SITE_DIM ** len(keep)
    dt = SITE_DIM ** len(traced)
    reduced = np.einsum('ijkj->ik', matrix.reshape(dk, dt, dk, dt)) / dt
    return SiteOperator(keep, reduced)


@handle_error
def function_hermitian(a, func, tol=CAYLEYQMC_HERMITIAN_TOL):
    """Return ``func(a)`` through the eigendecomposition of Hermitian ``a``.

    :keyword  func:  Vectorized real function applied to the eigenvalues.
    :type     func:  ``callable``

    :rtype: :class:`SiteOperator`
    """
    if not a.is_hermitian(tol):
        raise HermiticityError(f'{a!r} is not Hermitian')
    eigenvalues, vectors = np.linalg.eigh(_hermitian_part(a.matrix))
    matrix = (vectors * func(eigenvalues)) @ vectors.conj().T
    return SiteOperator(a.sites, _hermitian_part(matrix))


def expm_hermitian(a, scale, tol=CAYLEYQMC_HERMITIAN_TOL):
    """Return ``exp(scale * a)`` for Hermitian ``a``.

    :rtype: :class:`SiteOperator`
    """
    return function_hermitian(a, lambda w: np.exp(scale * w), tol)


def sqrtm_positive(a, tol=CAYLEYQMC_HERMITIAN_TOL):
    """Return the positive square root of positive ``a``.

    :rtype: :class:`SiteOperator`
    """
    if not a.is_positive(tol):
        raise HermiticityError(f'{a!r} is not positive')
    return function_hermitian(a, lambda w: np.sqrt(np.clip(w, 0, None)), tol)


def apply_local(states, matrix, legs):
    """Apply a local operator to a batch of state tensors.

    :keyword  states:  Array of shape ``(batch,) + (2,) * n_sites``.
    :type     states:  ``numpy.ndarray``
    :keyword  matrix:  ``2 ** m`` square matrix acting on ``legs``.
    :type     matrix:  ``numpy.ndarray``
    :keyword  legs:  Leg indices (big-endian order of ``matrix``).
    :type     legs:  ``list`` of ``int``

    :rtype: ``numpy.ndarray``
    """
    m = len(legs)
    op = np.asarray(matrix).reshape((SITE_DIM,) * (2 * m))
    out = np.tensordot(
        op, states, axes=(list(range(m, 2 * m)), [1 + leg for leg in legs]))
    return np.moveaxis(out, list(range(m)), [1 + leg for leg in legs])
