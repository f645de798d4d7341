"""CayleyQMC base module.

This module provides an interface (ForwardChain) to the forward quantum Markov
chain of the XY-model on the Cayley tree of order two, for one inverse
temperature and one member alpha of the boundary solution family.

Example:

    from cayleyqmc.src import ForwardChain
    from cayleyqmc.src.state import ProductObservable

    chain = ForwardChain(beta=1.0)
    zz = ProductObservable.pauli_string({'': 'z', '1': 'z'})
    print(chain.expectation(zz, n=4))
    print(chain.free_energy(n=20))
"""
from cayleyqmc.settings import CAYLEYQMC_ORBIT_MAX_STEPS

from cayleyqmc.src import utils

from cayleyqmc.src.boundary import BoundaryPoint
from cayleyqmc.src.boundary import alpha_fixed
from cayleyqmc.src.boundary import orbit
from cayleyqmc.src.boundary import solution_family
from cayleyqmc.src.definitions import Engine
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.state import FiniteVolumeState
from cayleyqmc.src.state import free_energy
from cayleyqmc.src.state import free_energy_limit

logger = utils.create_logger(__name__)


class ForwardChain:
    """Forward QMC interface for fixed (beta, alpha)."""

    def __init__(self, beta, alpha=None):
        """
        :keyword  beta:  Inverse temperature, strictly positive.
        :type     beta:  ``float``
        :keyword  alpha (optional):  Family member; defaults to the
            fixed-point member 1 / cosh^4 beta.
        :type     alpha (optional):  ``float``
        """
        self._beta = utils.require_positive(beta, 'beta', ParameterError)
        self._alpha = alpha_fixed(self._beta) if alpha is None else \
            utils.require_positive(alpha, 'alpha', ParameterError)
        self._boundary = None
        logger.debug(f'Forward chain at beta={self._beta}, '
                     f'alpha={self._alpha}')

    @property
    def beta(self):
        return self._beta

    @property
    def alpha(self):
        return self._alpha

    def boundary(self, levels):
        """Return the boundary condition of the alpha-family up to ``levels``.

        :rtype: :class:`cayleyqmc.src.boundary.BoundaryCondition`
        """
        if self._boundary is None or self._boundary.depth < levels:
            self._boundary = solution_family(self._alpha, self._beta, levels)
        return self._boundary

    def state(self, n, engine=Engine.AUTO, **kwargs):
        """Return the finite-volume state on Lambda_n.

        :rtype: :class:`cayleyqmc.src.state.FiniteVolumeState`
        """
        return FiniteVolumeState(
            n, self._beta, self.boundary(n + 1), engine=engine, **kwargs)

    def expectation(self, obs, n, engine=Engine.AUTO):
        """Return the expectation of ``obs`` on Lambda_n.

        :rtype: ``complex``
        """
        return self.state(n, engine).expectation(obs)

    def orbit(self, p0, max_steps=CAYLEYQMC_ORBIT_MAX_STEPS):
        """Iterate the pull-up map from ``p0`` (a BoundaryPoint or (x, y)).

        :rtype: :class:`cayleyqmc.src.boundary.OrbitResult`
        """
        if not isinstance(p0, BoundaryPoint):
            p0 = BoundaryPoint(*p0)
        return orbit(p0, self._beta, max_steps)

    def free_energy(self, n=None):
        """Return F_n, or the limit F when ``n`` is omitted.

        :rtype: ``float``
        """
        if n is None:
            return free_energy_limit(self._beta)
        return free_energy(n, self._beta, self._alpha)
