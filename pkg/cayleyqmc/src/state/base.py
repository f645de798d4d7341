"""CayleyQMC state base module.

This module provides FiniteVolumeState, the finite-volume forward chain on
Lambda_n for given boundary data. It resolves the evaluation form and the
engine once, caches the dense density when the dense engine applies, and
evaluates product observables.

Example:

    from cayleyqmc.src.boundary import solution_family
    from cayleyqmc.src.definitions import Engine
    from cayleyqmc.src.state import FiniteVolumeState, ProductObservable

    bc = solution_family(alpha=1.0, beta=1.0, n_max=3)
    state = FiniteVolumeState(2, 1.0, bc, engine=Engine.DENSE)
    zz = ProductObservable.pauli_string({'': 'z', '1': 'z'})
    print(state.expectation(zz))
"""
from dataclasses import dataclass
from functools import cached_property

from cayleyqmc.settings import CAYLEYQMC_DENSE_MAX_SITES
from cayleyqmc.settings import CAYLEYQMC_FUNCTIONAL_TOL
from cayleyqmc.settings import CAYLEYQMC_MATRIX_FREE_MAX_SITES
from cayleyqmc.settings import CAYLEYQMC_TRANSFER_MAX_LEVEL

from cayleyqmc.src import utils

from cayleyqmc.src.definitions import Engine
from cayleyqmc.src.definitions import EvaluationForm
from cayleyqmc.src.errors import FeasibilityError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.state.compatibility import density_level
from cayleyqmc.src.state.compatibility import eq1_residual
from cayleyqmc.src.state.compatibility import eq2_residuals
from cayleyqmc.src.state.compatibility import resolve_form
from cayleyqmc.src.state.dense import ball_size
from cayleyqmc.src.state.dense import build_density
from cayleyqmc.src.state.dense import expectation_dense
from cayleyqmc.src.state.dense import matrix_free_trace
from cayleyqmc.src.state.transfer import expectation_transfer

logger = utils.create_logger(__name__)


@dataclass(eq=False)
class FiniteVolumeState:
    """phi^(n) on Lambda_n for boundary data ``bc``."""
    n: int
    beta: float
    bc: object
    engine: Engine = Engine.AUTO
    form: EvaluationForm = EvaluationForm.AUTO
    allow_matrix_free: bool = False
    tol: float = CAYLEYQMC_FUNCTIONAL_TOL

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 0:
            raise ParameterError(
                f'Level must be a nonnegative integer, got {self.n!r}')
        self.beta = utils.require_positive(self.beta, 'beta', ParameterError)
        if self.bc.beta != self.beta:
            logger.warning(f'Boundary data was built for beta={self.bc.beta}, '
                           f'evaluating at beta={self.beta}')
        self.engine = Engine(self.engine)
        self.form = resolve_form(
            self.form, self.bc, self.n, self.beta, self.tol)
        self.engine = self._resolve_engine()
        logger.debug(f'State on Lambda_{self.n}: {self.engine.value} engine, '
                     f'{self.form.value} form')

    @property
    def density_level(self):
        return density_level(self.form, self.n)

    def _resolve_engine(self):
        n_sites = ball_size(self.density_level)
        if self.engine is Engine.AUTO:
            return Engine.DENSE if n_sites <= CAYLEYQMC_DENSE_MAX_SITES \
                else Engine.TRANSFER
        if self.engine is Engine.DENSE:
            dense_cap = CAYLEYQMC_MATRIX_FREE_MAX_SITES \
                if self.allow_matrix_free else CAYLEYQMC_DENSE_MAX_SITES
            if n_sites > dense_cap:
                raise FeasibilityError(
                    f'W_{self.density_level}] on {n_sites} sites is beyond '
                    'the dense engine; use the transfer engine')
        elif self.n > CAYLEYQMC_TRANSFER_MAX_LEVEL:
            raise FeasibilityError(
                f'Level {self.n} exceeds the transfer engine limit '
                f'{CAYLEYQMC_TRANSFER_MAX_LEVEL}')
        return self.engine

    @property
    def matrix_free(self):
        return self.engine is Engine.DENSE and \
            ball_size(self.density_level) > CAYLEYQMC_DENSE_MAX_SITES

    @cached_property
    def density(self):
        """Dense density operator used by the evaluation form.

        :rtype: :class:`cayleyqmc.src.state.dense.Density`
        """
        if self.engine is not Engine.DENSE or self.matrix_free:
            raise FeasibilityError('No dense density for this state')
        return build_density(self.density_level, self.beta, self.bc)

    def expectation(self, obs):
        """Return phi^(n)(obs).

        :rtype: ``complex``
        """
        obs.check_support(self.n)
        if self.engine is Engine.TRANSFER:
            return expectation_transfer(
                obs, self.n, self.beta, self.bc, self.form, self.tol)
        if self.matrix_free:
            return matrix_free_trace(
                obs, self.density_level, self.beta, self.bc)
        return self.density.expectation(obs)

    def residuals(self):
        """Return the normalization and per-level compatibility residuals."""
        return {
            'eq1': eq1_residual(self.bc),
            'eq2': eq2_residuals(self.bc, self.beta,
                                 range(min(self.bc.depth, self.n + 1))),
        }

    def form_gap(self, obs):
        """Return |phi_COROLLARY(obs) - phi_PADDED(obs)| on the state's engine.

        Both forms agree for compatible boundary data.

        :rtype: ``float``
        """
        forms = (EvaluationForm.COROLLARY, EvaluationForm.PADDED)
        if self.engine is Engine.TRANSFER:
            values = [expectation_transfer(obs, self.n, self.beta, self.bc, f)
                      for f in forms]
        else:
            values = [
                expectation_dense(obs, self.n, self.beta, self.bc, form=f,
                                  allow_matrix_free=self.allow_matrix_free)
                for f in forms]
        return abs(values[0] - values[1])
