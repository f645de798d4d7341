"""Residuals of the normalization and compatibility conditions and the choice
of evaluation form they imply."""
import numpy as np

from cayleyqmc.settings import CAYLEYQMC_FUNCTIONAL_TOL

from cayleyqmc.src import utils

from cayleyqmc.src.definitions import EvaluationForm
from cayleyqmc.src.errors import BoundaryError
from cayleyqmc.src.state.vertex import check_eq2

logger = utils.create_logger(__name__)


def eq1_residual(bc):
    """Return |tr(w0 h^(0)) - 1|."""
    return abs(bc.normalization() - 1)


def eq2_residuals(bc, beta=None, levels=None):
    """Return the operator-norm residual of the compatibility condition for
    each level n < depth (h^(n+1) pair pushed down against h^(n)).

    :rtype: ``list`` of ``float``
    """
    beta = bc.beta if beta is None else beta
    levels = range(bc.depth) if levels is None else levels
    residuals = []
    for n in levels:
        h_next = bc.h(n + 1)
        pushed = check_eq2((h_next, h_next), beta)
        residuals.append(float(np.linalg.norm(pushed - bc.h(n), 2)))
    return residuals


def is_compatible(bc, n, beta=None, tol=CAYLEYQMC_FUNCTIONAL_TOL):
    """Query whether both conditions hold on levels 0..n."""
    if bc.depth < n:
        raise BoundaryError(
            f'Boundary data of depth {bc.depth} cannot serve level {n}')
    if eq1_residual(bc) > tol:
        return False
    return all(r <= tol for r in eq2_residuals(bc, beta, range(n)))


def resolve_form(form, bc, n, beta=None, tol=CAYLEYQMC_FUNCTIONAL_TOL):
    """Resolve ``EvaluationForm.AUTO`` to COROLLARY or PADDED.

    :rtype: :class:`EvaluationForm`
    """
    form = EvaluationForm(form)
    if form is not EvaluationForm.AUTO:
        return form
    if is_compatible(bc, n, beta, tol):
        return EvaluationForm.COROLLARY
    logger.warning(f'Boundary data fails the compatibility conditions up to '
                   f'level {n}; evaluating with the padded form')
    return EvaluationForm.PADDED


def density_level(form, n):
    """Return the level of the density operator used by ``form``."""
    return n if form is EvaluationForm.COROLLARY else n + 1
