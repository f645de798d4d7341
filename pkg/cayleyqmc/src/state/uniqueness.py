"""alpha-invariance of the chain and its free-energy-like function."""
import itertools
import math

import numpy as np

from cayleyqmc.src import utils

from cayleyqmc.src.boundary import solution_family
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.state.transfer import expectation_transfer
from cayleyqmc.src.state.transfer import log_partition

logger = utils.create_logger(__name__)


def volume_size(n):
    """Return |V_n| = |Lambda_n| = 2^(n+1) - 1."""
    return 2 ** (n + 1) - 1


def log_cosh(beta):
    return float(np.logaddexp(beta, -beta) - math.log(2.0))


def uniqueness_values(alphas, obs_list, n, beta):
    """Return the expectation of every observable (rows) under every member of
    the alpha-family (columns).

    :rtype: ``numpy.ndarray``
    """
    values = np.empty((len(obs_list), len(alphas)), dtype=complex)
    for j, alpha in enumerate(alphas):
        bc = solution_family(alpha, beta, n + 1)
        for i, obs in enumerate(obs_list):
            values[i, j] = expectation_transfer(obs, n, beta, bc)
    return values


def uniqueness_check(alphas, obs_list, n, beta):
    """Return the largest pairwise deviation of the expectations across
    ``alphas``.

    :rtype: ``float``
    """
    for alpha in alphas:
        utils.require_positive(alpha, 'alpha', ParameterError)
    values = uniqueness_values(alphas, obs_list, n, beta)
    deviation = 0.0
    for row in values:
        for u, v in itertools.combinations(row, 2):
            deviation = max(deviation, abs(u - v))
    logger.debug(f'alpha-deviation {deviation:.3e} over {len(alphas)} alphas '
                 f'and {len(obs_list)} observables')
    return deviation


def free_energy(n, beta, alpha):
    """Return F_n = [-log(alpha cosh^4) + 2^(n+1) log cosh^4] / (beta |V_n|).

    :rtype: ``float``
    """
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f'Free energy needs n >= 1, got {n!r}')
    beta = utils.require_positive(beta, 'beta', ParameterError)
    alpha = utils.require_positive(alpha, 'alpha', ParameterError)
    log_c4 = 4.0 * log_cosh(beta)
    leaves = 2 ** (n + 1)
    return (-(math.log(alpha) + log_c4) + leaves * log_c4) / \
        (beta * volume_size(n))


def free_energy_limit(beta):
    """Return F(beta) = (4 / beta) log cosh beta."""
    beta = utils.require_positive(beta, 'beta', ParameterError)
    return 4.0 * log_cosh(beta) / beta


def free_energy_numeric(n, beta, alpha):
    """Return log tr(K_n^* K_n) / (beta |V_n|) from the transfer engine."""
    if not isinstance(n, int) or n < 1:
        raise ParameterError(f'Free energy needs n >= 1, got {n!r}')
    return log_partition(n, beta, alpha) / (beta * volume_size(n))
