"""Auxiliary inequalities behind the boundary dynamics.

``lemma_inequality`` compares sinh(beta) cosh(beta) (1 + cosh beta) with
cosh^4 beta; ``appendix_polynomial`` is the sextic whose positivity on t > 1
proves the upper comparison after substituting t = e^beta.
"""
import math

from typing import NamedTuple

import numpy as np

from cayleyqmc.src import utils

from cayleyqmc.src.errors import ParameterError

# t^6 - 2t^5 - t^4 + 0t^3 + 7t^2 + 2t + 1
APPENDIX_COEFFICIENTS = (1, -2, -1, 0, 7, 2, 1)


class LemmaInequality(NamedTuple):
    lhs: float
    rhs: float
    holds: bool


def lemma_inequality(beta):
    """Return (sinh cosh (1 + cosh), cosh^4, 0 < lhs < rhs) at ``beta``.

    :rtype: :class:`LemmaInequality`
    """
    beta = utils.require_positive(beta, 'beta', ParameterError)
    s, c = math.sinh(beta), math.cosh(beta)
    lhs = s * c * (1.0 + c)
    rhs = c ** 4
    return LemmaInequality(lhs, rhs, 0 < lhs < rhs)


def appendix_polynomial(t):
    """Evaluate p(t) = t^6 - 2t^5 - t^4 + 7t^2 + 2t + 1.

    Accepts scalars or arrays; integer input gives exact integer output.
    """
    if isinstance(t, (int, float)):
        result = 0
        for coefficient in APPENDIX_COEFFICIENTS:
            result = result * t + coefficient
        return result
    return np.polyval(APPENDIX_COEFFICIENTS, t)


def appendix_identity(beta):
    """Return both sides of cosh^3 - sinh (1 + cosh) = p(e^beta) / (8 e^{3 beta}).

    :rtype: ``tuple`` of ``float``
    """
    beta = utils.require_positive(beta, 'beta', ParameterError)
    s, c = math.sinh(beta), math.cosh(beta)
    t = math.exp(beta)
    return c ** 3 - s * (1.0 + c), appendix_polynomial(t) / (8.0 * t ** 3)
