"""CayleyQMC transfer engine.

This module evaluates the finite-volume functional by per-vertex message
passing from the boundary level up to the root. A message is a 2 x 2 matrix
kept as ``matrix * exp(log_scale)`` so that depth-12 volumes stay finite.

Only vertices carrying an observable factor (and their ancestors) need their
own message; every other vertex of a level shares the level's identity
message, which makes one evaluation cost O(depth * |support|).

Example:

    from cayleyqmc.src.boundary import solution_family
    from cayleyqmc.src.state import ProductObservable, expectation_transfer

    bc = solution_family(alpha=1.0, beta=1.0, n_max=8)
    sx = ProductObservable.pauli_string({'1': 'x'})
    print(expectation_transfer(sx, 7, 1.0, bc))
"""
import math

from dataclasses import dataclass

import numpy as np

from cayleyqmc.settings import CAYLEYQMC_FUNCTIONAL_TOL
from cayleyqmc.settings import CAYLEYQMC_TRANSFER_MAX_LEVEL

from cayleyqmc.src import utils

from cayleyqmc.src.boundary import solution_family
from cayleyqmc.src.definitions import EvaluationForm
from cayleyqmc.src.errors import FeasibilityError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.state.compatibility import density_level
from cayleyqmc.src.state.compatibility import resolve_form
from cayleyqmc.src.state.vertex import combine
from cayleyqmc.src.tree import ROOT
from cayleyqmc.src.tree import ball
from cayleyqmc.src.tree import successors

logger = utils.create_logger(__name__)


@dataclass(frozen=True, eq=False)
class TransferMessage:
    """Message ``matrix * exp(log_scale)`` sent from ``vertex`` to its parent."""
    vertex: object
    matrix: np.ndarray
    log_scale: float = 0.0

    @property
    def value(self):
        return self.matrix * math.exp(self.log_scale)


def _rescaled(matrix):
    scale = float(np.max(np.abs(matrix)))
    if scale == 0.0:
        return matrix, 0.0
    return matrix / scale, math.log(scale)


def _check_level(n):
    if not isinstance(n, int) or n < 0:
        raise ParameterError(f'Level must be a nonnegative integer, got {n!r}')
    if n > CAYLEYQMC_TRANSFER_MAX_LEVEL:
        raise FeasibilityError(
            f'Level {n} exceeds the transfer engine limit '
            f'{CAYLEYQMC_TRANSFER_MAX_LEVEL}')


def _level_messages(leaf, leaf_level, beta):
    """Return the (matrix, log_scale) identity message of every level."""
    messages = [None] * (leaf_level + 1)
    messages[leaf_level] = _rescaled(np.asarray(leaf, dtype=complex))
    for level in range(leaf_level - 1, -1, -1):
        m, s = messages[level + 1]
        out, out_scale = _rescaled(combine(m, m, beta))
        messages[level] = (out, 2 * s + out_scale)
    return messages


def _marked_messages(factors, level_messages, beta):
    """Return the messages of every vertex on a path from a factor to the root.

    Parents are combined level by level, bottom-up, in forward vertex order.
    """
    leaf_level = len(level_messages) - 1
    marked = {ROOT}
    for vertex in factors:
        while vertex.level > 0:
            marked.add(vertex)
            vertex = vertex.parent
    messages = {}
    for vertex in sorted(marked, key=lambda x: (-x.level, x)):
        if vertex.level == leaf_level:
            messages[vertex] = level_messages[leaf_level]
            continue
        children = successors(vertex, 2)
        (m_y, s_y), (m_z, s_z) = (
            messages.get(child, level_messages[vertex.level + 1])
            for child in children)
        out = combine(m_y, m_z, beta, *(factors.get(c) for c in children))
        out, out_scale = _rescaled(out)
        messages[vertex] = (out, s_y + s_z + out_scale)
    return messages


def _close(w0_sqrt, root_message, a_root=None):
    m, s = root_message
    closing = w0_sqrt @ m @ w0_sqrt
    if a_root is not None:
        closing = closing @ a_root
    return np.trace(closing) / 2, s


def _leaf_level(n, beta, bc, form, tol):
    _check_level(n)
    form = resolve_form(form, bc, n, beta, tol)
    return form, density_level(form, n)


def message_tree(term, n, beta, bc, form=EvaluationForm.AUTO,
                 tol=CAYLEYQMC_FUNCTIONAL_TOL):
    """Return every message of the evaluation of one product term.

    Vertices off the support share their level's identity message.

    :keyword  term:  One product term of an observable.
    :type     term:  :class:`cayleyqmc.src.state.observable.ObservableTerm`

    :rtype: ``dict`` of :class:`TreeCoordinate` to :class:`TransferMessage`
    """
    _, leaf_level = _leaf_level(n, beta, bc, form, tol)
    factors = term.factor_map()
    levels = _level_messages(bc.h(leaf_level), leaf_level, beta)
    marked = _marked_messages(factors, levels, beta)
    tree = {}
    for vertex in ball(leaf_level, 2):
        m, s = marked.get(vertex, levels[vertex.level])
        tree[vertex] = TransferMessage(vertex, m, s)
    return tree


def expectation_transfer(obs, n, beta, bc, form=EvaluationForm.AUTO,
                         tol=CAYLEYQMC_FUNCTIONAL_TOL):
    """Return the expectation of ``obs`` on the volume Lambda_n.

    :keyword  obs:  Observable supported in Lambda_n.
    :type     obs:  :class:`cayleyqmc.src.state.ProductObservable`
    :keyword  form:  AUTO selects the short form when the boundary data passes
        the compatibility residual test.
    :type     form:  :class:`EvaluationForm`

    :rtype: ``complex``
    """
    obs.check_support(n)
    form, leaf_level = _leaf_level(n, beta, bc, form, tol)
    logger.debug(f'Transfer evaluation at n={n} with the {form.value} form '
                 f'(leaf level {leaf_level})')
    levels = _level_messages(bc.h(leaf_level), leaf_level, beta)
    value = 0j
    for term in obs.terms:
        factors = term.factor_map()
        marked = _marked_messages(factors, levels, beta)
        trace, log_scale = _close(bc.w0_sqrt, marked[ROOT], factors.get(ROOT))
        value += term.coeff * trace * math.exp(log_scale)
    return complex(value)


def log_partition(n, beta, alpha):
    """Return log tr(K_n^* K_n) for the alpha-family boundary.

    Here K_n = w0^{1/2} K_[0,1] ... K_[n,n+1] with w0 = I / alpha, i.e. the
    partition object of the volume Lambda_{n+1} with free leaves.

    :rtype: ``float``
    """
    _check_level(n)
    bc = solution_family(alpha, beta, 0)
    levels = _level_messages(np.eye(2), n + 1, beta)
    trace, log_scale = _close(bc.w0_sqrt, levels[0])
    return math.log(trace.real) + log_scale
