"""Per-vertex transfer map of the XY-model chain.

For a parent u with children y = (u,1), z = (u,2) the combine step is

    m_u = tr_u[K_<u,y> K_<u,z> (I_u x m_y x m_z) K*_<u,z> K*_<u,y> (I_u x a_y x a_z)]

with the normalized partial trace keeping u. With identity observables it is
the left-hand side of the compatibility condition on h, and therefore the
brute-force oracle for ``pushdown``.
"""
from functools import lru_cache

import numpy as np

from cayleyqmc.src.linalg import from_factors
from cayleyqmc.src.linalg import embed
from cayleyqmc.src.linalg import normalized_partial_trace
from cayleyqmc.src.model import k_edge
from cayleyqmc.src.tree import ROOT
from cayleyqmc.src.tree import successors

PARENT = ROOT
CHILDREN = successors(ROOT, 2)
BLOCK_SITES = (PARENT,) + CHILDREN


@lru_cache(maxsize=64)
def block_coupler(beta):
    """Return K_<u,y> K_<u,z> on the sites (u, y, z).

    :rtype: :class:`cayleyqmc.src.linalg.SiteOperator`
    """
    first, second = (
        embed(k_edge(PARENT, child, beta).matrix, BLOCK_SITES)
        for child in CHILDREN)
    return first @ second


def combine(m_y, m_z, beta, a_y=None, a_z=None):
    """Return the parent message from the child messages m_y, m_z.

    :rtype: ``numpy.ndarray``
    """
    coupler = block_coupler(float(beta))
    inner = from_factors(dict(zip(CHILDREN, (m_y, m_z))), BLOCK_SITES)
    product = coupler @ inner @ coupler.adjoint()
    observable = {child: a for child, a in zip(CHILDREN, (a_y, a_z))
                  if a is not None}
    if observable:
        product = product @ from_factors(observable, BLOCK_SITES)
    return normalized_partial_trace(product, [PARENT]).matrix


def check_eq2(h_child, beta):
    """Return tr_x[K_<x,y> K_<x,z> h_y h_z K_<x,z> K_<x,y>] for the pair
    ``h_child = (h_y, h_z)``.

    :rtype: ``numpy.ndarray``
    """
    h_y, h_z = (np.asarray(h, dtype=complex) for h in h_child)
    return combine(h_y, h_z, beta)
