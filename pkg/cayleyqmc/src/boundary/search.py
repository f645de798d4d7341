"""Empirical search for periodic points of the pull-up map.

Sampled starts are iterated with ``orbit``; a hit is any return within
``tol`` of an earlier point after 2..k_max steps from a point that is not
already stationary.

Example:

    from cayleyqmc.src.boundary.search import periodic_point_search

    report = periodic_point_search(beta=0.7, k_max=6, samples=1000, seed=0)
    print(report.to_dict()['hits'])   # []
"""
from dataclasses import dataclass
from dataclasses import field

import numpy as np

from cayleyqmc.settings import CAYLEYQMC_ORBIT_MAX_STEPS
from cayleyqmc.settings import CAYLEYQMC_PERIODIC_TOL

from cayleyqmc.src import utils

from cayleyqmc.src.boundary.base import BoundaryPoint
from cayleyqmc.src.boundary.base import fixed_point
from cayleyqmc.src.boundary.base import orbit
from cayleyqmc.src.errors import ParameterError

logger = utils.create_logger(__name__)

# Share of sampled starts placed on the diagonal y = 0
DIAGONAL_SHARE = 0.25


@dataclass
class PeriodicSearchReport:
    beta: float
    samples: int
    k_max: int
    hits: list = field(default_factory=list)

    def to_dict(self):
        return {'beta': self.beta, 'samples': self.samples,
                'hits': list(self.hits)}


def sample_domain(rng, samples, x_max=10.0, diagonal_share=DIAGONAL_SHARE):
    """Draw ``samples`` points of the domain x > y >= 0.

    x is log-uniform on [1e-3, x_max]; y / x is uniform on [1e-3, 0.999] off
    the diagonal.

    :rtype: ``list`` of :class:`BoundaryPoint`
    """
    xs = np.exp(rng.uniform(np.log(1e-3), np.log(x_max), samples))
    ratios = rng.uniform(1e-3, 0.999, samples)
    diagonal = rng.uniform(size=samples) < diagonal_share
    return [BoundaryPoint(x, 0.0 if on_diagonal else r * x)
            for x, r, on_diagonal in zip(xs, ratios, diagonal)]


def _periodic_hits(points, k_max, tol):
    hits = []
    for j in range(len(points) - 2):
        if points[j + 1].distance(points[j]) <= tol:
            break
        for period in range(2, k_max + 1):
            if j + period >= len(points):
                break
            distance = points[j + period].distance(points[j])
            if distance <= tol:
                hits.append({'step': j, 'period': period,
                             'distance': distance})
    return hits


def periodic_point_search(beta, k_max, samples, seed=0,
                          max_steps=CAYLEYQMC_ORBIT_MAX_STEPS,
                          tol=CAYLEYQMC_PERIODIC_TOL):
    """Search sampled pull-up orbits for returns with period 2..k_max.

    The fixed point is always included as the first start.

    :rtype: :class:`PeriodicSearchReport`
    """
    if k_max < 2:
        raise ParameterError(f'k_max must be >= 2, got {k_max}')
    rng = np.random.default_rng(seed)
    starts = [fixed_point(beta)] + sample_domain(rng, samples)
    report = PeriodicSearchReport(float(beta), samples, k_max)
    for start in starts:
        result = orbit(start, beta, max_steps)
        for hit in _periodic_hits(result.points, k_max, tol):
            hit['start'] = [start.x, start.y]
            report.hits.append(hit)
    logger.debug(f'Periodic search at beta={beta}: {len(report.hits)} hits '
                 f'in {len(starts)} orbits')
    return report
