"""Push-down / pull-up dynamics of level-homogeneous boundary data, the
boundary solution family and the auxiliary inequalities."""
import math

import numpy as np
import pytest

from numpy.testing import assert_allclose

from conftest import BETA_GRID
from cayleyqmc.src.boundary import BoundaryCondition
from cayleyqmc.src.boundary import BoundaryPoint
from cayleyqmc.src.boundary import alpha_fixed
from cayleyqmc.src.boundary import appendix_identity
from cayleyqmc.src.boundary import appendix_polynomial
from cayleyqmc.src.boundary import boundary_from_orbit
from cayleyqmc.src.boundary import boundary_point_matrix
from cayleyqmc.src.boundary import condition_number
from cayleyqmc.src.boundary import contraction_factor
from cayleyqmc.src.boundary import family_scale
from cayleyqmc.src.boundary import fixed_point
from cayleyqmc.src.boundary import is_admissible
from cayleyqmc.src.boundary import lemma_inequality
from cayleyqmc.src.boundary import off_diagonal_fixed_point_square
from cayleyqmc.src.boundary import orbit
from cayleyqmc.src.boundary import orbit_closed_form
from cayleyqmc.src.boundary import orbit_length_bound
from cayleyqmc.src.boundary import periodic_point_search
from cayleyqmc.src.boundary import pullup
from cayleyqmc.src.boundary import pushdown
from cayleyqmc.src.boundary import ratio_contraction_check
from cayleyqmc.src.boundary import solution_family
from cayleyqmc.src.boundary import trajectory_bound
from cayleyqmc.src.boundary.search import sample_domain
from cayleyqmc.src.definitions import Termination
from cayleyqmc.src.errors import BoundaryError
from cayleyqmc.src.errors import DomainError
from cayleyqmc.src.errors import DomainViolation
from cayleyqmc.src.errors import NotApplicableError
from cayleyqmc.src.errors import ParameterError

COSH4_1 = 5.669627
ORBIT_BETAS = (0.3, 0.7, 1.0, 2.0)


class TestMaps:
    def test_pushdown_diagonal(self):
        p = pushdown(BoundaryPoint(1.0, 0.0), 1.0)
        assert p.x == pytest.approx(COSH4_1, abs=1e-6)
        assert p.y == 0.0

    def test_pushdown_origin(self):
        assert pushdown(BoundaryPoint(0.0, 0.0), 1.0) == BoundaryPoint(0, 0)

    def test_pullup_diagonal(self):
        p = pullup(BoundaryPoint(math.cosh(1.0) ** 4, 0.0), 1.0)
        assert p.x == pytest.approx(1.0, abs=1e-12)
        assert p.y == 0.0

    def test_condition_number(self):
        c = math.cosh(1.0)
        expected = 2 * math.sqrt(c ** 3) / (1 + c)
        assert condition_number(1.0) == pytest.approx(expected, rel=1e-12)
        assert condition_number(1.0) == pytest.approx(1.5074843, abs=1e-7)

    @pytest.mark.parametrize('beta', BETA_GRID)
    def test_contraction_factor_below_one(self, beta):
        assert 0 < contraction_factor(beta) < 1

    def test_domain_violation_payload(self):
        with pytest.raises(DomainViolation) as info:
            pullup(BoundaryPoint(1.0, 0.9), 1.0)
        violation = info.value
        assert violation.threshold == pytest.approx(0.9 * condition_number(1.0),
                                                   rel=1e-12)
        assert violation.deficit == pytest.approx(violation.threshold - 1.0)
        assert violation.deficit > 0

    @pytest.mark.parametrize('beta', [0.5, 1.0, 2.0])
    def test_inverse_pair(self, beta):
        p = BoundaryPoint(1.0, 0.5)
        if not is_admissible(p, beta):
            pytest.skip(f'(1, 0.5) is not admissible at beta={beta}')
        q = pushdown(pullup(p, beta), beta)
        assert q.distance(p) <= 1e-12

    @pytest.mark.parametrize('beta', [0.5, 1.0, 2.0])
    def test_pullup_inverts_pushdown(self, rng, beta):
        for p in sample_domain(rng, 50, x_max=2.0):
            q = pullup(pushdown(p, beta), beta)
            assert q.x == pytest.approx(p.x, rel=1e-10)
            assert q.y == pytest.approx(p.y, rel=1e-10, abs=1e-14)

    def test_rejects_negative_coordinates(self):
        with pytest.raises(DomainError):
            BoundaryPoint(-1.0, 0.0)
        with pytest.raises(DomainError):
            BoundaryPoint(1.0, float('nan'))


class TestFixedPoint:
    @pytest.mark.parametrize('beta', BETA_GRID)
    def test_is_fixed(self, beta):
        fp = fixed_point(beta)
        assert fp.x == pytest.approx(1 / math.cosh(beta) ** 4, rel=1e-15)
        assert pullup(fp, beta).distance(fp) <= 1e-14
        assert pushdown(fp, beta).distance(fp) <= 1e-14

    @pytest.mark.parametrize('beta', BETA_GRID)
    def test_no_off_diagonal_fixed_point(self, beta):
        assert off_diagonal_fixed_point_square(beta) < 0


class TestOrbit:
    def test_diagonal_orbit_converges(self):
        result = orbit(BoundaryPoint(1.0, 0.0), 1.0)
        assert result.termination is Termination.CONVERGED
        assert result.converged
        assert result.label == 'Converged'
        assert result.points[1].x == pytest.approx(0.419974, abs=1e-6)
        xs = [p.x for p in result.points]
        assert all(a >= b for a, b in zip(xs, xs[1:]))
        assert result.points[-1].distance(fixed_point(1.0)) <= 1e-12

    def test_off_diagonal_orbit_leaves_domain(self):
        result = orbit(BoundaryPoint(1.0, 0.5), 1.0)
        assert result.termination is Termination.DOMAIN_VIOLATION
        assert result.step == 2
        assert result.label == 'DomainViolation@2'
        assert len(result.points) == 2
        assert result.violation.deficit > 0

    def test_fixed_point_orbit(self):
        result = orbit(fixed_point(1.0), 1.0)
        assert result.converged
        assert result.step == 1

    def test_max_steps(self):
        result = orbit(BoundaryPoint(1.0, 0.0), 1.0, max_steps=2)
        assert result.termination is Termination.MAX_STEPS
        assert result.label == 'MaxSteps'

    def test_rejects_start_outside_domain(self):
        with pytest.raises(DomainError):
            orbit(BoundaryPoint(0.5, 1.0), 1.0)
        with pytest.raises(ParameterError):
            orbit(BoundaryPoint(1.0, 0.0), 1.0, max_steps=0)

    @pytest.mark.parametrize('beta', ORBIT_BETAS)
    def test_every_orbit_terminates(self, beta):
        rng = np.random.default_rng(7)
        for p in sample_domain(rng, 1000, diagonal_share=0.0):
            result = orbit(p, beta)
            assert result.termination is not Termination.MAX_STEPS
            assert p.y > 0
            assert result.termination is Termination.DOMAIN_VIOLATION
            assert result.step <= orbit_length_bound(p, beta) + 1

    @pytest.mark.parametrize('beta', ORBIT_BETAS)
    def test_ratio_contraction(self, beta):
        rng = np.random.default_rng(11)
        points = [p for p in sample_domain(rng, 10000, diagonal_share=0.0)
                  if is_admissible(p, beta)]
        assert points
        assert all(ratio_contraction_check(p, beta) for p in points)

    def test_ratio_contraction_needs_off_diagonal(self):
        with pytest.raises(NotApplicableError):
            ratio_contraction_check(BoundaryPoint(1.0, 0.0), 1.0)
        with pytest.raises(NotApplicableError):
            orbit_length_bound(BoundaryPoint(1.0, 0.0), 1.0)

    def test_trajectory_bound(self):
        p0 = BoundaryPoint(1.0, 0.05)
        result = orbit(p0, 1.0)
        for n, p in enumerate(result.points[1:], start=1):
            assert p.x / p.y < trajectory_bound(p0, 1.0, n)

    @pytest.mark.parametrize('beta', [0.5, 1.0, 2.0])
    @pytest.mark.parametrize('x0', [1e-3, 1.0, 50.0])
    def test_diagonal_closed_form(self, beta, x0):
        result = orbit(BoundaryPoint(x0, 0.0), beta)
        for n, p in enumerate(result.points[:21]):
            assert p.x == pytest.approx(orbit_closed_form(x0, beta, n),
                                        rel=1e-10)


class TestPeriodicSearch:
    @pytest.mark.parametrize('beta', [0.7, 1.5])
    def test_no_periodic_points(self, beta):
        report = periodic_point_search(beta, 4, 1000, seed=3)
        assert report.hits == []
        assert report.to_dict() == {'beta': beta, 'samples': 1000,
                                    'hits': []}

    def test_k_max(self):
        with pytest.raises(ParameterError):
            periodic_point_search(1.0, 1, 10)


class TestBoundaryCondition:
    @pytest.mark.parametrize('alpha', [0.3, 1.0, 5.0])
    def test_solution_family(self, alpha):
        bc = solution_family(alpha, 1.0, 4)
        assert bc.depth == 4
        assert bc.is_normalized()
        assert_allclose(bc.w0, np.eye(2) / alpha)
        for n in range(5):
            assert_allclose(bc.h(n), family_scale(alpha, 1.0, n) * np.eye(2))
        with pytest.raises(BoundaryError):
            bc.h(5)

    def test_fixed_family_is_constant(self):
        bc = solution_family(alpha_fixed(1.0), 1.0, 6)
        for h in bc.h_levels:
            assert_allclose(h, np.eye(2) / COSH4_1, rtol=1e-6)

    def test_family_levels_tend_to_fixed_point(self):
        assert family_scale(5.0, 1.0, 40) == pytest.approx(
            fixed_point(1.0).x, rel=1e-10)

    def test_rejects_bad_alpha(self):
        with pytest.raises(ParameterError):
            solution_family(0.0, 1.0, 2)

    def test_rejects_indefinite_data(self):
        with pytest.raises(BoundaryError):
            BoundaryCondition(1.0, np.eye(2), (np.diag([1.0, -1.0]),))
        with pytest.raises(BoundaryError):
            BoundaryCondition(1.0, np.eye(2), ())

    def test_from_orbit(self, orbit_bc):
        assert orbit_bc.depth >= 8
        assert orbit_bc.is_normalized()
        assert orbit_bc.phase == 0.3
        h1 = orbit_bc.h(1)
        assert np.angle(h1[0, 1]) == pytest.approx(0.3)

    def test_point_matrix(self):
        m = boundary_point_matrix(BoundaryPoint(2.0, 1.0), phase=math.pi / 2)
        assert_allclose(m, [[2, 1j], [-1j, 2]], atol=1e-15)

    def test_empty_orbit(self):
        result = orbit(BoundaryPoint(1.0, 0.0), 1.0)
        result.points = []
        with pytest.raises(BoundaryError):
            boundary_from_orbit(result)


class TestInequalities:
    def test_lemma_at_one(self):
        r = lemma_inequality(1.0)
        assert r.lhs == pytest.approx(4.611699, abs=1e-5)
        assert r.rhs == pytest.approx(COSH4_1, abs=1e-6)
        assert r.holds

    @pytest.mark.parametrize('beta', np.linspace(0.01, 10.0, 200))
    def test_lemma_on_grid(self, beta):
        assert lemma_inequality(beta).holds

    def test_polynomial_values(self):
        assert appendix_polynomial(1) == 8
        assert appendix_polynomial(2) == 17
        t = np.linspace(1.0, 100.0, 10001)[1:]
        assert np.min(appendix_polynomial(t)) > 0

    @pytest.mark.parametrize('beta', [0.01, 0.5, 1.0, 3.0, 10.0])
    def test_identity(self, beta):
        lhs, rhs = appendix_identity(beta)
        assert lhs == pytest.approx(rhs, rel=1e-10)
