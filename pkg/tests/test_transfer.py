"""Message-passing evaluation of the finite-volume functional."""
import math

import numpy as np
import pytest

from numpy.testing import assert_allclose

from cayleyqmc.src.boundary import alpha_fixed
from cayleyqmc.src.boundary import solution_family
from cayleyqmc.src.definitions import EvaluationForm
from cayleyqmc.src.errors import FeasibilityError
from cayleyqmc.src.errors import ParameterError
from cayleyqmc.src.errors import SupportError
from cayleyqmc.src.state import ProductObservable
from cayleyqmc.src.state import TransferMessage
from cayleyqmc.src.state import expectation_dense
from cayleyqmc.src.state import expectation_transfer
from cayleyqmc.src.state import log_partition
from cayleyqmc.src.state import message_tree
from cayleyqmc.src.state import random_product_observable
from cayleyqmc.src.state.uniqueness import log_cosh
from cayleyqmc.src.tree import ROOT
from cayleyqmc.src.tree import TreeCoordinate
from cayleyqmc.src.tree import ball

COMPATIBILITY_LEVELS = (1, 2, 3, 6)


class TestMessages:
    def test_fixed_point_messages(self, fixed_family):
        term = ProductObservable.identity().terms[0]
        tree = message_tree(term, 12, 1.0, fixed_family)
        assert len(tree) == 2 ** 13 - 1
        expected = alpha_fixed(1.0) * np.eye(2)
        for message in tree.values():
            assert_allclose(message.value, expected, atol=1e-12)

    def test_orbit_messages_follow_boundary_levels(self, orbit_bc):
        term = ProductObservable.identity().terms[0]
        n = orbit_bc.depth
        tree = message_tree(term, n, 1.0, orbit_bc)
        for vertex, message in tree.items():
            assert_allclose(message.value, orbit_bc.h(vertex.level),
                            atol=1e-10)

    def test_marked_path(self):
        bc = solution_family(1.0, 1.0, 4)
        obs = ProductObservable.pauli_string({'2.1.2': 'z'})
        tree = message_tree(obs.terms[0], 3, 1.0, bc)
        marked = tree[TreeCoordinate((2, 1))]
        unmarked = tree[TreeCoordinate((1, 1))]
        assert_allclose(unmarked.value, bc.h(2), atol=1e-12)
        assert not np.allclose(marked.value, unmarked.value)
        # the factor enters at the parent, the leaf keeps its level message
        assert_allclose(tree[TreeCoordinate((2, 1, 2))].value, bc.h(3))

    def test_message_value(self):
        message = TransferMessage(ROOT, np.eye(2), math.log(3.0))
        assert_allclose(message.value, 3 * np.eye(2))


class TestExpectation:
    @pytest.mark.parametrize('n', [0, 1, 5, 8])
    def test_identity_is_normalized(self, fixed_family, n):
        value = expectation_transfer(ProductObservable.identity(), n, 1.0,
                                     fixed_family)
        assert value == pytest.approx(1.0, abs=1e-12)

    def test_identity_at_deepest_level(self, fixed_family):
        value = expectation_transfer(ProductObservable.identity(), 12, 1.0,
                                     fixed_family)
        assert value == pytest.approx(1.0, abs=1e-10)

    def test_identity_is_normalized_for_any_alpha(self):
        bc = solution_family(7.0, 2.0, 9)
        value = expectation_transfer(ProductObservable.identity(), 8, 2.0, bc)
        assert value == pytest.approx(1.0, abs=1e-12)

    def test_engines_agree(self, rng, beta):
        bc = solution_family(1.0, beta, 3)
        for _ in range(100):
            obs = random_product_observable(rng, ball(1))
            dense = expectation_dense(obs, 1, beta, bc)
            assert expectation_transfer(obs, 1, beta, bc) == pytest.approx(
                dense, abs=1e-10)

    @pytest.mark.parametrize('n', [1, 2])
    def test_engines_agree_on_orbit_boundary(self, rng, orbit_bc, n):
        for _ in range(20):
            obs = random_product_observable(rng, ball(n), hermitian=False)
            dense = expectation_dense(obs, n, 1.0, orbit_bc)
            assert expectation_transfer(obs, n, 1.0, orbit_bc) == \
                pytest.approx(dense, abs=1e-10)

    def test_engines_agree_on_sums(self, rng):
        bc = solution_family(0.5, 1.0, 3)
        obs = ProductObservable()
        for _ in range(4):
            obs = obs + 0.3j * random_product_observable(rng, ball(2))
        assert expectation_transfer(obs, 2, 1.0, bc) == pytest.approx(
            expectation_dense(obs, 2, 1.0, bc), abs=1e-10)

    def test_functional_compatibility(self, rng, beta):
        bc = solution_family(1.0, beta, max(COMPATIBILITY_LEVELS) + 1)
        for _ in range(20):
            obs = random_product_observable(rng, ball(1))
            values = [expectation_transfer(obs, n, beta, bc)
                      for n in COMPATIBILITY_LEVELS]
            assert max(abs(v - values[0]) for v in values) <= 1e-10

    def test_padded_form_agrees_for_compatible_data(self, rng, orbit_bc):
        obs = random_product_observable(rng, ball(2))
        corollary = expectation_transfer(
            obs, 2, 1.0, orbit_bc, form=EvaluationForm.COROLLARY)
        padded = expectation_transfer(
            obs, 2, 1.0, orbit_bc, form=EvaluationForm.PADDED)
        assert corollary == pytest.approx(padded, abs=1e-10)

    @pytest.mark.parametrize('alpha', [0.3, 1.0, None, 5.0])
    def test_alpha_invariance(self, rng, beta, alpha):
        alpha = alpha_fixed(beta) if alpha is None else alpha
        reference = solution_family(1.0, beta, 3)
        bc = solution_family(alpha, beta, 3)
        for _ in range(20):
            obs = random_product_observable(rng, ball(2))
            assert expectation_transfer(obs, 2, beta, bc) == pytest.approx(
                expectation_transfer(obs, 2, beta, reference), abs=1e-10)

    @pytest.mark.parametrize('vertices', [('',), ('1.2',), ('', '1', '2.2.1')])
    def test_odd_z_monomials_vanish(self, fixed_family, vertices):
        obs = ProductObservable.pauli_string({v: 'z' for v in vertices})
        assert abs(expectation_transfer(obs, 3, 1.0, fixed_family)) <= 1e-10

    def test_zero_factor(self, fixed_family):
        obs = ProductObservable.product({'1.1': np.zeros((2, 2))})
        value = expectation_transfer(obs, 4, 1.0, fixed_family)
        assert value == 0

    def test_limits(self, fixed_family):
        identity = ProductObservable.identity()
        with pytest.raises(FeasibilityError):
            expectation_transfer(identity, 13, 1.0, fixed_family)
        with pytest.raises(ParameterError):
            expectation_transfer(identity, 1.5, 1.0, fixed_family)
        with pytest.raises(SupportError):
            expectation_transfer(
                ProductObservable.pauli_string({'1.1.1': 'x'}), 2, 1.0,
                fixed_family)


class TestLogPartition:
    @pytest.mark.parametrize('n', [1, 4, 12])
    @pytest.mark.parametrize('alpha', [0.5, 3.0])
    def test_closed_form(self, n, alpha):
        beta = 1.3
        expected = (2 ** (n + 1) - 1) * 4 * log_cosh(beta) - math.log(alpha)
        assert log_partition(n, beta, alpha) == pytest.approx(expected,
                                                              rel=1e-12)

    def test_finite_at_large_beta(self):
        assert math.isfinite(log_partition(12, 20.0, 1.0))
