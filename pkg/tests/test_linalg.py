"""Tensor embedding, partial traces and Hermitian functional calculus."""
import numpy as np
import pytest
import scipy.linalg

from numpy.testing import assert_allclose

from cayleyqmc.src.errors import DisjointnessError
from cayleyqmc.src.errors import EmbeddingError
from cayleyqmc.src.errors import HermiticityError
from cayleyqmc.src.errors import SiteError
from cayleyqmc.src.linalg import SiteOperator
from cayleyqmc.src.linalg import apply_local
from cayleyqmc.src.linalg import embed
from cayleyqmc.src.linalg import expm_hermitian
from cayleyqmc.src.linalg import from_factors
from cayleyqmc.src.linalg import identity
from cayleyqmc.src.linalg import normalized_partial_trace
from cayleyqmc.src.linalg import normalized_trace
from cayleyqmc.src.linalg import sqrtm_positive
from cayleyqmc.src.linalg import tensor

SX = np.array([[0, 1], [1, 0]], dtype=complex)
SZ = np.diag([1, -1]).astype(complex)


def random_matrix(rng, dim):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def random_hermitian(rng, dim):
    g = random_matrix(rng, dim)
    return 0.5 * (g + g.conj().T)


class TestSiteOperator:
    def test_shape_must_match_sites(self):
        with pytest.raises(SiteError):
            SiteOperator(['a', 'b'], np.eye(2))

    def test_duplicate_sites(self):
        with pytest.raises(SiteError):
            SiteOperator(['a', 'a'], np.eye(4))

    def test_product_aligns_sites(self):
        a = SiteOperator(['a'], SX)
        b = SiteOperator(['b'], SZ)
        product = a @ b
        assert product.sites == ('a', 'b')
        assert_allclose(product.matrix, np.kron(SX, SZ))

    def test_is_positive(self, rng):
        g = random_matrix(rng, 4)
        assert SiteOperator(['a', 'b'], g @ g.conj().T).is_positive()
        assert not SiteOperator(['a'], SZ).is_positive()
        assert not SiteOperator(['a'], [[0, 1], [0, 0]]).is_hermitian()


class TestTensorAndEmbed:
    def test_tensor_is_big_endian_kron(self, rng):
        a = SiteOperator(['a'], random_matrix(rng, 2))
        b = SiteOperator(['b', 'c'], random_matrix(rng, 4))
        out = tensor(a, b)
        assert out.sites == ('a', 'b', 'c')
        assert_allclose(out.matrix, np.kron(a.matrix, b.matrix))

    def test_tensor_rejects_overlap(self):
        with pytest.raises(DisjointnessError):
            tensor(identity(['a']), identity(['a', 'b']))

    def test_embed_pads_with_identity(self, rng):
        m = random_matrix(rng, 2)
        out = embed(SiteOperator(['b'], m), ['a', 'b'])
        assert_allclose(out.matrix, np.kron(np.eye(2), m))

    def test_embed_reorders_legs(self, rng):
        a, b = random_matrix(rng, 2), random_matrix(rng, 2)
        op = tensor(SiteOperator(['a'], a), SiteOperator(['b'], b))
        assert_allclose(embed(op, ['b', 'a']).matrix, np.kron(b, a))

    def test_embed_missing_site(self):
        with pytest.raises(EmbeddingError):
            embed(identity(['a', 'z']), ['a', 'b'])

    def test_from_factors(self, rng):
        m = random_matrix(rng, 2)
        out = from_factors({'c': m}, ['a', 'b', 'c'])
        assert_allclose(out.matrix, np.kron(np.eye(4), m))
        with pytest.raises(EmbeddingError):
            from_factors({'d': m}, ['a'])


class TestTraces:
    def test_identity_has_unit_normalized_trace(self):
        assert normalized_trace(identity(['a', 'b', 'c'])) == \
            pytest.approx(1.0)

    def test_partial_trace_of_product(self, rng):
        a, b = random_matrix(rng, 2), random_matrix(rng, 4)
        op = tensor(SiteOperator(['a'], a), SiteOperator(['b', 'c'], b))
        out = normalized_partial_trace(op, ['a'])
        assert_allclose(out.matrix, a * np.trace(b) / 4, atol=1e-12)

    def test_partial_trace_keep_order(self, rng):
        a, b = random_matrix(rng, 2), random_matrix(rng, 2)
        op = from_factors({'a': a, 'c': b}, ['a', 'b', 'c'])
        out = normalized_partial_trace(op, ['c', 'a'])
        assert out.sites == ('c', 'a')
        assert_allclose(out.matrix, np.kron(b, a), atol=1e-12)

    def test_partial_trace_is_consistent_with_full_trace(self, rng):
        op = SiteOperator(['a', 'b', 'c'], random_matrix(rng, 8))
        reduced = normalized_partial_trace(op, ['b'])
        assert normalized_trace(reduced) == pytest.approx(
            normalized_trace(op), abs=1e-12)

    def test_unknown_kept_site(self):
        with pytest.raises(SiteError):
            normalized_partial_trace(identity(['a']), ['b'])


class TestFunctionalCalculus:
    def test_expm_matches_scipy(self, rng):
        h = random_hermitian(rng, 4)
        out = expm_hermitian(SiteOperator(['a', 'b'], h), 0.7)
        assert_allclose(out.matrix, scipy.linalg.expm(0.7 * h), atol=1e-12)

    def test_sqrtm_squares_back(self, rng):
        g = random_matrix(rng, 4)
        p = SiteOperator(['a', 'b'], g @ g.conj().T + np.eye(4))
        root = sqrtm_positive(p)
        assert_allclose((root @ root).matrix, p.matrix, atol=1e-10)
        assert root.is_hermitian()

    def test_sqrtm_rejects_indefinite(self):
        with pytest.raises(HermiticityError):
            sqrtm_positive(SiteOperator(['a'], SZ))

    def test_expm_rejects_non_hermitian(self):
        with pytest.raises(HermiticityError):
            expm_hermitian(SiteOperator(['a'], [[0, 1], [0, 0]]), 1.0)


@pytest.mark.parametrize('legs', [[0], [2], [1, 0], [0, 2]])
def test_apply_local_matches_dense_embedding(rng, legs):
    sites = ['a', 'b', 'c']
    matrix = random_matrix(rng, 2 ** len(legs))
    dense = embed(SiteOperator([sites[i] for i in legs], matrix), sites)
    states = random_matrix(rng, 8)[:3]
    out = apply_local(states.reshape(3, 2, 2, 2), matrix, legs)
    assert_allclose(out.reshape(3, 8), states @ dense.matrix.T, atol=1e-12)
