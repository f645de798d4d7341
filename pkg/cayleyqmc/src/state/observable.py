"""Product observables: linear combinations of tensor products of single-site
matrices on the Cayley tree.

Example:

    from cayleyqmc.src.state import ProductObservable

    zz = ProductObservable.pauli_string({'': 'z', '1': 'z'})
    print(zz.support_level)   # 1
"""
from dataclasses import dataclass

import numpy as np

from cayleyqmc.src.errors import ModelError
from cayleyqmc.src.errors import ObservableParseError
from cayleyqmc.src.errors import SupportError
from cayleyqmc.src.errors import TreeError
from cayleyqmc.src.linalg import from_factors
from cayleyqmc.src.model import pauli_matrix
from cayleyqmc.src.tree import TreeCoordinate


def _vertex(value):
    if isinstance(value, TreeCoordinate):
        return value
    return TreeCoordinate.parse(value)


def _factor(matrix, vertex):
    matrix = np.array(matrix, dtype=complex)
    if matrix.shape != (2, 2):
        raise SupportError(
            f'Factor at vertex {str(vertex) or "root"} must be 2 x 2, '
            f'got {matrix.shape}')
    return matrix


@dataclass(frozen=True, eq=False)
class ObservableTerm:
    """coeff * (tensor product of ``factors``); unassigned vertices are I."""
    coeff: complex
    factors: tuple

    @property
    def support(self):
        return tuple(vertex for vertex, _ in self.factors)

    @property
    def support_level(self):
        return max((vertex.level for vertex in self.support), default=0)

    def factor_map(self):
        return dict(self.factors)


class ProductObservable:
    """Finite sum of product terms."""

    def __init__(self, terms=()):
        self._terms = tuple(terms)

    @classmethod
    def product(cls, factors, coeff=1.0, k=2):
        """Return the single term ``coeff * prod factors[x]``.

        :keyword  factors:  Map from vertex (or its dotted text) to a 2 x 2
            matrix.
        :type     factors:  ``dict``
        """
        pairs = {}
        for key, matrix in factors.items():
            vertex = _vertex(key)
            vertex.check_order(k)
            if vertex in pairs:
                raise SupportError(f'Vertex {vertex!r} assigned twice')
            pairs[vertex] = _factor(matrix, vertex)
        term = ObservableTerm(complex(coeff), tuple(sorted(
            pairs.items(), key=lambda item: (item[0].level, item[0]))))
        return cls([term])

    @classmethod
    def identity(cls):
        return cls.product({})

    @classmethod
    def pauli_string(cls, axes, coeff=1.0):
        """Return ``coeff * prod sigma_{axes[x]}`` for a map vertex -> axis."""
        return cls.product(
            {vertex: pauli_matrix(axis) for vertex, axis in axes.items()},
            coeff)

    @property
    def terms(self):
        return self._terms

    @property
    def support_level(self):
        return max((term.support_level for term in self._terms), default=0)

    def check_support(self, n):
        if self.support_level > n:
            raise SupportError(
                f'Observable reaches level {self.support_level}, beyond the '
                f'volume Lambda_{n}')

    def __add__(self, other):
        if not isinstance(other, ProductObservable):
            return NotImplemented
        return ProductObservable(self._terms + other._terms)

    def __mul__(self, scalar):
        return ProductObservable(
            ObservableTerm(scalar * term.coeff, term.factors)
            for term in self._terms)

    __rmul__ = __mul__

    def __len__(self):
        return len(self._terms)

    def __repr__(self):
        return (f'ProductObservable(terms={len(self._terms)}, '
                f'support_level={self.support_level})')

    def to_operator(self, sites):
        """Return the dense operator on ``sites``.

        :rtype: :class:`cayleyqmc.src.linalg.SiteOperator`
        """
        sites = tuple(sites)
        total = from_factors({}, sites) * 0
        for term in self._terms:
            total = total + term.coeff * from_factors(term.factor_map(), sites)
        return total


def random_product_observable(rng, sites, n_factors=None, hermitian=True):
    """Return one random product term supported on a subset of ``sites``.

    :keyword  rng:  Seeded generator.
    :type     rng:  ``numpy.random.Generator``
    :keyword  n_factors:  Number of non-identity factors (random if omitted).
    :type     n_factors:  ``int``
    """
    sites = tuple(sites)
    if n_factors is None:
        n_factors = int(rng.integers(1, len(sites) + 1))
    chosen = rng.choice(len(sites), size=n_factors, replace=False)
    factors = {}
    for index in sorted(chosen):
        g = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        factors[sites[index]] = 0.5 * (g + g.conj().T) if hermitian else g
    return ProductObservable.product(factors)


def _complex(value, where):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(value)
    if (isinstance(value, list) and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool)
                    for v in value)):
        return complex(value[0], value[1])
    raise ObservableParseError(
        f'{where}: expected a number or [re, im], got {value!r}')


def _matrix(value, where):
    if not isinstance(value, list) or len(value) != 2:
        raise ObservableParseError(f'{where}: expected a 2 x 2 matrix')
    rows = []
    for i, row in enumerate(value):
        if not isinstance(row, list) or len(row) != 2:
            raise ObservableParseError(f'{where}[{i}]: expected two entries')
        rows.append([_complex(v, f'{where}[{i}][{j}]')
                     for j, v in enumerate(row)])
    return np.array(rows, dtype=complex)


def parse_observable(document):
    """Build an observable from its decoded JSON document.

    ``{"terms": [{"coeff": [re, im], "factors": [{"vertex": "1.2",
    "matrix": [[[re, im], ...], ...]}, {"vertex": "", "pauli": "z"}]}]}``

    :rtype: :class:`ProductObservable`
    """
    if not isinstance(document, dict) or not isinstance(
            document.get('terms'), list):
        raise ObservableParseError('Top level must be {"terms": [...]}')
    observable = ProductObservable()
    for t, term in enumerate(document['terms']):
        where = f'terms[{t}]'
        if not isinstance(term, dict):
            raise ObservableParseError(f'{where}: expected an object')
        coeff = _complex(term.get('coeff', 1.0), f'{where}.coeff')
        factors = {}
        for f, entry in enumerate(term.get('factors', [])):
            at = f'{where}.factors[{f}]'
            if not isinstance(entry, dict) or 'vertex' not in entry:
                raise ObservableParseError(f'{at}: expected {{"vertex": ...}}')
            try:
                vertex = TreeCoordinate.parse(str(entry['vertex']))
            except TreeError as e:
                raise ObservableParseError(f'{at}.vertex: {e}')
            if vertex in factors:
                raise ObservableParseError(f'{at}: vertex assigned twice')
            if 'pauli' in entry:
                try:
                    factors[vertex] = pauli_matrix(entry['pauli'])
                except ModelError:
                    raise ObservableParseError(
                        f'{at}.pauli: unknown axis {entry["pauli"]!r}')
            elif 'matrix' in entry:
                factors[vertex] = _matrix(entry['matrix'], f'{at}.matrix')
            else:
                raise ObservableParseError(
                    f'{at}: needs either "matrix" or "pauli"')
        try:
            observable = observable + ProductObservable.product(factors, coeff)
        except (SupportError, TreeError) as e:
            raise ObservableParseError(f'{where}: {e}')
    return observable
