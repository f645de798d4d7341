"""CayleyQMC tree base module.

This module provides the geometry of the rooted Cayley tree of order k:
vertex coordinates (TreeCoordinate), levels W_n (LevelSet), direct
successors and the balls Lambda_n whose ordering fixes the tensor legs of
every dense construction.

Example:

    from cayleyqmc.src.tree import TreeCoordinate, ball, level_set

    print(level_set(2, 2).vertices)       # (1.1, 1.2, 2.1, 2.2)
    print([str(x) for x in ball(1, 2)])   # ['', '1', '2']
    x = TreeCoordinate.parse('1.2')
    print(x.level, x.parent)              # 2 1
"""
import itertools

from dataclasses import dataclass

from cayleyqmc.src import utils

from cayleyqmc.src.errors import TreeError

logger = utils.create_logger(__name__)

VERTEX_SEPARATOR = '.'


@dataclass(frozen=True, order=True)
class TreeCoordinate:
    """Vertex address (i_1, ..., i_n); the empty address is the root."""
    digits: tuple = ()

    def __post_init__(self):
        digits = tuple(self.digits)
        if any(not isinstance(d, int) or isinstance(d, bool) or d < 1
               for d in digits):
            raise TreeError(f'Invalid coordinate digits {digits}')
        object.__setattr__(self, 'digits', digits)

    @classmethod
    def parse(cls, text):
        """Parse the dotted vertex syntax, e.g. ``'1.2.1'``; ``''`` is the root.

        :rtype: :class:`TreeCoordinate`
        """
        text = text.strip()
        if not text:
            return cls()
        try:
            digits = tuple(int(part) for part in text.split(VERTEX_SEPARATOR))
        except ValueError:
            raise TreeError(f'Invalid vertex {text!r}')
        return cls(digits)

    @property
    def level(self):
        return len(self.digits)

    @property
    def parent(self):
        if not self.digits:
            raise TreeError('The root has no parent')
        return TreeCoordinate(self.digits[:-1])

    def child(self, i):
        return TreeCoordinate(self.digits + (i,))

    def check_order(self, k):
        if any(d > k for d in self.digits):
            raise TreeError(f'Vertex {self} does not exist for order {k}')

    def __str__(self):
        return VERTEX_SEPARATOR.join(str(d) for d in self.digits)

    def __repr__(self):
        return f'TreeCoordinate({str(self)!r})'


ROOT = TreeCoordinate()


@dataclass(frozen=True)
class LevelSet:
    """Level W_n in forward (lexicographic) order."""
    n: int
    k: int
    vertices: tuple

    @property
    def forward(self):
        return self.vertices

    @property
    def backward(self):
        return self.vertices[::-1]

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __getitem__(self, index):
        return self.vertices[index]


def _check_order(k):
    if not isinstance(k, int) or k < 1:
        raise TreeError(f'Tree order must be a positive integer, got {k!r}')


def _check_level(n):
    if not isinstance(n, int) or n < 0:
        raise TreeError(f'Level must be a nonnegative integer, got {n!r}')


def level_set(n, k=2):
    """Return W_n, the vertices at distance ``n`` from the root.

    :rtype: :class:`LevelSet`
    """
    _check_level(n)
    _check_order(k)
    vertices = tuple(
        TreeCoordinate(digits)
        for digits in itertools.product(range(1, k + 1), repeat=n))
    return LevelSet(n, k, vertices)


def successors(x, k=2):
    """Return the direct successors ((x,1), ..., (x,k)) in forward order.

    :rtype: ``tuple`` of :class:`TreeCoordinate`
    """
    _check_order(k)
    x.check_order(k)
    return tuple(x.child(i) for i in range(1, k + 1))


def ball(n, k=2):
    """Return Lambda_n as the concatenation of W_0, ..., W_n.

    The position of a vertex in this tuple is its tensor-leg index.

    :rtype: ``tuple`` of :class:`TreeCoordinate`
    """
    _check_level(n)
    return tuple(itertools.chain.from_iterable(
        level_set(m, k).vertices for m in range(n + 1)))


def leg_index(n, k=2):
    """Return the map vertex -> leg index of Lambda_n.

    :rtype: ``dict``
    """
    return {x: i for i, x in enumerate(ball(n, k))}
