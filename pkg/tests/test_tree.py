"""Vertex coordinates, levels, balls and the graphviz drawing of a ball."""
import shutil

from pathlib import Path

import pytest

from cayleyqmc.src.errors import TreeError
from cayleyqmc.src.tree import ROOT
from cayleyqmc.src.tree import TreeCoordinate
from cayleyqmc.src.tree import ball
from cayleyqmc.src.tree import leg_index
from cayleyqmc.src.tree import level_set
from cayleyqmc.src.tree import successors
from cayleyqmc.src.tree.diagram import ball_diagram
from cayleyqmc.src.tree.diagram import render_ball_diagram


class TestTreeCoordinate:
    def test_parse(self):
        x = TreeCoordinate.parse('1.2.1')
        assert x.digits == (1, 2, 1)
        assert x.level == 3
        assert str(x) == '1.2.1'
        assert TreeCoordinate.parse('') == ROOT

    @pytest.mark.parametrize('text', ['1.x', '0', '1..2', '-1'])
    def test_parse_rejects(self, text):
        with pytest.raises(TreeError):
            TreeCoordinate.parse(text)

    def test_parent_and_child(self):
        x = TreeCoordinate((2, 1))
        assert x.parent == TreeCoordinate((2,))
        assert x.parent.child(1) == x
        with pytest.raises(TreeError):
            ROOT.parent

    def test_successors_check_order(self):
        assert successors(TreeCoordinate((1,))) == (
            TreeCoordinate((1, 1)), TreeCoordinate((1, 2)))
        with pytest.raises(TreeError):
            successors(TreeCoordinate((3,)), 2)


class TestLevelsAndBalls:
    @pytest.mark.parametrize('n', range(6))
    def test_level_size(self, n):
        assert len(level_set(n)) == 2 ** n

    def test_level_is_lexicographic(self):
        assert [str(x) for x in level_set(2)] == ['1.1', '1.2', '2.1', '2.2']
        assert level_set(2).backward == level_set(2).forward[::-1]

    @pytest.mark.parametrize('n', range(6))
    def test_ball_is_concatenation_of_levels(self, n):
        b = ball(n)
        assert len(b) == 2 ** (n + 1) - 1
        assert len(set(b)) == len(b)
        expected = tuple(x for m in range(n + 1) for x in level_set(m))
        assert b == expected

    def test_ball_is_parent_closed(self):
        b = set(ball(4))
        assert all(x.parent in b for x in b if x.level)

    def test_higher_order(self):
        assert len(ball(2, 3)) == 13
        assert len(level_set(2, 3)) == 9

    def test_leg_index(self):
        legs = leg_index(2)
        assert legs[ROOT] == 0
        assert legs[TreeCoordinate((2,))] == 2
        assert legs[TreeCoordinate((2, 2))] == 6

    def test_negative_level(self):
        with pytest.raises(TreeError):
            ball(-1)


@pytest.mark.parametrize('n', [0, 1, 3])
def test_ball_diagram_edges(n):
    source = ball_diagram(n).source
    assert source.startswith('digraph')
    assert source.count('->') == len(ball(n)) - 1
    assert 'root' in source


def test_render_ball_diagram_writes_every_format(tmp_path, monkeypatch):
    graphviz = pytest.importorskip('graphviz')
    rendered = []

    def fake_render(self, filename=None, format=None, cleanup=False):
        rendered.append(self.source)
        path = f'{filename}.{format}'
        with open(path, 'w') as f:
            f.write(self.source)
        return path

    monkeypatch.setattr(graphviz.Digraph, 'render', fake_render)
    paths = render_ball_diagram(2, directory=tmp_path / 'out',
                                formats=('pdf', 'svg'))
    assert paths == [str(tmp_path / 'out' / 'ball_2_2.pdf'),
                     str(tmp_path / 'out' / 'ball_2_2.svg')]
    for source in rendered:
        assert source == ball_diagram(2).source
        assert source.count('->') == len(ball(2)) - 1
        assert '2.2\\n#6' in source


def test_render_ball_diagram_with_dot(tmp_path):
    pytest.importorskip('graphviz')
    if shutil.which('dot') is None:
        pytest.skip('graphviz binaries are not installed')
    paths = render_ball_diagram(1, directory=tmp_path, formats=('svg',))
    assert len(paths) == 1
    content = Path(paths[0]).read_text()
    assert '<svg' in content
    assert 'root' in content
