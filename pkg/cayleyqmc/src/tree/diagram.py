"""CayleyQMC tree diagram module.

Draws a ball Lambda_n of the tree with graphviz, labelling every vertex with
its dotted coordinate and tensor-leg index.

Example:

    from cayleyqmc.src.tree.diagram import ball_diagram

    print(ball_diagram(2).source)
"""
import os

from pathlib import Path

import graphviz

from cayleyqmc.settings import CAYLEYQMC_OUTPUT_PATH
from cayleyqmc.settings import CAYLEYQMC_TREE_DIAGRAM_FORMATS

from cayleyqmc.src import utils
from cayleyqmc.src.tree.base import ball

logger = utils.create_logger(__name__)

TREE_DIAGRAM_FILENAME = 'ball'


def _node_name(x):
    return f'v{x}' if x.level else 'root'


def ball_diagram(n, k=2):
    """Return a graphviz digraph of Lambda_n (edges parent -> child).

    :rtype: :class:`graphviz.Digraph`
    """
    graph = graphviz.Digraph(name=f'ball_{n}_{k}')
    for index, x in enumerate(ball(n, k)):
        label = f'{str(x) or "root"}\\n#{index}'
        graph.node(_node_name(x), label=label)
        if x.level:
            graph.edge(_node_name(x.parent), _node_name(x))
    return graph


def render_ball_diagram(n, k=2, directory=None,
                        formats=CAYLEYQMC_TREE_DIAGRAM_FORMATS):
    """Render Lambda_n in every format of ``formats``.

    :return: Paths of the written files.
    :rtype: ``list`` of ``str``
    """
    directory = directory or CAYLEYQMC_OUTPUT_PATH
    Path(directory).mkdir(parents=True, exist_ok=True)
    graph = ball_diagram(n, k)
    filename = os.path.join(directory, f'{TREE_DIAGRAM_FILENAME}_{n}_{k}')
    paths = []
    for fmt in formats:
        paths.append(graph.render(filename=filename, format=fmt, cleanup=True))
        logger.debug(f'Wrote {paths[-1]}')
    return paths
