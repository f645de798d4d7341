from cayleyqmc.src.tree.base import ROOT
from cayleyqmc.src.tree.base import LevelSet
from cayleyqmc.src.tree.base import TreeCoordinate
from cayleyqmc.src.tree.base import ball
from cayleyqmc.src.tree.base import leg_index
from cayleyqmc.src.tree.base import level_set
from cayleyqmc.src.tree.base import successors
