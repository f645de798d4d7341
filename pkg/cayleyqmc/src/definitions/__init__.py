from cayleyqmc.src.definitions.engine import Engine
from cayleyqmc.src.definitions.engine import EvaluationForm
from cayleyqmc.src.definitions.orbit import Termination
from cayleyqmc.src.definitions.pauli import Axis
