from cayleyqmc.src.state.base import FiniteVolumeState
from cayleyqmc.src.state.compatibility import eq1_residual
from cayleyqmc.src.state.compatibility import eq2_residuals
from cayleyqmc.src.state.compatibility import is_compatible
from cayleyqmc.src.state.compatibility import resolve_form
from cayleyqmc.src.state.conditional import QuasiConditionalWindow
from cayleyqmc.src.state.conditional import quasi_conditional_window
from cayleyqmc.src.state.dense import Density
from cayleyqmc.src.state.dense import ball_size
from cayleyqmc.src.state.dense import build_density
from cayleyqmc.src.state.dense import build_level_coupler
from cayleyqmc.src.state.dense import expectation_dense
from cayleyqmc.src.state.dense import matrix_free_trace
from cayleyqmc.src.state.observable import ObservableTerm
from cayleyqmc.src.state.observable import ProductObservable
from cayleyqmc.src.state.observable import parse_observable
from cayleyqmc.src.state.observable import random_product_observable
from cayleyqmc.src.state.transfer import TransferMessage
from cayleyqmc.src.state.transfer import expectation_transfer
from cayleyqmc.src.state.transfer import log_partition
from cayleyqmc.src.state.transfer import message_tree
from cayleyqmc.src.state.uniqueness import free_energy
from cayleyqmc.src.state.uniqueness import free_energy_limit
from cayleyqmc.src.state.uniqueness import free_energy_numeric
from cayleyqmc.src.state.uniqueness import uniqueness_check
from cayleyqmc.src.state.uniqueness import uniqueness_values
from cayleyqmc.src.state.uniqueness import volume_size
from cayleyqmc.src.state.vertex import check_eq2
from cayleyqmc.src.state.vertex import combine
