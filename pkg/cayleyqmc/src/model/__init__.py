from cayleyqmc.src.model.base import EdgeOperator
from cayleyqmc.src.model.base import PowerIdentityReport
from cayleyqmc.src.model.base import edge_symmetry_residuals
from cayleyqmc.src.model.base import h_edge
from cayleyqmc.src.model.base import k_edge
from cayleyqmc.src.model.base import k_edge_expm
from cayleyqmc.src.model.base import pauli
from cayleyqmc.src.model.base import pauli_matrix
from cayleyqmc.src.model.base import verify_power_identities
