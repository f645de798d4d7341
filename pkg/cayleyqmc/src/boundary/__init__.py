from cayleyqmc.src.boundary.base import BoundaryPoint
from cayleyqmc.src.boundary.base import OrbitResult
from cayleyqmc.src.boundary.base import condition_number
from cayleyqmc.src.boundary.base import contraction_factor
from cayleyqmc.src.boundary.base import fixed_point
from cayleyqmc.src.boundary.base import is_admissible
from cayleyqmc.src.boundary.base import off_diagonal_fixed_point_square
from cayleyqmc.src.boundary.base import orbit
from cayleyqmc.src.boundary.base import orbit_closed_form
from cayleyqmc.src.boundary.base import orbit_length_bound
from cayleyqmc.src.boundary.base import pullup
from cayleyqmc.src.boundary.base import pushdown
from cayleyqmc.src.boundary.base import ratio_contraction_check
from cayleyqmc.src.boundary.base import trajectory_bound
from cayleyqmc.src.boundary.family import BoundaryCondition
from cayleyqmc.src.boundary.family import alpha_fixed
from cayleyqmc.src.boundary.family import boundary_from_orbit
from cayleyqmc.src.boundary.family import boundary_point_matrix
from cayleyqmc.src.boundary.family import family_scale
from cayleyqmc.src.boundary.family import solution_family
from cayleyqmc.src.boundary.inequality import appendix_identity
from cayleyqmc.src.boundary.inequality import appendix_polynomial
from cayleyqmc.src.boundary.inequality import lemma_inequality
from cayleyqmc.src.boundary.search import periodic_point_search
