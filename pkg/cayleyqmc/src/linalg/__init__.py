from cayleyqmc.src.linalg.base import SiteOperator
from cayleyqmc.src.linalg.base import apply_local
from cayleyqmc.src.linalg.base import embed
from cayleyqmc.src.linalg.base import expm_hermitian
from cayleyqmc.src.linalg.base import from_factors
from cayleyqmc.src.linalg.base import function_hermitian
from cayleyqmc.src.linalg.base import identity
from cayleyqmc.src.linalg.base import normalized_partial_trace
from cayleyqmc.src.linalg.base import normalized_trace
from cayleyqmc.src.linalg.base import sqrtm_positive
from cayleyqmc.src.linalg.base import tensor
