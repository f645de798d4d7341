import os
import logging

import graphviz


def _env(name, default, cast=float):
    value = os.environ.get(name)
    return default if value is None else cast(value)


# LOGGING
CAYLEYQMC_LOG_LEVEL = _env(
    'CAYLEYQMC_LOG_LEVEL', logging.WARNING, cast=logging.getLevelName)
CAYLEYQMC_DEBUG_PREFIX = '>>>> '

# TOLERANCES
CAYLEYQMC_OPERATOR_TOL = _env('CAYLEYQMC_OPERATOR_TOL', 1e-12)
CAYLEYQMC_FUNCTIONAL_TOL = _env('CAYLEYQMC_FUNCTIONAL_TOL', 1e-10)
CAYLEYQMC_HERMITIAN_TOL = _env('CAYLEYQMC_HERMITIAN_TOL', 1e-10)
CAYLEYQMC_ORBIT_CONVERGENCE_TOL = _env(
    'CAYLEYQMC_ORBIT_CONVERGENCE_TOL', 1e-13)
CAYLEYQMC_PERIODIC_TOL = _env('CAYLEYQMC_PERIODIC_TOL', 1e-10)

# ORBITS
CAYLEYQMC_ORBIT_MAX_STEPS = _env('CAYLEYQMC_ORBIT_MAX_STEPS', 200, cast=int)

# FEASIBILITY
# Largest site count for which dense matrices are materialized (128 x 128)
CAYLEYQMC_DENSE_MAX_SITES = _env('CAYLEYQMC_DENSE_MAX_SITES', 7, cast=int)
# Largest site count reachable by the matrix-free trace oracle
CAYLEYQMC_MATRIX_FREE_MAX_SITES = _env(
    'CAYLEYQMC_MATRIX_FREE_MAX_SITES', 15, cast=int)
CAYLEYQMC_MATRIX_FREE_BATCH = _env('CAYLEYQMC_MATRIX_FREE_BATCH', 128, cast=int)
CAYLEYQMC_TRANSFER_MAX_LEVEL = _env(
    'CAYLEYQMC_TRANSFER_MAX_LEVEL', 12, cast=int)

# DIAGRAMS
homepath = os.environ.get('HOMEPATH') or os.environ.get('HOME') or os.getcwd()
CAYLEYQMC_OUTPUT_PATH = os.environ.get(
    'CAYLEYQMC_OUTPUT_PATH', os.path.join(homepath, 'CAYLEYQMC_OUTPUT'))
CAYLEYQMC_TREE_DIAGRAM_FORMATS = ['png', 'pdf', 'svg']
assert set(CAYLEYQMC_TREE_DIAGRAM_FORMATS) <= set(graphviz.FORMATS)

assert 0 < CAYLEYQMC_OPERATOR_TOL <= CAYLEYQMC_FUNCTIONAL_TOL
assert CAYLEYQMC_DENSE_MAX_SITES <= CAYLEYQMC_MATRIX_FREE_MAX_SITES
