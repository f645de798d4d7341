from enum import Enum

Termination = Enum('Termination', [
    'CONVERGED',
    'DOMAIN_VIOLATION',
    'MAX_STEPS',
])
