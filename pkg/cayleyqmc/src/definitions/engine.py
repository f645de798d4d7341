from enum import Enum


class Engine(Enum):
    DENSE = 'dense'
    TRANSFER = 'transfer'
    AUTO = 'auto'


class EvaluationForm(Enum):
    AUTO = 'auto'
    # tr(W_{n]} a), valid when (eq1)/(eq2) hold
    COROLLARY = 'corollary'
    # tr(W_{n+1]} (a x id)), valid for any boundary data
    PADDED = 'padded'
