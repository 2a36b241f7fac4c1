"""Entanglement-assisted minimum-error discrimination of qubit Pauli channels."""

from .channels import (
    EBReport,
    PauliChannel,
    apply,
    apply_extended,
    choi,
    depolarizing,
    is_entanglement_breaking,
    make_pauli_channel,
)
from .discrimination import (
    DiscriminationProblem,
    DiscriminationReport,
    PriorInterval,
    RVector,
    depolarizing_improvement_condition,
    depolarizing_region,
    discriminate,
    entanglement_helps,
    error_entangled,
    error_entangled_bruteforce,
    error_unentangled,
    error_unentangled_bruteforce,
    helstrom_error,
    r_vector,
    region_sweep,
)
from .errors import ConsistencyError, ConvergenceError, DimensionError, ValidationError

__version__ = "0.1.0"
