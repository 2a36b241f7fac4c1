"""Qubit Pauli channels, their Choi states and the PPT entanglement-breaking test."""

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, ValidationError

PROB_TOL = 1e-12
SUM_TOL = 1e-9
STATE_TOL = 1e-12
PSD_TOL = 1e-10
EB_TOL = 1e-10

_SIGMA_EXT = tuple(linalg.kron(s, linalg.I2) for s in linalg.PAULI_BASIS)

BETA = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2.0)
BETA.setflags(write=False)
#: |beta_alpha> = (sigma_alpha (x) I)|beta>
BELL_BASIS = tuple(s @ BETA for s in _SIGMA_EXT)
BETA_PROJECTOR = np.outer(BETA, BETA.conj())
BETA_PROJECTOR.setflags(write=False)


def _normalize_probs(q):
    q = np.asarray(q, dtype=float)
    if q.shape != (4,):
        raise ValidationError(f"a Pauli channel needs 4 probabilities, got {q.shape}")
    if not np.all(np.isfinite(q)):
        raise ValidationError("channel probabilities must be finite")
    if np.any(q < -PROB_TOL):
        raise ValidationError(f"negative channel probability in {q.tolist()}")
    total = q.sum()
    if abs(total - 1.0) > SUM_TOL:
        raise ValidationError(f"channel probabilities sum to {total!r}, not 1")
    q = np.clip(q, 0.0, None)
    return tuple(float(x) for x in q / q.sum())


@dataclass(frozen=True)
class PauliChannel:
    """The map ``rho -> sum_a q[a] sigma_a rho sigma_a``.

    ``q`` is clamped to nonnegative values and renormalized on construction;
    components below ``-1e-12`` or a sum more than ``1e-9`` away from one are
    rejected with :class:`ValidationError`.
    """

    q: tuple

    def __post_init__(self):
        object.__setattr__(self, "q", _normalize_probs(self.q))

    def __iter__(self):
        return iter(self.q)


def make_pauli_channel(q):
    return PauliChannel(tuple(q))


def depolarizing(q):
    """Depolarizing channel keeping the state with weight ``q``.

    The remaining ``1 - q`` is split evenly over the three Pauli flips, so
    ``q = 1/4`` is the completely depolarizing channel.
    """
    q = float(q)
    if not 0.0 <= q <= 1.0:
        raise ValidationError(f"depolarizing parameter must lie in [0, 1], got {q}")
    flip = (1.0 - q) / 3.0
    return PauliChannel((q, flip, flip, flip))


def validate_density_matrix(rho, dim=None):
    """Check the density-matrix invariants and return ``rho`` as an array.

    Hermitian and unit trace within 1e-12, smallest eigenvalue at least -1e-10.
    Works on stacks; every matrix in the stack must pass.
    """
    rho = linalg.as_matrix(rho)
    if dim is not None and rho.shape[-1] != dim:
        raise DimensionError(f"expected a {dim}x{dim} density matrix, got {rho.shape}")
    if np.any(linalg.hermitian_deviation(rho) > STATE_TOL):
        raise ValidationError("density matrix is not Hermitian")
    if np.any(np.abs(linalg.trace(rho) - 1.0) > STATE_TOL):
        raise ValidationError("density matrix does not have unit trace")
    if np.any(linalg.hermitian_eigenvalues(rho)[..., 0] < -PSD_TOL):
        raise ValidationError("density matrix has a negative eigenvalue")
    return rho


def _conjugate_sum(q, ops, rho):
    out = np.zeros(np.broadcast_shapes(rho.shape, ops[0].shape), dtype=np.complex128)
    for weight, op in zip(q, ops):
        if weight:
            out += weight * (op @ rho @ op)
    return out


def apply(ch, rho):
    """Output state of the channel on a qubit state (or stack of them)."""
    rho = validate_density_matrix(rho, dim=2)
    return _conjugate_sum(ch.q, linalg.PAULI_BASIS, rho)


def apply_extended(ch, gamma):
    """Act with ``ch`` on the first qubit of a two-qubit state, identity on the second."""
    gamma = validate_density_matrix(gamma, dim=4)
    return _conjugate_sum(ch.q, _SIGMA_EXT, gamma)


def choi(ch):
    """Unit-trace Choi state ``(ch (x) I)(|beta><beta|)``.

    Bell-diagonal with eigenvalue ``q[a]`` on ``|beta_a>``.
    """
    return _conjugate_sum(ch.q, _SIGMA_EXT, BETA_PROJECTOR)


def bell_diagonal(ch):
    """``sum_a q[a] |beta_a><beta_a|``, built directly from the Bell vectors."""
    return sum(w * np.outer(b, b.conj()) for w, b in zip(ch.q, BELL_BASIS))


@dataclass(frozen=True)
class EBReport:
    is_entanglement_breaking: bool
    min_pt_eigenvalue: float


def is_entanglement_breaking(ch):
    """PPT test on the Choi state.

    For two qubits positivity of the partial transpose is equivalent to
    separability, so the verdict is exact up to the ``1e-10`` eigenvalue
    tolerance that lets boundary channels count as entanglement breaking.
    """
    lam = float(linalg.hermitian_eigenvalues(linalg.partial_transpose(choi(ch)))[0])
    return EBReport(is_entanglement_breaking=lam >= -EB_TOL, min_pt_eigenvalue=lam)
