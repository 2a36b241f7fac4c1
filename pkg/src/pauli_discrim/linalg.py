"""Dense complex matrix helpers for qubit and two-qubit operators.

Matrices are ``numpy`` arrays of dtype ``complex128``. Every routine is pure:
inputs are never modified, and most routines accept stacks of matrices with
shape ``(..., n, n)`` so that brute-force searches can run in one call.

The Hermitian eigensolver is a cyclic complex Jacobi method. It is slow
compared to LAPACK, but for ``n <= 4`` it is accurate to a few ulps and has no
failure modes beyond the sweep cap.
"""

import numpy as np

from .errors import ConvergenceError, DimensionError, ValidationError

HERMITIAN_TOL = 1e-12
JACOBI_TOL = 1e-13
MAX_SWEEPS = 100
TINY = 1e-290


def _frozen(rows):
    m = np.array(rows, dtype=np.complex128)
    m.setflags(write=False)
    return m


I2 = _frozen([[1, 0], [0, 1]])
SIGMA_X = _frozen([[0, 1], [1, 0]])
SIGMA_Y = _frozen([[0, -1j], [1j, 0]])
SIGMA_Z = _frozen([[1, 0], [0, -1]])

#: sigma_0 = I, sigma_1 = X, sigma_2 = Y, sigma_3 = Z
PAULI_BASIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)


def as_matrix(a):
    """Return ``a`` as a finite complex array of square matrices.

    Raises:
        DimensionError: if the trailing two axes are not square.
        ValidationError: if any entry is NaN or infinite.
    """
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim < 2 or m.shape[-1] != m.shape[-2]:
        raise DimensionError(f"expected square matrices, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix entries must be finite")
    return m


def _same_dim(a, b):
    if a.shape[-1] != b.shape[-1]:
        raise DimensionError(f"dimension mismatch: {a.shape[-1]} vs {b.shape[-1]}")


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a @ b


def add_scaled(a, c, b):
    """Entrywise ``a + c * b``."""
    a, b = as_matrix(a), as_matrix(b)
    _same_dim(a, b)
    return a + float(c) * b


def dagger(a):
    return np.conj(np.swapaxes(as_matrix(a), -1, -2))


def kron(a, b):
    """Kronecker product; block ``(j, k)`` of the result is ``a[j, k] * b``."""
    a, b = as_matrix(a), as_matrix(b)
    if a.ndim != 2 or b.ndim != 2:
        raise DimensionError("kron takes single matrices, not stacks")
    return np.kron(a, b)


def trace(a):
    return np.trace(as_matrix(a), axis1=-2, axis2=-1)


def hermitian_deviation(a):
    """Largest entrywise modulus of ``a - dagger(a)`` (per matrix for stacks)."""
    a = as_matrix(a)
    return np.abs(a - dagger(a)).max(axis=(-2, -1))


def _check_hermitian(a):
    dev = hermitian_deviation(a)
    if np.any(dev > HERMITIAN_TOL):
        raise ValidationError(
            f"matrix is not Hermitian (max |a - a^dagger| = {np.max(dev):.3e})")
    return 0.5 * (a + dagger(a))


def _offdiag_norm(a):
    n = a.shape[-1]
    mask = ~np.eye(n, dtype=bool)
    return np.sqrt(np.sum(np.abs(a[:, mask]) ** 2, axis=-1))


def _rotate(a, p, q):
    """One complex Jacobi rotation zeroing ``a[:, p, q]`` in place."""
    apq = a[:, p, q]
    mag = np.abs(apq)
    # below TINY the phase and tau divisions overflow; such entries are dropped
    nz = mag > TINY
    if not nz.any():
        return
    safe_mag = np.where(nz, mag, 1.0)
    phase = np.where(nz, apq / safe_mag, 1.0)
    tau = (a[:, q, q].real - a[:, p, p].real) / (2.0 * safe_mag)
    sign = np.where(tau >= 0.0, 1.0, -1.0)
    t = np.where(nz, sign / (np.abs(tau) + np.hypot(1.0, tau)), 0.0)
    c = 1.0 / np.sqrt(1.0 + t * t)
    s = t * c
    # U = diag(1, conj(phase)) @ [[c, s], [-s, c]]; apply A <- U^dagger A U
    u00, u01 = c[:, None], s[:, None]
    u10, u11 = (-s * np.conj(phase))[:, None], (c * np.conj(phase))[:, None]
    cp, cq = a[:, :, p].copy(), a[:, :, q].copy()
    a[:, :, p] = cp * u00 + cq * u10
    a[:, :, q] = cp * u01 + cq * u11
    rp, rq = a[:, p, :].copy(), a[:, q, :].copy()
    a[:, p, :] = np.conj(u00) * rp + np.conj(u10) * rq
    a[:, q, :] = np.conj(u01) * rp + np.conj(u11) * rq
    a[:, p, q] = 0.0
    a[:, q, p] = 0.0


def _jacobi(stack):
    a = stack.copy()
    n = a.shape[-1]
    tol = JACOBI_TOL * np.maximum(1.0, np.linalg.norm(a, axis=(-2, -1)))
    active = np.arange(a.shape[0])
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]
    for sweep in range(MAX_SWEEPS + 1):
        sub = a[active]
        keep = _offdiag_norm(sub) >= tol[active]
        active, sub = active[keep], sub[keep]
        if active.size == 0:
            break
        if sweep == MAX_SWEEPS:
            raise ConvergenceError(f"Jacobi did not converge in {MAX_SWEEPS} sweeps")
        for p, q in pairs:
            _rotate(sub, p, q)
        a[active] = sub
    return np.sort(np.diagonal(a, axis1=-2, axis2=-1).real, axis=-1)


def hermitian_eigenvalues(a):
    """Eigenvalues of a Hermitian matrix (or stack), in ascending order.

    The input is symmetrized after passing the Hermiticity check, then
    diagonalized by cyclic Jacobi sweeps until the off-diagonal Frobenius norm
    drops below ``1e-13`` (scaled by the matrix norm when that exceeds one).

    Raises:
        ValidationError: if ``a`` deviates from Hermitian by more than 1e-12.
        ConvergenceError: if 100 sweeps do not suffice.
    """
    a = _check_hermitian(as_matrix(a))
    n = a.shape[-1]
    flat = a.reshape(-1, n, n)
    return _jacobi(flat).reshape(a.shape[:-1])


def trace_norm(a):
    """Sum of absolute eigenvalues of a Hermitian matrix (or stack)."""
    return np.sum(np.abs(hermitian_eigenvalues(a)), axis=-1)


def partial_transpose(a):
    """Transpose the second (ancilla) qubit of a two-qubit operator.

    Entry ``((j, k), (l, m))`` moves to ``((j, m), (l, k))`` with the composite
    index ``row = 2 * j + k``.
    """
    a = as_matrix(a)
    if a.shape[-1] != 4:
        raise DimensionError("partial_transpose needs 4x4 two-qubit operators")
    lead = a.shape[:-2]
    t = a.reshape(lead + (2, 2, 2, 2)).swapaxes(-3, -1)
    return t.reshape(lead + (4, 4))
