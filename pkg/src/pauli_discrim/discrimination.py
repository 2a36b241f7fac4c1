"""Minimum-error discrimination of two qubit Pauli channels.

A problem is a pair of Pauli channels with priors ``p1`` and ``p2 = 1 - p1``.
Everything about it is controlled by the four weights

    r[a] = p1 * q1[a] - p2 * q2[a].

With a maximally entangled probe the two output states are Bell-diagonal, so
the Helstrom error is ``(1 - sum |r[a]|) / 2``. A single-qubit probe with
Bloch vector ``n`` gives outputs whose weighted difference is
``(s I + sum_k c[k] n[k] sigma_k) / 2`` with ``s = sum r`` and
``c[k] = r[0] + r[k] - r[i] - r[j]``; its trace norm is ``max(|s|, |c * n|)``,
maximized on a coordinate axis. Entanglement helps strictly exactly when the
product of the four weights is negative.
"""

import logging
from dataclasses import dataclass

import numpy as np

from . import linalg
from .channels import _SIGMA_EXT, BETA, PauliChannel, choi, depolarizing
from .errors import ConsistencyError, DimensionError, ValidationError

log = logging.getLogger(__name__)

PRODUCT_TOL = 1e-15
IMPROVEMENT_TOL = 1e-12
ROUTE_TOL = 1e-12
# min |r| below this: gap may sit on either side of IMPROVEMENT_TOL after roundoff
BOUNDARY_R_TOL = 2e-12
DEGENERATE_Q_TOL = 1e-12
SWEEP_SKIP_TOL = 1e-9

_AXES = np.eye(3)


@dataclass(frozen=True)
class DiscriminationProblem:
    channel1: PauliChannel
    channel2: PauliChannel
    p1: float

    def __post_init__(self):
        p1 = float(self.p1)
        if not 0.0 <= p1 <= 1.0:
            raise ValidationError(f"prior p1 must lie in [0, 1], got {p1}")
        object.__setattr__(self, "p1", p1)

    @property
    def p2(self):
        return 1.0 - self.p1

    def swapped(self):
        """Same problem with the channel labels exchanged."""
        return DiscriminationProblem(self.channel2, self.channel1, self.p2)


def depolarizing_problem(p, q1, q2):
    return DiscriminationProblem(depolarizing(q1), depolarizing(q2), p)


@dataclass(frozen=True)
class RVector:
    r: tuple

    @property
    def product(self):
        return float(np.prod(self.r))

    @property
    def s(self):
        return float(sum(self.r))

    @property
    def c(self):
        """Bloch-axis contrasts ``r0 + rk - ri - rj`` for k = x, y, z."""
        r0, r1, r2, r3 = self.r
        return (r0 + r1 - r2 - r3, r0 + r2 - r1 - r3, r0 + r3 - r1 - r2)

    @property
    def l1(self):
        return float(sum(abs(x) for x in self.r))


@dataclass(frozen=True)
class PriorInterval:
    """Open interval of priors ``p``; ``empty`` when the bounds meet."""

    lower: float
    upper: float
    empty: bool = False

    def __contains__(self, p):
        return not self.empty and self.lower < p < self.upper


@dataclass(frozen=True)
class DiscriminationReport:
    r: RVector
    err_unentangled: float
    optimal_bloch_axis: tuple
    err_entangled: float
    entanglement_helps: bool
    improvement: float
    # sign test and gap threshold not decisive: |prod r| < 1e-15 or min |r| <= 2e-12
    boundary: bool = False


def r_vector(prob):
    r = tuple(prob.p1 * a - prob.p2 * b
              for a, b in zip(prob.channel1.q, prob.channel2.q))
    return RVector(r)


def entanglement_helps(prob):
    return r_vector(prob).product < -PRODUCT_TOL


def helstrom_error(rho1, rho2, p1):
    """Minimum error for telling ``rho1`` (prior ``p1``) from ``rho2``.

    Accepts stacks of states; the result then has the stack shape.
    """
    rho1, rho2 = linalg.as_matrix(rho1), linalg.as_matrix(rho2)
    if rho1.shape[-1] != rho2.shape[-1]:
        raise DimensionError("states must have the same dimension")
    if not 0.0 <= p1 <= 1.0:
        raise ValidationError(f"prior must lie in [0, 1], got {p1}")
    return 0.5 * (1.0 - linalg.trace_norm(p1 * rho1 - (1.0 - p1) * rho2))


def error_entangled(prob):
    """Error with half of ``|beta>`` sent through the unknown channel.

    Computed as the Helstrom error of the two Choi states and cross-checked
    against the Bell-diagonal value ``(1 - sum |r|) / 2``.
    """
    err = float(helstrom_error(choi(prob.channel1), choi(prob.channel2), prob.p1))
    closed = 0.5 * (1.0 - r_vector(prob).l1)
    if abs(err - closed) > ROUTE_TOL:
        raise ConsistencyError(
            f"entangled error: Helstrom {err!r} vs Bell-diagonal {closed!r}")
    return err


def error_unentangled(prob):
    """Best error with a single-qubit probe, and the Bloch axis attaining it.

    When ``|s|`` dominates every axis is optimal; the axis of largest ``|c|``
    is reported anyway so the result is deterministic.
    """
    rv = r_vector(prob)
    c = np.abs(rv.c)
    k = int(np.argmax(c))
    norm = max(abs(rv.s), float(c[k]))
    return 0.5 * (1.0 - norm), tuple(float(x) for x in _AXES[k])


def _pure_qubit_states(bloch):
    n = np.asarray(bloch, dtype=float)
    rho = np.empty(n.shape[:-1] + (2, 2), dtype=np.complex128)
    rho[..., 0, 0] = 0.5 * (1 + n[..., 2])
    rho[..., 1, 1] = 0.5 * (1 - n[..., 2])
    rho[..., 0, 1] = 0.5 * (n[..., 0] - 1j * n[..., 1])
    rho[..., 1, 0] = 0.5 * (n[..., 0] + 1j * n[..., 1])
    return rho


def bloch_grid(n_grid):
    """Unit vectors on an ``n_grid x n_grid`` (theta, phi) grid plus the six axes."""
    theta = np.linspace(0.0, np.pi, n_grid)
    phi = np.linspace(0.0, 2 * np.pi, n_grid, endpoint=False)
    t, f = np.meshgrid(theta, phi, indexing="ij")
    grid = np.stack([np.sin(t) * np.cos(f), np.sin(t) * np.sin(f), np.cos(t)], -1)
    return np.concatenate([grid.reshape(-1, 3), _AXES, -_AXES])


def _outputs(ch, rhos, ops):
    out = np.zeros_like(rhos)
    for w, op in zip(ch.q, ops):
        if w:
            out += w * (op @ rhos @ op)
    return out


def error_unentangled_bruteforce(prob, n_grid=24):
    """Grid search over pure single-qubit probes.

    Mixed probes never do better: the Helstrom error is concave in the input
    state, so its minimum over the Bloch ball sits on the sphere. The six
    coordinate axes are always included, which makes the search exact for
    Pauli channels.
    """
    if n_grid < 6:
        raise ValidationError("n_grid must be at least 6")
    rhos = _pure_qubit_states(bloch_grid(n_grid))
    out1 = _outputs(prob.channel1, rhos, linalg.PAULI_BASIS)
    out2 = _outputs(prob.channel2, rhos, linalg.PAULI_BASIS)
    return float(np.min(helstrom_error(out1, out2, prob.p1)))


def random_two_qubit_states(n_samples, rng, product_only=False):
    """Approximately Haar-random pure two-qubit vectors, shape ``(n, 4)``."""
    if product_only:
        a = rng.normal(size=(n_samples, 2)) + 1j * rng.normal(size=(n_samples, 2))
        b = rng.normal(size=(n_samples, 2)) + 1j * rng.normal(size=(n_samples, 2))
        psi = np.einsum("ni,nj->nij", a, b).reshape(n_samples, 4)
    else:
        psi = rng.normal(size=(n_samples, 4)) + 1j * rng.normal(size=(n_samples, 4))
    return psi / np.linalg.norm(psi, axis=1, keepdims=True)


def error_entangled_bruteforce(prob, n_samples=2000, seed=0, product_only=False):
    """Best Helstrom error over random two-qubit probes plus ``|beta>``.

    This is an upper bound on the true two-qubit optimum. With
    ``product_only`` the probes are random product states and ``|beta>`` is
    left out, which can never beat the single-qubit optimum.
    """
    if n_samples < 1:
        raise ValidationError("n_samples must be at least 1")
    rng = np.random.default_rng(seed)
    psi = random_two_qubit_states(n_samples, rng, product_only)
    if not product_only:
        psi = np.concatenate([psi, BETA[None, :]])
    rhos = np.einsum("ni,nj->nij", psi, psi.conj())
    out1 = _outputs(prob.channel1, rhos, _SIGMA_EXT)
    out2 = _outputs(prob.channel2, rhos, _SIGMA_EXT)
    return float(np.min(helstrom_error(out1, out2, prob.p1)))


def discriminate(prob):
    """Both strategies side by side.

    When entanglement helps, the error gap is at least ``min |r[a]|``. The
    sign test and the 1e-12 gap threshold can therefore only disagree inside
    the boundary band ``|prod r| < 1e-15`` or ``min |r[a]| <= 2e-12`` (1e-12 plus roundoff margin). There
    the verdict comes from the computed gap and the report is flagged
    ``boundary``.

    Raises:
        ConsistencyError: if, outside the boundary band, the sign test on ``r``
            and the computed error gap disagree about whether entanglement
            helps, or if the entangled error exceeds the unentangled one.
    """
    rv = r_vector(prob)
    err_u, axis = error_unentangled(prob)
    err_e = error_entangled(prob)
    improvement = err_u - err_e
    boundary = (abs(rv.product) < PRODUCT_TOL
                or min(abs(x) for x in rv.r) <= BOUNDARY_R_TOL)
    gap_helps = improvement > IMPROVEMENT_TOL
    if improvement < -IMPROVEMENT_TOL or (
            not boundary and (rv.product < -PRODUCT_TOL) != gap_helps):
        raise ConsistencyError(
            f"r product {rv.product!r} disagrees with error gap {improvement!r} "
            f"for {prob!r}")
    return DiscriminationReport(
        r=rv,
        err_unentangled=err_u,
        optimal_bloch_axis=axis,
        err_entangled=err_e,
        entanglement_helps=gap_helps,
        improvement=improvement,
        boundary=boundary,
    )


def _check_depolarizing_args(q1, q2, p=None):
    for name, v in (("q1", q1), ("q2", q2), ("p", p)):
        if v is not None and not 0.0 <= v <= 1.0:
            raise ValidationError(f"{name} must lie in [0, 1], got {v}")
    if abs(q1 - q2) < DEGENERATE_Q_TOL:
        raise ValidationError("the two depolarizing channels must differ (q1 != q2)")


def depolarizing_quadratic(p, q1, q2):
    """``A p^2 + B p + C``; negative exactly where entanglement helps."""
    a = (q1 + q2) * (2 - q1 - q2)
    b = -(q1 - 2 * q1 * q2 + 3 * q2 - 2 * q2 * q2)
    c = q2 * (1 - q2)
    return a * p * p + b * p + c


def depolarizing_improvement_condition(p, q1, q2):
    _check_depolarizing_args(q1, q2, p)
    return depolarizing_quadratic(p, q1, q2) < -PRODUCT_TOL


def depolarizing_region(q1, q2):
    """Priors ``p`` for which entanglement helps, for two depolarizing channels."""
    _check_depolarizing_args(q1, q2)
    a = (1 - q2) / (2 - q1 - q2)
    b = q2 / (q1 + q2)
    lower, upper = (a, b) if q1 < q2 else (b, a)
    return PriorInterval(lower, upper, empty=upper - lower <= DEGENERATE_Q_TOL)


def region_sweep(q2, q1_min, q1_max, n_points):
    """Rows ``(q1, lower, upper)`` over an even ``q1`` grid.

    Grid points within 1e-9 of ``q2`` are skipped with a logged warning, and
    repeated grid values (``q1_min == q1_max``) collapse to a single row.
    """
    if n_points < 2:
        raise ValidationError("n_points must be at least 2")
    rows = []
    for q1 in np.unique(np.linspace(q1_min, q1_max, n_points)):
        q1 = float(q1)
        if abs(q1 - q2) < SWEEP_SKIP_TOL:
            log.warning("skipping q1=%.15g: coincides with q2", q1)
            continue
        iv = depolarizing_region(q1, q2)
        if iv.empty:
            log.warning("skipping q1=%.15g: empty prior interval", q1)
            continue
        rows.append((q1, iv.lower, iv.upper))
    return rows


def random_problems(n, seed):
    """``n`` problems with uniform priors and channels uniform on the simplex."""
    rng = np.random.default_rng(seed)
    p1 = rng.uniform(size=n)
    q = rng.dirichlet(np.ones(4), size=(n, 2))
    return [DiscriminationProblem(PauliChannel(tuple(a)), PauliChannel(tuple(b)), p)
            for p, (a, b) in zip(p1, q)]
