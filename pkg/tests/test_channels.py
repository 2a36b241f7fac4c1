import numpy as np
import pytest

from pauli_discrim import channels as ch
from pauli_discrim import linalg as la
from pauli_discrim.errors import DimensionError, ValidationError


def random_density(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = x @ x.conj().T
    return rho / np.trace(rho)


def random_channel(rng):
    return ch.PauliChannel(tuple(rng.dirichlet(np.ones(4))))


def bloch(rho):
    return np.array([np.trace(rho @ s).real for s in la.PAULI_BASIS[1:]])


def test_make_pauli_channel():
    assert ch.make_pauli_channel((1, 0, 0, 0)).q == (1.0, 0.0, 0.0, 0.0)
    assert ch.make_pauli_channel([0.25] * 4).q == (0.25,) * 4
    np.testing.assert_allclose(ch.make_pauli_channel((0.5, 1 / 6, 1 / 6, 1 / 6)).q,
                               ch.depolarizing(0.5).q, atol=1e-16)


def test_channel_clamps_and_renormalizes():
    c = ch.PauliChannel((1 + 5e-10, -5e-13, 0.0, 0.0))
    assert c.q[1] == 0.0
    assert sum(c.q) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("q", [
    (1.0, -1e-6, 0.0, 0.0),
    (0.5, 0.5, 0.5, 0.0),
    (0.3, 0.3, 0.3),
    (np.nan, 0.5, 0.5, 0.0),
])
def test_channel_rejects(q):
    with pytest.raises(ValidationError):
        ch.PauliChannel(q)


@pytest.mark.parametrize("q, expected", [
    (1.0, (1.0, 0.0, 0.0, 0.0)),
    (0.25, (0.25,) * 4),
    (0.5, (0.5, 1 / 6, 1 / 6, 1 / 6)),
])
def test_depolarizing(q, expected):
    np.testing.assert_allclose(ch.depolarizing(q).q, expected, atol=1e-16)


@pytest.mark.parametrize("q", [-0.1, 1.1])
def test_depolarizing_range(q):
    with pytest.raises(ValidationError):
        ch.depolarizing(q)


def test_apply_examples(rng):
    rho = random_density(rng, 2)
    np.testing.assert_allclose(ch.apply(ch.depolarizing(1.0), rho), rho, atol=1e-15)
    np.testing.assert_allclose(ch.apply(ch.depolarizing(0.25), rho), np.eye(2) / 2, atol=1e-15)
    ket0 = np.diag([1.0, 0.0])
    np.testing.assert_allclose(ch.apply(ch.depolarizing(0.5), ket0), np.diag([2 / 3, 1 / 3]),
                               atol=1e-15)


def test_apply_scales_bloch_vector(rng):
    # conjugation by sigma_a flips the Bloch components orthogonal to axis a
    for _ in range(20):
        c, rho = random_channel(rng), random_density(rng, 2)
        q0, q1, q2, q3 = c.q
        shrink = np.array([q0 + q1 - q2 - q3, q0 + q2 - q1 - q3, q0 + q3 - q1 - q2])
        np.testing.assert_allclose(bloch(ch.apply(c, rho)), shrink * bloch(rho), atol=1e-14)


def test_apply_dimension_checks(rng):
    with pytest.raises(DimensionError):
        ch.apply(ch.depolarizing(0.5), np.eye(4) / 4)
    with pytest.raises(DimensionError):
        ch.apply_extended(ch.depolarizing(0.5), np.eye(2) / 2)
    with pytest.raises(ValidationError):
        ch.apply(ch.depolarizing(0.5), np.eye(2))


def test_apply_extended_examples(rng, bell_projector):
    gamma = random_density(rng, 4)
    np.testing.assert_allclose(ch.apply_extended(ch.depolarizing(1.0), gamma), gamma, atol=1e-15)
    q = 0.7
    expected = sum(w * np.outer(b, b.conj())
                   for w, b in zip((q, (1 - q) / 3, (1 - q) / 3, (1 - q) / 3), ch.BELL_BASIS))
    np.testing.assert_allclose(ch.apply_extended(ch.depolarizing(q), bell_projector), expected,
                               atol=1e-15)


def test_apply_extended_factorizes(rng):
    for _ in range(50):
        c = random_channel(rng)
        rho, tau = random_density(rng, 2), random_density(rng, 2)
        np.testing.assert_allclose(ch.apply_extended(c, np.kron(rho, tau)),
                                   np.kron(ch.apply(c, rho), tau), atol=1e-12)


def test_outputs_are_states(rng):
    for _ in range(50):
        c = random_channel(rng)
        for out in (ch.apply(c, random_density(rng, 2)),
                    ch.apply_extended(c, random_density(rng, 4))):
            ch.validate_density_matrix(out)


def test_bell_basis_orthonormal_and_complete():
    b = np.array(ch.BELL_BASIS)
    np.testing.assert_allclose(b.conj() @ b.T, np.eye(4), atol=1e-15)
    np.testing.assert_allclose(sum(np.outer(v, v.conj()) for v in b), np.eye(4), atol=1e-15)


def test_choi_examples(bell_projector):
    np.testing.assert_allclose(ch.choi(ch.depolarizing(1.0)), bell_projector, atol=1e-15)
    np.testing.assert_allclose(ch.choi(ch.depolarizing(0.25)), np.eye(4) / 4, atol=1e-15)
    werner = ch.choi(ch.depolarizing(0.5))
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(werner)), [1 / 6, 1 / 6, 1 / 6, 0.5],
                               atol=1e-15)
    ch.validate_density_matrix(werner, dim=4)


def test_choi_bell_diagonal(rng):
    b = np.array(ch.BELL_BASIS)
    for _ in range(100):
        c = random_channel(rng)
        np.testing.assert_allclose(b.conj() @ ch.choi(c) @ b.T, np.diag(c.q), atol=1e-12)
        np.testing.assert_allclose(ch.choi(c), ch.bell_diagonal(c), atol=1e-15)


@pytest.mark.parametrize("q, eb, lam", [
    (0.25, True, 0.25),
    (0.5, True, 0.0),
    (1.0, False, -0.5),
])
def test_is_entanglement_breaking_examples(q, eb, lam):
    rep = ch.is_entanglement_breaking(ch.depolarizing(q))
    assert rep.is_entanglement_breaking is eb
    assert rep.min_pt_eigenvalue == pytest.approx(lam, abs=1e-12)


def test_depolarizing_pt_spectrum():
    # independent of the Jacobi solver: LAPACK on the partially transposed Werner state
    for q in np.linspace(0.0, 1.0, 101):
        pt = la.partial_transpose(ch.choi(ch.depolarizing(q)))
        np.testing.assert_allclose(np.linalg.eigvalsh(pt),
                                   np.sort([(1 + 2 * q) / 6] * 3 + [(1 - 2 * q) / 2]),
                                   atol=1e-12)
        rep = ch.is_entanglement_breaking(ch.depolarizing(q))
        assert rep.min_pt_eigenvalue == pytest.approx(min((1 - 2 * q) / 2, (1 + 2 * q) / 6),
                                                      abs=1e-12)
        assert rep.is_entanglement_breaking == (q <= 0.5 + 1e-10)


def test_eb_report_consistent(rng):
    for _ in range(200):
        rep = ch.is_entanglement_breaking(random_channel(rng))
        assert rep.is_entanglement_breaking == (rep.min_pt_eigenvalue >= -1e-10)


def test_pauli_channel_eb_iff_max_weight_at_most_half(rng):
    # a Bell-diagonal two-qubit state is separable iff no weight exceeds 1/2
    for _ in range(300):
        c = random_channel(rng)
        if abs(max(c.q) - 0.5) < 1e-9:
            continue
        assert ch.is_entanglement_breaking(c).is_entanglement_breaking == (max(c.q) <= 0.5)
