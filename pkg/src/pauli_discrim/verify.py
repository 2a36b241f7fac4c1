"""Seeded property checks backing ``pauli-discrim verify``.

Each check returns a :class:`PropertyResult` with the worst deviation seen and
up to five counterexamples described verbatim.
"""

from dataclasses import dataclass, field

import numpy as np

from . import channels as ch
from . import discrimination as dc
from . import linalg as la

MAX_COUNTEREXAMPLES = 5
ENTANGLED_STATES = 2000


@dataclass
class PropertyResult:
    name: str
    passed: bool = True
    worst: float = 0.0
    counterexamples: list = field(default_factory=list)
    note: str = ""

    def record(self, deviation, ok, example):
        self.worst = max(self.worst, float(deviation))
        if not ok:
            self.passed = False
            if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
                self.counterexamples.append(example)


def random_hermitian(rng, n, size=None):
    shape = (n, n) if size is None else (size, n, n)
    x = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    return 0.5 * (x + la.dagger(x))


def random_density(rng, n, size=None):
    shape = (n, n) if size is None else (size, n, n)
    x = rng.normal(size=shape) + 1j * rng.normal(size=shape)
    rho = x @ la.dagger(x)
    return rho / la.trace(rho)[..., None, None]


def check_kron(rng, n):
    res = PropertyResult("linalg: kron associative, trace multiplicative")
    for _ in range(n):
        a, b, c = (random_hermitian(rng, 2) for _ in range(3))
        dev_assoc = np.abs(la.kron(la.kron(a, b), c) - la.kron(a, la.kron(b, c))).max()
        dev_tr = abs(la.trace(la.kron(a, b)) - la.trace(a) * la.trace(b))
        dev = max(dev_assoc, dev_tr)
        res.record(dev, dev <= 1e-12, f"a={a.tolist()} b={b.tolist()} c={c.tolist()}")
    return res


def check_eigenvalues(rng, n):
    res = PropertyResult("linalg: eigenvalue sum = trace, Pauli-conjugation invariant")
    mats = random_hermitian(rng, 4, n)
    eig = la.hermitian_eigenvalues(mats)
    dev_tr = np.abs(eig.sum(axis=-1) - la.trace(mats).real)
    for i in np.flatnonzero(dev_tr > 1e-12)[:MAX_COUNTEREXAMPLES]:
        res.record(dev_tr[i], False, f"trace mismatch for {mats[i].tolist()}")
    res.worst = max(res.worst, float(dev_tr.max()))
    for a in range(4):
        for b in range(4):
            u = la.kron(la.PAULI_BASIS[a], la.PAULI_BASIS[b])
            conj = la.hermitian_eigenvalues(u @ mats @ la.dagger(u))
            dev = np.abs(conj - eig).max(axis=-1)
            for i in np.flatnonzero(dev > 1e-10)[:MAX_COUNTEREXAMPLES]:
                res.record(dev[i], False, f"sigma_{a}(x)sigma_{b} on {mats[i].tolist()}")
            res.worst = max(res.worst, float(dev.max()))
    return res


def check_trace_norm(rng, n):
    res = PropertyResult("linalg: trace_norm >= |trace|, equality on PSD")
    herm = random_hermitian(rng, 4, n)
    gap = np.abs(la.trace(herm)) - la.trace_norm(herm)
    for i in np.flatnonzero(gap > 1e-12)[:MAX_COUNTEREXAMPLES]:
        res.record(gap[i], False, f"{herm[i].tolist()}")
    psd = random_density(rng, 4, n) * rng.uniform(0.1, 3.0, size=(n, 1, 1))
    dev = np.abs(la.trace_norm(psd) - la.trace(psd).real)
    for i in np.flatnonzero(dev > 1e-12)[:MAX_COUNTEREXAMPLES]:
        res.record(dev[i], False, f"PSD {psd[i].tolist()}")
    res.worst = max(res.worst, float(max(gap.max(), 0.0)), float(dev.max()))
    return res


def check_partial_transpose(rng, n):
    res = PropertyResult("linalg: partial transpose keeps trace and Hermiticity")
    mats = random_hermitian(rng, 4, n)
    pt = la.partial_transpose(mats)
    dev = np.maximum(np.abs(la.trace(pt) - la.trace(mats)), la.hermitian_deviation(pt))
    inv = np.abs(la.partial_transpose(pt) - mats).max(axis=(-2, -1))
    dev = np.maximum(dev, inv)
    for i in np.flatnonzero(dev > 0.0)[:MAX_COUNTEREXAMPLES]:
        res.record(dev[i], False, f"{mats[i].tolist()}")
    res.worst = float(dev.max())
    return res


def _random_channel(rng):
    return ch.PauliChannel(tuple(rng.dirichlet(np.ones(4))))


def check_channel_outputs(rng, n):
    res = PropertyResult("channels: outputs are density matrices")
    for _ in range(n):
        c = _random_channel(rng)
        rho, gamma = random_density(rng, 2), random_density(rng, 4)
        for out in (ch.apply(c, rho), ch.apply_extended(c, gamma)):
            dev_tr = abs(la.trace(out) - 1.0)
            min_eig = la.hermitian_eigenvalues(out)[0]
            ok = dev_tr <= 1e-12 and min_eig >= -1e-10
            res.record(dev_tr, ok, f"q={c.q} min_eig={min_eig!r}")
    return res


def check_choi_bell_diagonal(rng, n):
    res = PropertyResult("channels: Choi state Bell-diagonal with spectrum q")
    bell = np.array(ch.BELL_BASIS)
    for _ in range(n):
        c = _random_channel(rng)
        m = bell.conj() @ ch.choi(c) @ bell.T
        dev = np.abs(m - np.diag(c.q)).max()
        res.record(dev, dev <= 1e-12, f"q={c.q}")
    return res


def depolarizing_pt_minimum(q):
    """Smallest eigenvalue of the partially transposed depolarizing Choi state.

    The spectrum is ``(1 + 2q)/6`` (three times) and ``(1 - 2q)/2``; the
    second is the minimum only for ``q >= 1/4``.
    """
    return min((1 - 2 * q) / 2, (1 + 2 * q) / 6)


def check_depolarizing_eb():
    res = PropertyResult("channels: depolarizing PT minimum analytic, EB iff q <= 1/2")
    for q in np.linspace(0.0, 1.0, 101):
        q = float(q)
        rep = ch.is_entanglement_breaking(ch.depolarizing(q))
        dev = abs(rep.min_pt_eigenvalue - depolarizing_pt_minimum(q))
        ok = dev <= 1e-12 and rep.is_entanglement_breaking == (q <= 0.5 + 1e-10)
        res.record(dev, ok, f"q={q!r} report={rep}")
    return res


def check_factorization(rng, n):
    res = PropertyResult("channels: (E x I)(rho x tau) = E(rho) x tau")
    for _ in range(n):
        c = _random_channel(rng)
        rho, tau = random_density(rng, 2), random_density(rng, 2)
        lhs = ch.apply_extended(c, la.kron(rho, tau))
        rhs = la.kron(ch.apply(c, rho), tau)
        dev = np.abs(lhs - rhs).max()
        res.record(dev, dev <= 1e-12, f"q={c.q} rho={rho.tolist()} tau={tau.tolist()}")
    return res


def check_equivalence(problems):
    res = PropertyResult("discrimination: prod r < 0 iff strict error improvement")
    skipped = 0
    for prob in problems:
        prod = dc.r_vector(prob).product
        if abs(prod) < dc.PRODUCT_TOL:
            skipped += 1
            continue
        gap = dc.error_unentangled(prob)[0] - dc.error_entangled(prob)
        ok = (prod < 0) == (gap > dc.IMPROVEMENT_TOL)
        res.record(0.0 if ok else abs(gap), ok, f"{prob!r} prod={prod!r} gap={gap!r}")
    res.note = f"{skipped} boundary samples excluded (|prod r| < 1e-15)"
    return res


def check_errors_ordering_range(problems):
    res = PropertyResult("discrimination: 0 <= err_ent <= err_unent <= 1/2")
    for prob in problems:
        eu = dc.error_unentangled(prob)[0]
        ee = dc.error_entangled(prob)
        dev = max(ee - eu, -ee, eu - 0.5, 0.0)
        res.record(dev, dev <= 1e-12, f"{prob!r} err_unent={eu!r} err_ent={ee!r}")
    same = dc.DiscriminationProblem(ch.depolarizing(0.3), ch.depolarizing(0.3), 0.5)
    dev = max(abs(dc.error_entangled(same) - 0.5), abs(dc.error_unentangled(same)[0] - 0.5))
    res.record(dev, dev <= 1e-12, f"r = 0 case {same!r}")
    return res


def check_symmetry(problems):
    res = PropertyResult("discrimination: swapping channels and priors is invariant")
    for prob in problems:
        sw = prob.swapped()
        dev = max(abs(dc.error_unentangled(prob)[0] - dc.error_unentangled(sw)[0]),
                  abs(dc.error_entangled(prob) - dc.error_entangled(sw)))
        res.record(dev, dev <= 1e-12, f"{prob!r}")
    return res


def check_bloch_oracle(problems, n_grid):
    res = PropertyResult(f"discrimination: closed form = Bloch grid search (grid {n_grid})")
    for prob in problems:
        dev = abs(dc.error_unentangled(prob)[0] - dc.error_unentangled_bruteforce(prob, n_grid))
        res.record(dev, dev <= 1e-12, f"{prob!r}")
    return res


def check_entangled_oracle(problems, seed):
    res = PropertyResult("discrimination: entangled error <= two-qubit random search")
    for i, prob in enumerate(problems):
        ee = dc.error_entangled(prob)
        bf = dc.error_entangled_bruteforce(prob, ENTANGLED_STATES, seed=(seed, i))
        res.record(max(ee - bf, 0.0), bf >= ee - 1e-12, f"{prob!r} seed=({seed}, {i})")
    return res


def check_bell_identity(problems):
    res = PropertyResult("discrimination: ||p1 C1 - p2 C2||_1 = sum |r|")
    for prob in problems:
        diff = prob.p1 * ch.choi(prob.channel1) - prob.p2 * ch.choi(prob.channel2)
        dev = abs(float(la.trace_norm(diff)) - dc.r_vector(prob).l1)
        res.record(dev, dev <= 1e-12, f"{prob!r}")
    return res


def fig1_q1_grid():
    """99 points in (0, 1/2]; none of them equals 1/4."""
    return np.arange(1, 100) * (0.5 / 99)


def check_region_consistency(q2=0.25):
    res = PropertyResult("discrimination: region = quadratic sign = r sign test (q2 = 1/4)")
    ps = np.linspace(0.0, 1.0, 101)
    for q1 in fig1_q1_grid():
        q1 = float(q1)
        iv = dc.depolarizing_region(q1, q2)
        for p in ps:
            p = float(p)
            a = p in iv
            b = dc.depolarizing_improvement_condition(p, q1, q2)
            c = dc.entanglement_helps(dc.depolarizing_problem(p, q1, q2))
            near = min(abs(p - iv.lower), abs(p - iv.upper)) < 1e-9
            ok = near or a == b == c
            res.record(0.0, ok, f"p={p!r} q1={q1!r} region={a} quadratic={b} r={c}")
    return res


def check_region_rows(q2=0.25):
    res = PropertyResult("cli: region rows increasing, finite, 0 <= lower < upper <= 1")
    rows = dc.region_sweep(q2, 0.0, 0.5, 200)
    prev = -np.inf
    for q1, lo, hi in rows:
        ok = q1 > prev and np.isfinite([q1, lo, hi]).all() and 0.0 <= lo < hi <= 1.0
        res.record(0.0, bool(ok), f"row ({q1!r}, {lo!r}, {hi!r})")
        prev = q1
    return res


def run_all(samples=10000, seed=42, grid=24):
    """Run every property; ``samples`` sets the random workload."""
    rngs = np.random.default_rng(seed).spawn(8)
    small = max(1, min(samples, 1000))
    problems = dc.random_problems(samples, seed)
    return [
        check_kron(rngs[0], small),
        check_eigenvalues(rngs[1], small),
        check_trace_norm(rngs[2], small),
        check_partial_transpose(rngs[3], small),
        check_channel_outputs(rngs[4], max(1, small // 10)),
        check_choi_bell_diagonal(rngs[5], small),
        check_depolarizing_eb(),
        check_factorization(rngs[6], max(1, small // 10)),
        check_equivalence(problems),
        check_errors_ordering_range(problems),
        check_symmetry(problems[:small]),
        check_bloch_oracle(problems[: max(1, samples // 10)], grid),
        check_entangled_oracle(problems[: max(1, samples // 100)], seed),
        check_bell_identity(problems[:small]),
        check_region_consistency(),
        check_region_rows(),
    ]
