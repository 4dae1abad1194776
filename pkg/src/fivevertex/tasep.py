"""Exact relaxation dynamics of the periodic TASEP.

Particles hop right at unit rate on a ring of M sites; the generator is the
alpha = 1 five-vertex Hamiltonian, and the master equation d|phi>/dt = H|phi>
is solved exactly through the Bethe ansatz (expectation values evolve under
the same generator).  In the z-variables z = 1 - u^{-2} the Bethe equations read

    z_k^{-M} (1 - z_k)^N = (-1)^(N-1) prod_j (1 - z_j),

every solution set has energy H(z) = -N + sum_j 1/z_j, and the Green
function is a sum over solution sets of Grothendieck-polynomial weights,

    G_t(x'|x) = sum_z  G_mu(z;-1) Gbar_lam(1/z;-1)
                / [ sum_gamma G_gamma(z;-1) Gbar_gamma(1/z;-1) ]  e^{H(z) t},

with the denominator evaluated through the Cauchy-identity determinant at
y = 1/z.  The stationary solution (all roots at 1) contributes the analytic
1/binomial(M,N).

The solver follows the self-consistency strategy: for a trial value of
Y = prod (1+beta z_j), the single-root equation is a degree-M polynomial
whose companion-matrix roots are computed numerically; each N-subset of
roots is iterated to a fixed point of Y with damping and
continuity-tracked root matching, deduplicated, Newton-polished, and
validated against the per-root residual target.  ``beta`` generalizes the
equations to (1+beta z_k)^N = (-1)^(N-1) z_k^M prod(1+beta z_j), as needed
by the orthogonality relation (beta = -1 is the TASEP point).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np
from scipy.linalg import expm
from scipy.optimize import linear_sum_assignment

from ._threads import parallel_map
from .identities import cauchy_rhs
from .partitions import ParticleConfiguration, config_to_partition, enumerate_box, partition_to_config
from .linalg import Matrix, det
from .sector import basis_index, hamiltonian, sector_basis
from .symfunc import dual_grothendieck_eval, grothendieck_eval
from .vertex import ModelParameters

__all__ = [
    "BetheSolution",
    "GreenQuery",
    "SectorState",
    "bethe_solve",
    "green_function",
    "sum_rule_check",
    "expectation",
    "form_factor_sum",
    "master_oracle",
    "sector_generator",
    "density_terms",
    "current_terms",
    "expectation_via_form_factors",
]

RESIDUAL_TOL = 1e-10
DEDUP_TOL = 1e-9
Y_TOL = 1e-13
MAX_ITER = 500


@dataclass(frozen=True)
class BetheSolution:
    """One solution set of the Bethe equations in the z-variables."""

    roots: tuple
    Y: complex
    energy: complex
    residuals: tuple
    choice_id: tuple
    stationary: bool = False

    @property
    def max_residual(self) -> float:
        return max(self.residuals) if self.residuals else 0.0


@dataclass(frozen=True)
class GreenQuery:
    """Transition probability query: initial and final configurations, time t."""

    initial: ParticleConfiguration
    final: ParticleConfiguration
    t: float

    def __post_init__(self):
        if self.initial.ring_size != self.final.ring_size \
                or len(self.initial) != len(self.final):
            raise ValueError("initial and final configurations must share M and N")
        if self.t < 0:
            raise ValueError("time must be nonnegative")


@dataclass
class SectorState:
    """Dense amplitude vector over the N-particle configuration basis."""

    amplitudes: np.ndarray
    M: int
    n: int
    basis: tuple = field(default=None)

    def __post_init__(self):
        if self.basis is None:
            self.basis = sector_basis(self.M, self.n)

    def __getitem__(self, config):
        pos = config.positions if isinstance(config, ParticleConfiguration) else tuple(config)
        return self.amplitudes[self.basis.index(pos)]


def _bethe_poly_roots(M, N, beta, Y):
    """Companion-matrix roots of (1 + beta z)^N - (-1)^(N-1) Y z^M."""
    c = np.zeros(M + 1, dtype=complex)
    for k in range(N + 1):
        c[k] += comb(N, k) * beta ** k
    c[M] -= (-1) ** (N - 1) * Y
    return list(np.roots(c[::-1]))


def _canonical(roots):
    return tuple(sorted(roots, key=lambda z: (round(z.real, 10), round(z.imag, 10))))


def _match(chosen, new_roots):
    cost = np.array([[abs(c - r) for r in new_roots] for c in chosen])
    _, cols = linear_sum_assignment(cost)
    return [new_roots[c] for c in cols]


def _newton_polish(z, M, N, beta, iters=40):
    z = np.array(z, dtype=complex)
    sgn = (-1) ** (N - 1)
    for _ in range(iters):
        prod_factors = 1 + beta * z
        Y = np.prod(prod_factors)
        f_val = prod_factors ** N - sgn * z ** M * Y
        if np.max(np.abs(f_val)) < 1e-15:
            break
        jac = np.diag(N * beta * prod_factors ** (N - 1) - sgn * M * z ** (M - 1) * Y)
        for l in range(N):
            partial = beta * np.prod([prod_factors[j] for j in range(N) if j != l])
            jac[:, l] -= sgn * z ** M * partial
        try:
            z = z - np.linalg.solve(jac, f_val)
        except np.linalg.LinAlgError:
            break
    return z


def _residuals(z, M, N, beta):
    """Per-root residuals of z^-M (1+beta z)^N - (-1)^(N-1) prod(1+beta z)."""
    z = np.asarray(z, dtype=complex)
    Y = np.prod(1 + beta * z)
    return tuple(np.abs(z ** (-M) * (1 + beta * z) ** N - (-1) ** (N - 1) * Y))


def _energy(z, beta):
    """-N + alpha sum 1/z_j with alpha = -1/beta (logarithmic transfer derivative)."""
    alpha = -1 / beta
    return complex(-len(z) + alpha * sum(1 / zj for zj in z))


def bethe_solve(M: int, N: int, beta=-1.0):
    """All binomial(M,N) solution sets of the z-form Bethe equations.

    For beta = -1 the stationary set (all roots at 1, Y = 0) is inserted
    analytically; subsets whose self-consistency flow collapses onto it are
    discarded.  Convergence or completeness failures raise with a
    diagnostic.
    """
    if not 1 <= N <= M - 1:
        raise ValueError("need 1 <= N <= M-1 (N = M is the frozen ring)")
    beta = complex(beta)
    expected = comb(M, N)
    if expected > comb(12, 6):
        raise ValueError(
            f"{expected} root-choice subsets exceed the desk-scale cap of {comb(12, 6)}")
    if abs(beta) < 1e-15:
        # roots of 1 + (-1)^N z^M: all N-subsets solve the equations with Y = 1
        roots = _canonical(_bethe_poly_roots(M, N, beta, 1.0))
        sols = []
        for subset in combinations(range(M), N):
            z = tuple(roots[i] for i in subset)
            sols.append(BetheSolution(z, 1.0 + 0j, None, _residuals(z, M, N, beta), subset))
        return sols
    is_tasep = abs(beta + 1) < 1e-15
    frozen_point = -1 / beta

    def flow(subset):
        y_cur = 1.0 + 0j
        chosen = [_canonical(_bethe_poly_roots(M, N, beta, y_cur))[i] for i in subset]
        for _ in range(MAX_ITER):
            y_new = np.prod([1 + beta * z for z in chosen])
            if abs(y_new) < 1e-11:
                return ("stationary", subset, None)
            if abs(y_new - y_cur) <= Y_TOL:
                return ("converged", subset, chosen)
            y_cur = 0.5 * y_cur + 0.5 * y_new
            chosen = _match(chosen, _bethe_poly_roots(M, N, beta, y_cur))
        if abs(y_new) < 1e-3 and all(abs(z - frozen_point) < 0.05 for z in chosen):
            return ("stationary", subset, None)
        return ("failed", subset, chosen)

    results = parallel_map(flow, combinations(range(M), N))
    solutions = []
    failures = []
    for status, subset, chosen in results:
        if status == "failed":
            failures.append(subset)
            continue
        if status == "stationary":
            continue
        z = _canonical(_newton_polish(chosen, M, N, beta))
        res = _residuals(z, M, N, beta)
        if max(res) > RESIDUAL_TOL:
            failures.append(subset)
            continue
        for j in range(N):
            for k in range(j + 1, N):
                if abs(z[j] - z[k]) <= DEDUP_TOL:
                    raise RuntimeError(
                        f"coincident roots in a non-stationary solution (choice {subset})")
        if any(max(abs(a - b) for a, b in zip(z, s.roots)) <= DEDUP_TOL for s in solutions):
            continue
        solutions.append(BetheSolution(z, complex(np.prod(1 + beta * np.array(z))),
                                       _energy(z, beta), res, subset))
    if is_tasep:
        solutions.append(BetheSolution((1.0 + 0j,) * N, 0j, 0j, (0.0,) * N,
                                       None, stationary=True))
    if failures and len(solutions) != expected:
        raise RuntimeError(
            f"fixed-point iteration failed for choices {failures[:5]} "
            f"({len(solutions)} of {expected} solution sets found)")
    if len(solutions) != expected:
        raise RuntimeError(
            f"completeness failure: {len(solutions)} of {expected} solution sets found")
    return solutions


def _spectral_terms(solutions, lam, M, N):
    """Pairs (coefficient(lam), energy) with the Cauchy-normalized denominators.

    coefficient = Gbar_lam(1/z; -1) / sum_gamma G Gbar for proper solutions;
    the stationary solution is marked by energy 0 and coefficient None.
    """
    terms = []
    for sol in solutions:
        if sol.stationary:
            terms.append((None, 0j))
            continue
        z = list(sol.roots)
        z_inv = [1 / zj for zj in z]
        denom = cauchy_rhs(M, N, z, z_inv, -1.0)
        gbar = dual_grothendieck_eval(lam, z_inv, -1.0)
        terms.append(((gbar / denom, z), sol.energy))
    return terms


def green_function(query: GreenQuery, solutions=None) -> float:
    """Transition probability G_t(x'|x) through the Grothendieck form."""
    M = query.initial.ring_size
    N = len(query.initial)
    if solutions is None:
        solutions = bethe_solve(M, N)
    if len(solutions) != comb(M, N):
        raise RuntimeError("incomplete Bethe solution set")
    lam = config_to_partition(query.initial)
    mu = config_to_partition(query.final)
    total = 0j
    for coeff, energy in _spectral_terms(solutions, lam, M, N):
        if coeff is None:
            total += 1 / comb(M, N)
            continue
        weight, z = coeff
        total += grothendieck_eval(mu, z, -1.0) * weight * np.exp(energy * query.t)
    if abs(total.imag) > 1e-7:
        raise RuntimeError(f"Green function came out non-real: {total}")
    return float(total.real)


def green_function_table(M: int, N: int, t: float, solutions=None) -> np.ndarray:
    """Matrix of G_t(x'|x) over the configuration basis (rows x', columns x).

    Same spectral data as ``green_function``, assembled once per solution
    set; used for all-pairs sweeps against the master-equation oracle.
    """
    if solutions is None:
        solutions = bethe_solve(M, N)
    dim = comb(M, N)
    index = basis_index(M, N)
    box = list(enumerate_box(M - N, N))
    config_idx = [index[partition_to_config(lam, M).positions] for lam in box]
    out = np.zeros((dim, dim), dtype=complex)
    for sol in solutions:
        if sol.stationary:
            out += 1 / dim
            continue
        z = list(sol.roots)
        z_inv = [1 / zj for zj in z]
        denom = cauchy_rhs(M, N, z, z_inv, -1.0)
        g_vec = np.zeros(dim, dtype=complex)
        gb_vec = np.zeros(dim, dtype=complex)
        for lam, idx in zip(box, config_idx):
            g_vec[idx] = grothendieck_eval(lam, z, -1.0)
            gb_vec[idx] = dual_grothendieck_eval(lam, z_inv, -1.0)
        out += np.exp(sol.energy * t) * np.outer(g_vec, gb_vec) / denom
    if np.max(np.abs(out.imag)) > 1e-7:
        raise RuntimeError("Green-function table came out non-real")
    return out.real


def sum_rule_check(x: ParticleConfiguration, t: float, solutions=None) -> float:
    """sum over final configurations of G_t(x'|x); expected 1."""
    M, N = x.ring_size, len(x)
    if solutions is None:
        solutions = bethe_solve(M, N)
    lam = config_to_partition(x)
    total = 0j
    for coeff, energy in _spectral_terms(solutions, lam, M, N):
        if coeff is None:
            total += 1
            continue
        weight, z = coeff
        total += form_factor_sum(1, 0, z, M) * weight * np.exp(energy * t)
    return float(total.real)


def expectation(observable, x: ParticleConfiguration, t: float, solutions=None):
    """<S_N| A e^{Ht} |x> for an observable given on the configuration basis.

    ``observable`` is a matrix over the sector basis (rows = bra, columns =
    ket, both in ``sector_basis`` order).
    """
    M, N = x.ring_size, len(x)
    a_mat = np.asarray(observable, dtype=complex)
    dim = comb(M, N)
    if a_mat.shape != (dim, dim):
        raise ValueError(f"observable must be {dim} x {dim} on the configuration basis")
    if solutions is None:
        solutions = bethe_solve(M, N)
    lam = config_to_partition(x)
    col_sums = a_mat.sum(axis=0)
    index = basis_index(M, N)
    total = 0j
    for coeff, energy in _spectral_terms(solutions, lam, M, N):
        if coeff is None:
            total += a_mat.sum() / comb(M, N)
            continue
        weight, z = coeff
        num = 0j
        for mu in enumerate_box(M - N, N):
            pos = partition_to_config(mu, M).positions
            num += col_sums[index[pos]] * grothendieck_eval(mu, z, -1.0)
        total += num * weight * np.exp(energy * t)
    if abs(total.imag) > 1e-7:
        raise RuntimeError(f"expectation came out non-real: {total}")
    return float(total.real)


def form_factor_sum(l: int, n: int, z, M: int):
    """Double Grothendieck sum for the window observable A = s_l ... s_{l+n-1}.

    Equals sum_{nu,mu} A_mu^nu G_mu(z;-1) for arbitrary complex z (windows
    that wrap around the ring are only guaranteed on-shell), via

        prod_j z_j^(l+n-1) prod_{j<k} (z_k - z_j)^-1 det V^(M-n).
    """
    z = list(z)
    N = len(z)
    if not (-l + 1 <= n <= M):
        raise ValueError("window length must satisfy -l+1 <= n <= M")
    m_eff = M - n
    rows = []
    for j in range(1, N + 1):
        row = []
        for zk in z:
            base = 1 - zk
            if j <= N - 1:
                val = 0
                for m in range(0, j):
                    val += (-1) ** m * comb(m_eff, m) * base ** (m - j + N - 1)
            else:
                val = 0
                for m in range(max(N - 1, 1), m_eff + 1):
                    val -= (-1) ** m * comb(m_eff, m) * base ** (m - 1)
            row.append(val)
        rows.append(row)
    det_val = det(Matrix(rows)) if rows else 1
    pref = 1
    for zj in z:
        pref = pref * zj ** (l + n - 1)
    for j in range(N):
        for k in range(j + 1, N):
            pref = pref / (z[k] - z[j])
    return pref * det_val


def density_terms(i: int):
    """A = n_i = 1 - s_i as signed window terms (coef, l, n)."""
    return [(1, 1, 0), (-1, i, 1)]


def current_terms(i: int):
    """A = j_i = (1 - s_i) s_{i+1} as signed window terms (coef, l, n)."""
    return [(1, i + 1, 1), (-1, i, 2)]


def expectation_via_form_factors(terms, x: ParticleConfiguration, t: float, solutions=None):
    """<A>_t with the numerator evaluated through the form-factor determinants."""
    M, N = x.ring_size, len(x)
    if solutions is None:
        solutions = bethe_solve(M, N)
    lam = config_to_partition(x)
    total = 0j
    stationary_value = sum(coef * comb(M - n, N) for coef, _, n in terms) / comb(M, N)
    for coeff, energy in _spectral_terms(solutions, lam, M, N):
        if coeff is None:
            total += stationary_value
            continue
        weight, z = coeff
        num = sum(coef * form_factor_sum(l, n, z, M) for coef, l, n in terms)
        total += num * weight * np.exp(energy * t)
    return float(total.real)


def sector_generator(M: int, N: int) -> np.ndarray:
    """The TASEP generator (alpha = 1 Hamiltonian) as a float matrix."""
    h = hamiltonian(ModelParameters(alpha=1, M=M), N)
    gen = np.array([[float(x) for x in row] for row in h.entries])
    col_sums = gen.sum(axis=0)
    if np.max(np.abs(col_sums)) > 1e-12:
        raise AssertionError("generator columns must sum to zero")
    return gen


def master_oracle(x: ParticleConfiguration, t: float) -> SectorState:
    """e^{Ht}|x> by eigendecomposition of the dense sector generator.

    Falls back to scaling-and-squaring (scipy expm) when the eigenvector
    condition estimate exceeds 1e8.  Requires M <= 12.
    """
    M, N = x.ring_size, len(x)
    if M > 12:
        raise ValueError("dense oracle limited to M <= 12")
    gen = sector_generator(M, N)
    e_x = np.zeros(len(gen))
    e_x[sector_basis(M, N).index(x.positions)] = 1.0
    vals, vecs = np.linalg.eig(gen)
    if np.linalg.cond(vecs) > 1e8:
        result = expm(gen * t) @ e_x
    else:
        result = (vecs @ np.diag(np.exp(vals * t)) @ np.linalg.inv(vecs) @ e_x).real
    return SectorState(np.asarray(result).real, M, N)
