"""Scalar products, intermediate scalar products, and norms against oracles."""

from fractions import Fraction as F

import pytest

from fivevertex.scalarprod import (IntermediateSpec, domain_wall_value,
                                   intermediate_scalar_det, norm_det, recursion_check,
                                   scalar_product_det)
from fivevertex.sector import (ModelParameters, bethe_state, build_monodromy_element,
                               dual_bethe_state, sector_basis)

from conftest import distinct_squares, rand_fraction


def test_single_pair_closed_form(rng):
    alpha = rand_fraction(rng)
    M = 4
    u, v = distinct_squares(rng, 2)
    a = lambda x: x ** M
    d = lambda x: (alpha * x - 1 / x) ** M
    expected = (a(u) * d(v) - a(v) * d(u)) / (v / u - u / v)
    assert scalar_product_det([u], [v], alpha, M) == expected


def test_symmetry_in_each_group(rng):
    alpha = rand_fraction(rng)
    u = distinct_squares(rng, 3)
    v = distinct_squares(rng, 3)
    sp = scalar_product_det(u, v, alpha, 5)
    assert scalar_product_det([u[2], u[0], u[1]], v, alpha, 5) == sp
    assert scalar_product_det(u, [v[1], v[2], v[0]], alpha, 5) == sp


def test_intermediate_oracle_mixed_bra(rng):
    M, N, n = 4, 2, 1
    alpha = rand_fraction(rng)
    u = distinct_squares(rng, N)
    v = distinct_squares(rng, N)
    w = tuple(distinct_squares(rng, M))
    params = ModelParameters(alpha=alpha, M=M, w=w)
    spec = IntermediateSpec(n, tuple(u[:n]), tuple(v), w, alpha, M, N)
    vec = [1]
    for k, vk in enumerate(v):
        vec = build_monodromy_element("B", vk, params, k).apply(vec)
    for k in range(n):
        vec = build_monodromy_element("C", u[k], params, N - k).apply(vec)
    bra_cfg = tuple(range(M - N + n + 1, M + 1))
    oracle = vec[sector_basis(M, N - n).index(bra_cfg)]
    assert intermediate_scalar_det(spec) == oracle


def test_domain_wall_and_full_reduction(rng):
    M, N = 5, 2
    alpha = rand_fraction(rng)
    u = distinct_squares(rng, N)
    v = distinct_squares(rng, N)
    w = tuple(distinct_squares(rng, M))
    spec0 = IntermediateSpec(0, (), tuple(v), w, alpha, M, N)
    assert intermediate_scalar_det(spec0) == domain_wall_value(spec0)
    hom = IntermediateSpec(N, tuple(u), tuple(v), (F(1),) * M, alpha, M, N)
    assert intermediate_scalar_det(hom) == scalar_product_det(u, v, alpha, M)


def test_recursion_and_its_failure_modes(rng):
    M, N, n = 4, 2, 1
    alpha = F(9, 16)  # perfect square, exact sqrt
    u = distinct_squares(rng, n)
    v = distinct_squares(rng, N)
    w = tuple(distinct_squares(rng, M))
    spec = IntermediateSpec(n, tuple(u), tuple(v), w, alpha, M, N)
    assert recursion_check(spec)
    with pytest.raises(ValueError):
        recursion_check(IntermediateSpec(0, (), tuple(v), w, alpha, M, N))
    # a perturbed reduction factor must not satisfy the recursion
    sqrt_alpha = F(3, 4)
    u_n = w[M - N + n - 1] / sqrt_alpha
    upper = intermediate_scalar_det(
        IntermediateSpec(n, (u_n,), tuple(v), w, alpha, M, N))
    lower = intermediate_scalar_det(
        IntermediateSpec(n - 1, (), tuple(v), w, alpha, M, N))
    w_prod = 1
    for wl in w:
        w_prod *= wl
    factor = alpha ** (N - n) * sqrt_alpha ** (-(M - 1)) * w[M - N + n - 1] ** M / w_prod
    assert upper == factor * lower
    assert upper != (2 * factor) * lower


def test_norm_single_particle_closed_form(rng):
    # det Q~ at N = 1 collapses to M u^-2 / (alpha - u^-2)
    alpha = rand_fraction(rng)
    u = rand_fraction(rng)
    M = 5
    if alpha == u ** -2:
        alpha = alpha + 1
    expected = u ** (2 * M) * (M * u ** -2 / (alpha - u ** -2))
    assert norm_det([u], alpha, M, "det") == expected
    assert norm_det([u], alpha, M, "sylvester") == expected


def test_norm_det_equals_sylvester(rng):
    M = 6
    for n in (2, 3, 4):
        while True:
            alpha = rand_fraction(rng)
            u = distinct_squares(rng, n)
            if all(alpha != uj ** -2 and alpha * n + (M - n) * uj ** -2 != 0 for uj in u):
                break
        assert norm_det(u, alpha, M, "det") == norm_det(u, alpha, M, "sylvester")


def test_on_shell_norm_matches_oracle_and_confluent_limit():
    """Norm formula vs <psi|psi> from the oracle and vs the u = v scalar product.

    On-shell u from the TASEP Bethe roots via u^-2 = 1 - z, alpha = 1,
    M = 4, N = 2; tolerance 1e-8 (relative).
    """
    from fivevertex.tasep import bethe_solve

    M, N = 4, 2
    sols = [s for s in bethe_solve(M, N) if not s.stationary]
    params = ModelParameters(alpha=1.0, M=M)
    for sol in sols[:3]:
        u = [(1 - z) ** -0.5 for z in sol.roots]
        bra = dual_bethe_state(u, params)
        ket = bethe_state(u, params)
        oracle = sum(b * k for b, k in zip(bra, ket))
        value = norm_det(u, 1.0, M, "det")
        assert abs(value - oracle) <= 1e-8 * max(1.0, abs(oracle))
        confluent = scalar_product_det(u, list(u), 1.0, M)
        assert abs(confluent - oracle) <= 1e-8 * max(1.0, abs(oracle))


def test_intermediate_polynomial_degree_property(rng):
    # prod u_j^(M+2n-2N-1) S is a polynomial of degree M-N+n-1 in u_n^2
    M, N, n = 4, 2, 2
    alpha = rand_fraction(rng)
    u_fixed = distinct_squares(rng, n - 1)
    v = distinct_squares(rng, N)
    w = tuple(distinct_squares(rng, M))
    degree = M - N + n - 1
    from fivevertex.sampling import distinct_square_fractions

    samples = distinct_square_fractions(rng, degree + 2,
                                        avoid_squares=[x * x for x in u_fixed])
    points = []
    for u_n in samples:
        spec = IntermediateSpec(n, tuple(u_fixed) + (u_n,), tuple(v), w, alpha, M, N)
        pref = u_n ** (M + 2 * n - 2 * N - 1)
        for uj in u_fixed:
            pref *= uj ** (M + 2 * n - 2 * N - 1)
        points.append((u_n * u_n, pref * intermediate_scalar_det(spec)))
    held_s, held_val = points[-1]
    interp = 0
    for i, (si, pi) in enumerate(points[:-1]):
        term = pi
        for j, (sj, _) in enumerate(points[:-1]):
            if i != j:
                term = term * (held_s - sj) / (si - sj)
        interp += term
    assert interp == held_val
