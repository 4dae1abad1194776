"""Cauchy identity, summation formulas, and orthogonality."""

from fractions import Fraction as F
from math import comb

import pytest

from fivevertex.identities import (cauchy_infinite_check, cauchy_lhs, cauchy_rhs,
                                   grothendieck_sum_check, grothendieck_sum_det,
                                   orthogonality_check)
from fivevertex.partitions import enumerate_box
from fivevertex.symfunc import schur_eval

from conftest import distinct_squares, rand_fraction


def test_single_variable_geometric_series(rng):
    z, y = rand_fraction(rng), rand_fraction(rng)
    beta = rand_fraction(rng)
    if z * y == 1:
        y = y + 1
    M = 5
    expected = sum((z * y) ** k for k in range(M))
    assert cauchy_rhs(M, 1, [z], [y], beta) == expected
    if 1 + beta / y != 0:
        assert cauchy_lhs(M, 1, [z], [y], beta) == expected


def test_exact_identity_random_draws(rng):
    for (M, N) in [(4, 2), (5, 2), (6, 3)]:
        z = distinct_squares(rng, N)
        y = distinct_squares(rng, N)
        beta = rand_fraction(rng)
        if any(zj * yk == 1 for zj in z for yk in y) or any(1 + beta / yk == 0 for yk in y):
            continue
        assert cauchy_lhs(M, N, z, y, beta) == cauchy_rhs(M, N, z, y, beta)


def test_beta_zero_recovers_schur_cauchy(rng):
    M, N = 5, 2
    z = distinct_squares(rng, N)
    y = distinct_squares(rng, N)
    if any(zj * yk == 1 for zj in z for yk in y):
        y = [yk + 2 for yk in y]
    lhs = sum(schur_eval(lam, z) * schur_eval(lam, y) for lam in enumerate_box(M - N, N))
    assert lhs == cauchy_rhs(M, N, z, y, 0)


def test_rhs_symmetric_in_each_group(rng):
    M, N = 5, 3
    z = distinct_squares(rng, N)
    y = distinct_squares(rng, N)
    beta = rand_fraction(rng)
    if any(zj * yk == 1 for zj in z for yk in y) or any(1 + beta / yk == 0 for yk in y):
        beta = beta + 1
    base = cauchy_rhs(M, N, z, y, beta)
    assert cauchy_rhs(M, N, [z[1], z[2], z[0]], y, beta) == base
    assert cauchy_rhs(M, N, z, [y[2], y[1], y[0]], beta) == base


def test_removable_kernel_singularity():
    # z_1 y_1 = 1 exactly: the kernel entry is 0/0 but the limit is finite
    z = [F(2, 3), F(1, 5)]
    y = [F(3, 2), F(1, 7)]
    beta = F(2, 7)
    assert z[0] * y[0] == 1
    assert cauchy_lhs(4, 2, z, y, beta) == cauchy_rhs(4, 2, z, y, beta)


def test_confluent_variable_groups():
    z = [F(1, 2), F(1, 2)]
    y = [F(1, 3), F(1, 5)]
    beta = F(1, 4)
    assert cauchy_lhs(4, 2, z, y, beta) == cauchy_rhs(4, 2, z, y, beta)
    # and coincidences on the y side go through the transposed branch
    z2 = [F(1, 3), F(1, 5)]
    y2 = [F(1, 2), F(1, 2)]
    assert cauchy_lhs(4, 2, z2, y2, beta) == cauchy_rhs(4, 2, z2, y2, beta)


def test_infinite_limit_simple_case():
    # beta = 0, N = 1, z = y = 1/2: product form is 1/(1 - 1/4) = 4/3
    report = cauchy_infinite_check(1, [F(1, 2)], [F(1, 2)], 0, M_max=25)
    assert report["product"] == F(4, 3)
    assert report["converged"] and report["monotone"]


def test_infinite_limit_two_variables():
    report = cauchy_infinite_check(2, [F(1, 3), F(1, 4)], [F(1, 2), F(2, 5)],
                                   F(1, 6), M_max=40)
    assert report["converged"]
    assert report["distances"][-1] <= 1e-10


def test_infinite_limit_rejects_divergent_input():
    with pytest.raises(ValueError):
        cauchy_infinite_check(1, [F(2)], [F(1)], 0, M_max=5)


def test_sum_single_variable_hand_check(rng):
    M, N = 3, 1
    z = [rand_fraction(rng)]
    beta = rand_fraction(rng)
    while 1 + beta * z[0] == 0 or 1 + beta / z[0] == 0 or beta == 0:
        beta = rand_fraction(rng)
    lhs = sum((-beta) ** l * z[0] ** l for l in range(M))
    assert grothendieck_sum_det(M, N, z, beta) == lhs
    lhs_dual = sum((-beta) ** (-l) * z[0] ** l for l in range(M))
    assert grothendieck_sum_det(M, N, z, beta, dual=True) == lhs_dual


def test_sum_checks(rng):
    M, N = 4, 2
    z = distinct_squares(rng, N)
    beta = rand_fraction(rng)
    while any(1 + beta * zj == 0 or 1 + beta / zj == 0 for zj in z) or beta == 0:
        beta = rand_fraction(rng)
    assert grothendieck_sum_check(M, N, z, beta)
    assert grothendieck_sum_check(M, N, z, beta, dual=True)


def test_sum_rejects_beta_zero(rng):
    with pytest.raises(ValueError):
        grothendieck_sum_det(4, 2, distinct_squares(rng, 2), 0)


def test_orthogonality_small_case():
    M, N = 4, 2
    from fivevertex.tasep import bethe_solve

    sols = bethe_solve(M, N)
    box = list(enumerate_box(M - N, N))
    for lam in box:
        for mu in box:
            val = orthogonality_check(M, N, -1.0, lam, mu, sols)
            want = 1.0 if lam.parts == mu.parts else 0.0
            assert abs(val - want) <= 1e-8


def test_orthogonality_rejects_incomplete_enumeration():
    from fivevertex.tasep import bethe_solve

    sols = bethe_solve(4, 2)[:-1]
    lam = next(iter(enumerate_box(2, 2)))
    with pytest.raises(RuntimeError):
        orthogonality_check(4, 2, -1.0, lam, lam, sols)


def test_orthogonality_beta_zero_on_circle():
    from fivevertex.tasep import bethe_solve

    M, N = 6, 2
    sols = bethe_solve(M, N, beta=0.0)
    assert len(sols) == comb(M, N)
    for sol in sols:
        for zj in sol.roots:
            assert abs(abs(zj) - 1) <= 1e-12
    box = list(enumerate_box(M - N, N))
    lam, mu = box[0], box[3]
    assert abs(orthogonality_check(M, N, 0.0, lam, lam, sols) - 1) <= 1e-8
    assert abs(orthogonality_check(M, N, 0.0, lam, mu, sols)) <= 1e-8
