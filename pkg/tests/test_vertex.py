"""Local vertex-model structure: weights, R-matrices, RLL/YBE, ansatz family."""

from fractions import Fraction as F

import pytest

from fivevertex.vertex import (appendix_a_family_check, ansatz_l_matrix, embed_two_site,
                               f_weight, l_matrix, l_weights, r_matrix, rll_check,
                               rtilde_check, rtilde_matrix, ybe_check)

from conftest import distinct_squares, rand_fraction


def test_l_weights_symbolic():
    import sympy

    u, a = sympy.symbols("u alpha")
    w = l_weights(u, a)
    assert w == (u, 1, 1, a * u - 1 / u, a * u)


def test_l_weights_tasep_point():
    assert l_weights(F(1), F(1)) == (1, 1, 1, 0, 1)


def test_l_weights_four_vertex_point():
    u = F(2, 3)
    w = l_weights(u, 0)
    assert w == (u, 1, 1, -1 / u, 0)
    nonzero = [x for x in w if x != 0]
    assert len(nonzero) == 4


def test_l_weights_rejects_zero():
    with pytest.raises(ZeroDivisionError):
        l_weights(F(0), F(1))


def test_r_matrix_values():
    r = r_matrix(F(2), F(1))
    assert r[0, 0] == F(4, 3) and r[3, 3] == F(4, 3)
    assert r[1, 2] == F(2, 3) and r[2, 1] == F(2, 3)
    assert r[2, 2] == 1
    # v = 0 limit: f = 1, g = 0
    r0 = r_matrix(F(3), F(0))
    assert r0[0, 0] == 1 and r0[1, 2] == 0


def test_f_weight_complementarity(rng):
    u, v = distinct_squares(rng, 2)
    assert f_weight(v, u) + f_weight(u, v) == 1


def test_r_matrix_pole():
    with pytest.raises(ZeroDivisionError):
        r_matrix(F(2), F(-2))


def test_rll_random_and_degenerations(rng):
    for _ in range(5):
        u, v = distinct_squares(rng, 2)
        alpha = rand_fraction(rng)
        assert rll_check(u, v, alpha)
    assert rll_check(F(2, 3), F(5, 7), 0)  # four-vertex point


def test_rll_broken_weight_fails():
    u, v, alpha = F(2, 3), F(5, 7), F(3, 4)

    def broken(x):
        m = l_matrix(x, alpha)
        m[2, 2] = m[2, 2] + 1  # perturb the d-weight
        return m

    assert not rll_check(u, v, alpha, l_builder=broken)


def test_ybe_random_perturbed_and_pole(rng):
    u, v, w = distinct_squares(rng, 3)
    assert ybe_check(u, v, w)
    with pytest.raises(ZeroDivisionError):
        ybe_check(u, u, w)
    # perturbing one g entry breaks the identity
    r12 = embed_two_site(r_matrix(u, v), (0, 1))
    r13 = embed_two_site(r_matrix(u, w), (0, 2))
    bad = r_matrix(v, w)
    bad[1, 2] = bad[1, 2] + 1
    r23 = embed_two_site(bad, (1, 2))
    assert not (r12 * r13 * r23 == r23 * r13 * r12)


def test_rtilde_random_and_unit_argument(rng):
    u, wj, wk = distinct_squares(rng, 3)
    alpha = rand_fraction(rng)
    assert rtilde_check(u, wj, wk, alpha)
    rt = rtilde_matrix(F(1), alpha)
    assert (rt[0, 0], rt[1, 2], rt[2, 1], rt[2, 2], rt[3, 3]) == (1, 1, 1, 0, 1)


def test_rtilde_perturbed_fails(rng):
    u, wj, wk = F(2, 3), F(5, 7), F(9, 5)
    alpha = F(3, 4)
    rt = rtilde_matrix(wj / wk, alpha)
    rt[2, 2] = rt[2, 2] + 1  # perturb the alpha(u - 1/u) entry
    l_k = embed_two_site(l_matrix(u / wk, alpha), (0, 2))
    l_j = embed_two_site(l_matrix(u / wj, alpha), (0, 1))
    rt_emb = embed_two_site(rt, (1, 2))
    assert not (rt_emb * l_k * l_j == l_j * l_k * rt_emb)


def test_appendix_family():
    # (A, C, D) = (1, alpha, 1), f = 1 recovers the model L-operator
    alpha = F(3, 4)
    assert appendix_a_family_check(F(1), alpha, F(1), lambda u: 1)
    m = ansatz_l_matrix(F(2, 3), F(1), F(1), alpha, F(1), lambda u: 1)
    assert m == l_matrix(F(2, 3), alpha)


def test_appendix_family_random_and_violations(rng):
    for _ in range(5):
        a, c, d = (rand_fraction(rng) for _ in range(3))
        assert appendix_a_family_check(a, c, d, lambda u: u)
        assert not appendix_a_family_check(a, c, d, lambda u: 1, B=a * d + 1)


def test_appendix_family_rejects_zero_function():
    with pytest.raises(ValueError):
        appendix_a_family_check(F(1), F(2), F(3), lambda u: 0)
