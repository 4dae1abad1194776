"""Schur/Grothendieck evaluators against tableau and symbolic oracles."""

from fractions import Fraction as F
from itertools import permutations

import pytest

from fivevertex.partitions import enumerate_box
from fivevertex.symfunc import dual_grothendieck_eval, grothendieck_eval, schur_eval

from conftest import distinct_squares, rand_fraction


def semistandard_tableaux_count(shape, max_entry):
    """Brute-force oracle: count SSYT of the given shape with entries <= max_entry."""
    shape = [p for p in shape if p > 0]
    cells = [(r, c) for r, row_len in enumerate(shape) for c in range(row_len)]

    def fill(idx, tableau):
        if idx == len(cells):
            return 1
        r, c = cells[idx]
        lo = 1
        if c > 0:
            lo = max(lo, tableau[(r, c - 1)])
        if r > 0:
            lo = max(lo, tableau[(r - 1, c)] + 1)
        total = 0
        for val in range(lo, max_entry + 1):
            tableau[(r, c)] = val
            total += fill(idx + 1, tableau)
        tableau.pop((r, c), None)
        return total

    return fill(0, {})


def test_schur_trivial_cases():
    assert schur_eval((), [F(2), F(3)]) == 1
    z1, z2 = F(2, 3), F(5, 7)
    assert schur_eval((1,), [z1, z2]) == z1 + z2


def test_schur_principal_specialization_counts_tableaux():
    # s_lambda(1,...,1) counts semistandard tableaux; (2,1) with 3 entries gives 8
    oracle = semistandard_tableaux_count((2, 1), 3)
    assert oracle == 8
    assert schur_eval((2, 1), [F(1)] * 3) == oracle
    for shape in [(2,), (2, 2), (3, 1)]:
        assert schur_eval(shape, [F(1)] * 3) == semistandard_tableaux_count(shape, 3)


def test_grothendieck_symbolic_expansion():
    import sympy

    z1, z2, beta = sympy.symbols("z1 z2 beta")
    val = grothendieck_eval((1,), [z1, z2], beta)
    assert sympy.simplify(val - (z1 + z2 + beta * z1 * z2)) == 0


def test_beta_zero_specializations(rng):
    z = distinct_squares(rng, 3)
    for lam in [(2, 1), (3, 1, 1), (2, 2)]:
        s = schur_eval(lam, z)
        assert grothendieck_eval(lam, z, 0) == s
        assert dual_grothendieck_eval(lam, z, 0) == s


def test_grothendieck_all_ones_beta_minus_one():
    for n in (1, 2, 3):
        for lam in enumerate_box(3, n):
            assert grothendieck_eval(lam, [F(1)] * n, F(-1)) == 1


def test_dual_single_variable_power():
    z, beta = F(5, 7), F(2, 9)
    assert dual_grothendieck_eval((3,), [z], beta) == z ** 3


def test_symmetry_under_variable_permutations(rng):
    z = distinct_squares(rng, 3)
    beta = rand_fraction(rng)
    for lam in [(2, 1, 0), (3, 2, 1)]:
        g = grothendieck_eval(lam, z, beta)
        gd = dual_grothendieck_eval(lam, z, beta)
        s = schur_eval(lam, z)
        for perm in permutations(z):
            assert grothendieck_eval(lam, list(perm), beta) == g
            assert dual_grothendieck_eval(lam, list(perm), beta) == gd
            assert schur_eval(lam, list(perm)) == s


def test_confluent_path_matches_numeric_limit(rng):
    z0 = rand_fraction(rng)
    other = rand_fraction(rng)
    beta = rand_fraction(rng)
    lam = (2, 1, 0)
    exact = grothendieck_eval(lam, [z0, z0, other], beta)
    eps = F(1, 10 ** 7)
    numeric = grothendieck_eval(lam, [z0, z0 + eps, other], beta)
    assert abs(float((numeric - exact) / exact)) < 1e-6


def test_bialternant_oracle_symbolic_box():
    """Cofactor expansion with exact polynomial division over the 3^3 box."""
    import sympy

    z = sympy.symbols("z1 z2 z3")
    beta = sympy.symbols("beta")
    vandermonde = (z[0] - z[1]) * (z[0] - z[2]) * (z[1] - z[2])
    for lam in enumerate_box(3, 3):
        rows = [[zj ** (lam.parts[k] + 3 - 1 - k) * (1 + beta * zj) ** k for k in range(3)]
                for zj in z]
        bialternant = sympy.Matrix(rows).det(method="berkowitz")
        quotient, remainder = sympy.div(sympy.expand(bialternant), sympy.expand(vandermonde),
                                        *z)
        assert remainder == 0
        mine = grothendieck_eval(lam, list(z), beta)
        assert sympy.simplify(mine - quotient) == 0


def test_dual_rejects_zero_variable():
    with pytest.raises(ZeroDivisionError):
        dual_grothendieck_eval((1,), [F(0), F(2)], F(1, 2))


def test_dual_rejects_vanishing_base():
    # z = -beta makes 1 + beta/z vanish under a negative exponent (k >= 2)
    with pytest.raises(ZeroDivisionError):
        dual_grothendieck_eval((1, 1), [F(2), F(-1, 2)], F(1, 2))


def test_too_few_variables_rejected():
    with pytest.raises(ValueError):
        schur_eval((2, 1, 1), [F(1), F(2)])


def test_evaluation_point_wrapper(rng):
    from fivevertex.symfunc import EvaluationPoint

    z = distinct_squares(rng, 2)
    beta = rand_fraction(rng)
    point = EvaluationPoint(tuple(z), beta)
    assert point.grothendieck((1,)) == grothendieck_eval((1,), z, beta)
    assert point.dual_grothendieck((1,)) == dual_grothendieck_eval((1,), z, beta)
    assert point.schur((1,)) == schur_eval((1,), z)
