"""Seeded rational parameter draws for the exact identity checks."""

from __future__ import annotations

from fractions import Fraction
from random import Random


def rand_fraction(rng: Random, nonzero: bool = True, span: int = 9) -> Fraction:
    while True:
        f = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if not nonzero or f != 0:
            return f


def distinct_square_fractions(rng: Random, count: int, avoid_squares=()) -> list:
    """Nonzero rationals with pairwise distinct squares, avoiding given squares."""
    avoid = {Fraction(a) for a in avoid_squares}
    out = []
    while len(out) < count:
        f = rand_fraction(rng)
        if f * f in avoid or any(f * f == g * g for g in out):
            continue
        out.append(f)
    return out


def spectral_draw(rng: Random, count: int, alpha: Fraction) -> list:
    """Distinct-square nonzero rationals u with alpha*u^2 != 1 (wavefunction-safe)."""
    out = []
    while len(out) < count:
        f = rand_fraction(rng)
        if alpha * f * f == 1 or any(f * f == g * g for g in out):
            continue
        out.append(f)
    return out
