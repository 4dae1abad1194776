"""Young diagrams in a box and particle configurations on a ring.

A configuration 1 <= x_1 < ... < x_N <= M of N particles on M sites
corresponds bijectively to the diagram lambda inside the (M-N)^N box via

    lambda_j = x_{N-j+1} - N + j - 1,        x_j = lambda_{N-j+1} + j.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing parts inside a box (width, height)."""

    parts: tuple
    box: tuple  # (width m, height N)

    def __post_init__(self):
        m, n = self.box
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) != n:
            raise ValueError(f"expected {n} parts, got {len(parts)}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing")
        if parts and (parts[0] > m or parts[-1] < 0):
            raise ValueError(f"partition {parts} outside box {m}^{n}")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def text(self) -> str:
        m, n = self.box
        return f"λ = [{','.join(map(str, self.parts))}] in box {m}^{n}"


@dataclass(frozen=True)
class ParticleConfiguration:
    """Strictly increasing positions x_1 < ... < x_N in [1, ring_size]."""

    positions: tuple
    ring_size: int

    def __post_init__(self):
        pos = tuple(int(x) for x in self.positions)
        object.__setattr__(self, "positions", pos)
        if any(pos[i] >= pos[i + 1] for i in range(len(pos) - 1)):
            raise ValueError("positions must be strictly increasing")
        if pos and (pos[0] < 1 or pos[-1] > self.ring_size):
            raise ValueError(f"positions {pos} outside ring of size {self.ring_size}")

    def __len__(self):
        return len(self.positions)


def config_to_partition(x: ParticleConfiguration) -> Partition:
    """lambda_j = x_{N-j+1} - N + j - 1, inside the (M-N)^N box."""
    n = len(x.positions)
    parts = tuple(x.positions[n - j] - n + j - 1 for j in range(1, n + 1))
    return Partition(parts, (x.ring_size - n, n))


def partition_to_config(lam: Partition, ring_size: int) -> ParticleConfiguration:
    """x_j = lambda_{N-j+1} + j; inverse of config_to_partition."""
    n = len(lam.parts)
    if lam.parts and lam.parts[0] > ring_size - n:
        raise ValueError(f"partition {lam.parts} outside box {ring_size - n}^{n}")
    positions = tuple(lam.parts[n - j] + j for j in range(1, n + 1))
    return ParticleConfiguration(positions, ring_size)


def enumerate_box(m: int, n: int) -> Iterator[Partition]:
    """All partitions in the m^n box, parts lexicographically decreasing."""
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be nonnegative")

    def rec(prefix, remaining, bound):
        if remaining == 0:
            yield Partition(tuple(prefix), (m, n))
            return
        for p in range(bound, -1, -1):
            yield from rec(prefix + [p], remaining - 1, p)

    yield from rec([], n, m)


def box_size(m: int, n: int) -> int:
    """Number of partitions in the m^n box."""
    return comb(m + n, n)
