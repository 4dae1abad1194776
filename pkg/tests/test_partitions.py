"""Box partitions, ring configurations, and their bijection."""

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fivevertex.partitions import (ParticleConfiguration, Partition, box_size,
                                   config_to_partition, enumerate_box, partition_to_config)
from fivevertex.sector import sector_basis


def test_bijection_examples():
    assert config_to_partition(ParticleConfiguration((1, 2, 3), 6)).parts == (0, 0, 0)
    assert config_to_partition(ParticleConfiguration((1, 3), 4)).parts == (1, 0)
    assert config_to_partition(ParticleConfiguration((1, 3, 5), 6)).parts == (2, 1, 0)
    assert partition_to_config(Partition((0, 0, 0), (3, 3)), 6).positions == (1, 2, 3)
    assert partition_to_config(Partition((1, 0), (2, 2)), 4).positions == (1, 3)
    assert partition_to_config(Partition((2, 1, 0), (3, 3)), 6).positions == (1, 3, 5)


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=1, max_value=10), st.data())
def test_round_trip(m_sites, data):
    n = data.draw(st.integers(min_value=0, max_value=m_sites))
    positions = tuple(sorted(data.draw(
        st.sets(st.integers(min_value=1, max_value=m_sites), min_size=n, max_size=n))))
    x = ParticleConfiguration(positions, m_sites)
    lam = config_to_partition(x)
    assert partition_to_config(lam, m_sites) == x
    assert lam.box == (m_sites - n, n)


def test_enumerate_box_counts():
    assert [p.parts for p in enumerate_box(1, 2)] == [(1, 1), (1, 0), (0, 0)]
    assert len(list(enumerate_box(2, 2))) == 6
    assert len(list(enumerate_box(4, 2))) == 15
    assert box_size(4, 2) == comb(6, 2)


def test_enumeration_is_lex_decreasing():
    parts = [p.parts for p in enumerate_box(3, 3)]
    assert parts == sorted(parts, reverse=True)
    assert len(parts) == len(set(parts))


@pytest.mark.parametrize("M,N", [(5, 2), (6, 3), (7, 3)])
def test_box_matches_sector_dimension(M, N):
    assert box_size(M - N, N) == len(sector_basis(M, N)) == comb(M, N)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        ParticleConfiguration((3, 1), 4)
    with pytest.raises(ValueError):
        Partition((1, 2), (3, 2))
    with pytest.raises(ValueError):
        partition_to_config(Partition((5, 0), (5, 2)), 4)


def test_text_form():
    assert Partition((2, 1, 0), (4, 3)).text() == "λ = [2,1,0] in box 4^3"
