import pytest
from hypothesis import given, strategies as st

from scrollcert.bundles import SplittingType
from scrollcert.schubert import (
    SchubertPartition,
    SimpleCycle,
    alphabeta_solutions,
    break_points,
    flag_stages,
    normal_graded,
    partitions_of_codim,
    remainder_R,
    simple_cycle_normal,
)


def test_partition_validation():
    with pytest.raises(ValueError):
        SchubertPartition(1, 4, (1, 2))
    with pytest.raises(ValueError):
        SchubertPartition(1, 4, (4, 0))
    with pytest.raises(ValueError):
        SchubertPartition(1, 4, (1,))


def test_break_points():
    dec = break_points(SchubertPartition(1, 7, (3, 0)))
    assert dec.breaks == (0, 1) and dec.values == (3, 0) and sum(dec.values) == 3
    assert break_points(SchubertPartition(3, 9, (5, 3, 2, 0))).breaks == (0, 1, 2, 3)
    dec = break_points(SchubertPartition(2, 7, (2, 2, 2)))
    assert dec.breaks == (2,) and dec.u == 0


def test_remainder_examples():
    assert remainder_R(3, 7) == (0, 2, 0)
    assert remainder_R(1, 4) == (3, 2, 1)
    with pytest.raises(ValueError):
        remainder_R(2, 4)


def test_alphabeta():
    res = alphabeta_solutions(1, 3, 2)
    assert {(c.alpha, c.beta) for c in res.cycles} == {(0, 1), (1, 0)}
    assert alphabeta_solutions(1, 3, 0).cycles == []
    for k in range(1, 5):
        n = 2 * k + 1
        assert SimpleCycle(k, n, 1, 1) in alphabeta_solutions(k, n, 2 * k + 1).cycles


def test_sufficient_conditions_produce_members():
    for n in range(3, 25):
        for k in range(1, (n - 1) // 2 + 1):
            res = alphabeta_solutions(k, n, remainder_R(k, n).R + 1)
            for cond in res.conditions:
                if cond.fires:
                    assert cond.member, (k, n, cond)


def test_flag_stages():
    fl = flag_stages(SchubertPartition(1, 10, (7, 6)))
    assert len(fl.stages) == 2 and not fl.sigma0_is_point
    fl = flag_stages(SchubertPartition(1, 7, (3, 0)))
    assert len(fl.stages) == 2 and fl.stages[0].ambient_rank == 4
    fl = flag_stages(SchubertPartition(2, 7, (1, 1, 1)))
    assert len(fl.stages) == 1
    assert flag_stages(SchubertPartition(1, 4, (3, 0))).sigma0_is_point


def test_normal_graded():
    ng = normal_graded(SchubertPartition(2, 7, (2, 2, 2)), (3,))
    assert ng.rank == 6 and ng.degree == 6 and not ng.discrepancy
    with pytest.raises(ValueError, match="divide"):
        normal_graded(SchubertPartition(3, 8, (2, 2, 2, 0)), (7, 3))
    ng = normal_graded(SchubertPartition(1, 5, (2, 0)), (3, 5))
    assert ng.degree == 0 * 3 + 2 * 3 + 1 * 5


def test_simple_cycle_normal():
    for k in range(1, 6):
        N = simple_cycle_normal(SimpleCycle(k, 2 * k + 1, 1, 1), k)
        assert N == SplittingType([1] * (2 * k) + [0])


@given(st.integers(1, 4), st.integers(3, 10), st.integers(0, 30))
def test_partition_enumeration(k, n, A):
    if n <= k:
        return
    parts = partitions_of_codim(k, n, A)
    assert len(set(parts)) == len(parts)
    for P in parts:
        assert P.codim == A
        dec = break_points(P)
        assert sum(s * v for s, v in zip(dec.block_sizes(), dec.values)) == A
        fl = flag_stages(P) if all(c > 1 for c in [a - b + 1 for a, b in zip(dec.values, dec.values[1:])]) else None
        if fl:
            assert sum(s.sub_rank for s in fl.stages) == k + 1
