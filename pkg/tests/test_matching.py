from fractions import Fraction

import pytest

from scrollcert.matching import (
    SearchBounds,
    alphabeta_search,
    balanced_degree_source,
    beta_family_solver,
    c2_balance_sides,
    curve_normal_stats,
    expected_degree,
    match4_sides,
    minimal_certificate,
    minimal_scroll_slope,
    oddg_certificates,
    r0_printed_search,
    solve_bp,
    solve_k1_div4,
    solve_k1_div4plus2,
    solve_k1_odd,
    solve_pb,
)
from scrollcert.schubert import SchubertPartition, SimpleCycle, partitions_of_codim, remainder_R

SMALL = SearchBounds(30, 30, 30, 4)


def test_curve_normal_stats():
    assert tuple(curve_normal_stats(2, 1, 3))[:3] == (6, 3, 3)
    for n in range(3, 30):
        want = (n + 3) // 2 if n % 2 else n // 2 + 1
        assert curve_normal_stats(n - 1, 1, n).max_rulings == want


def test_chi_boundary():
    for n in range(3, 16):
        for k in range(0, n):
            if (k + 1) * (n - k) < 2:
                continue
            for e in range(1, 15):
                st = curve_normal_stats(e, k, n)
                q = st.max_rulings
                assert st.degN - q * st.rkN + st.rkN >= 0
                assert st.degN - (q + 1) * st.rkN + st.rkN < 0


def test_expected_degree():
    assert expected_degree(3, 1, 3) == 2
    assert expected_degree(1, 2, 9) == 1
    for n in range(3, 21):
        for k in range(1, (n - 1) // 2 + 1):
            for q in range(1, 51):
                assert curve_normal_stats(expected_degree(q, k, n), k, n).max_rulings >= q


def test_minimal_scroll_slope():
    assert minimal_scroll_slope(5) == (Fraction(22, 7), 3)
    assert minimal_scroll_slope(4) == (Fraction(13, 5), 2)
    assert minimal_scroll_slope(3) == (Fraction(2), 2)


def test_balanced_sources():
    assert balanced_degree_source(0, 4, 1).rule == "projective"
    assert balanced_degree_source(0, 4, 3) is None
    assert balanced_degree_source(2, 5, 7).rule == "oddG"
    assert balanced_degree_source(3, 5, 4).rule == "minimal"  # G(3,5) is G(1,5)
    assert balanced_degree_source(1, 1, 0).rule == "point"


def test_k1_odd():
    certs = solve_k1_odd(7, SearchBounds(200, 400, 200, 5))
    assert certs
    assert any("divisibility-family member" in c.flags for c in certs)
    for c in certs:
        e0, e1 = c.lift.e
        assert c.degree == e0 + e1 + 5 * c.lift.e_plus
    with pytest.raises(ValueError):
        solve_k1_odd(8, SMALL)


def test_k1_div4():
    certs = solve_k1_div4(8, SMALL)
    assert certs
    assert all(match4_sides(2, c.lift.e[0], c.lift.e_plus)[0] == match4_sides(2, c.lift.e[0], c.lift.e_plus)[1] for c in certs)
    assert match4_sides(2, 3 * 6, 0)[1] == 14
    with pytest.raises(ValueError):
        solve_k1_div4(10, SMALL)


def test_k1_div4plus2_both_readings():
    certs = solve_k1_div4plus2(10, SMALL)
    assert {c.reading for c in certs} <= {"e1+e+", "e1+e0"} and certs
    assert c2_balance_sides(2, 2, 1, 1, "e1+e+")[1] == 4
    with pytest.raises(ValueError):
        solve_k1_div4plus2(12, SMALL)


def test_oddg():
    for k in range(1, 5):
        certs = oddg_certificates(k, 5)
        assert [c.degree for c in certs] == [r * k + 1 for r in range(1, 6)]
        assert all(c.slopes["s+"] == 2 for c in certs)
    assert oddg_certificates(2, 3)[2].slopes["s0"] == 2


def test_beta_family():
    b = SearchBounds(20, 20, 1, 5)
    (c,) = beta_family_solver(3, 8, 3, b)
    assert c.lift.e == (7, 3) and c.family.degrees()[:3] == [5, 15, 25]
    (c,) = beta_family_solver(1, 5, 3, b)
    assert c.lift.e == (3, 5) and c.slopes["s0"] == 7 and c.family.degrees()[:2] == [4, 12]
    with pytest.raises(ValueError):
        beta_family_solver(3, 8, 1, b)
    assert beta_family_solver(3, 8, 3, SearchBounds(2, 2, 1, 1)) == []


def test_alphabeta_branches():
    k, n = 2, 7
    A = remainder_R(k, n).R + 1
    with pytest.raises(ValueError, match="R\\+1"):
        alphabeta_search(k, n, SimpleCycle(k, n, 1, 1), SMALL)
    c = SimpleCycle(1, 5, 0, 1)
    assert c.codim == remainder_R(1, 5).R + 1
    certs = alphabeta_search(1, 5, c, SMALL)
    assert all(c.slopes["e+ bound"] is None for c in certs)
    assert A == 11


def test_pb_codim_mismatch():
    with pytest.raises(ValueError, match="partition does not match R\\+1"):
        solve_pb(2, 7, SchubertPartition(2, 7, (1, 0, 0)), SMALL)


def test_pb_and_bp_outputs():
    k, n = 2, 7
    A = remainder_R(k, n).R + 1
    found = []
    for P in partitions_of_codim(k, n, A):
        found += solve_pb(k, n, P, SMALL)
    assert found
    for c in found:
        assert c.degree == sum(c.lift.e) + (n - k - 1) * c.lift.e_plus
    const = SchubertPartition(2, 8, (1, 1, 1))
    if const.codim == remainder_R(2, 8).R + 1:
        for c in solve_pb(2, 8, const, SMALL):
            assert any(x.name == "(ii)' u = 0" for x in c.conditions)
    for c in solve_bp(1, 3, SimpleCycle(1, 3, 1, 1), SearchBounds(3, 3, 1, 3)):
        assert c.lift.e_plus == 1 and c.slopes["s+"].denominator == 1
        assert c.family.step == sum(c.lift.e)


def test_r0_printed():
    assert r0_printed_search(2, 11, SMALL)
    with pytest.raises(ValueError):
        r0_printed_search(2, 10, SMALL)


def test_minimal_certificate():
    c = minimal_certificate(2, 7)
    assert c.degree == 5 and c.conditions[0].lhs == 2
