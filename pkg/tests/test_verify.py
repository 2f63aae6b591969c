import copy

import pytest

from scrollcert.certificate import BalancedCertificate, Condition, LiftParameters, certificates_from_csv, certificates_to_csv
from scrollcert.matching import (
    SearchBounds,
    alphabeta_search,
    beta_family_solver,
    minimal_certificate,
    oddg_certificates,
    r0_printed_search,
    solve_bp,
    solve_k1_div4,
    solve_k1_div4plus2,
    solve_k1_odd,
    solve_pb,
)
from scrollcert.schubert import SimpleCycle, alphabeta_solutions, partitions_of_codim, remainder_R
from scrollcert.verify import verify

B = SearchBounds(30, 30, 30, 4)


def corpus():
    certs = solve_k1_odd(9, B) + solve_k1_div4(12, B) + solve_k1_div4plus2(10, B) + r0_printed_search(2, 11, B)
    certs += beta_family_solver(3, 8, 3, B) + oddg_certificates(3, 4) + [minimal_certificate(3, 10)]
    for k, n in ((2, 7), (1, 9)):
        A = remainder_R(k, n).R + 1
        for P in partitions_of_codim(k, n, A):
            certs += solve_pb(k, n, P, B) + solve_bp(k, n, P, B)
        for c in alphabeta_solutions(k, n, A).cycles:
            certs += alphabeta_search(k, n, c, B)
    certs += solve_bp(1, 3, SimpleCycle(1, 3, 1, 1), B)
    return certs


CORPUS = corpus()


def test_every_strategy_represented():
    assert {c.strategy for c in CORPUS} >= {"k1-odd", "k1-div4", "k1-div4plus2", "p+b", "oddG", "beta-family", "alphabeta", "r0-printed", "minimal"}


def test_corpus_reverifies():
    bad = [(c.strategy, verify(c.to_json())) for c in CORPUS if verify(c.to_json())]
    assert not bad


def test_sub_certificates_chain():
    chained = [c for c in solve_k1_div4(16, SearchBounds(40, 40, 40, 4)) if c.sub_certificates]
    assert chained
    assert all(not verify(c.to_json()) for c in chained)


@pytest.mark.parametrize("field,value", [("degree", 1), ("lift", {"e": [5, 5], "e_plus": 1})])
def test_tampering_detected(field, value):
    rec = copy.deepcopy(solve_k1_odd(7, B)[0].to_json())
    rec[field] = value
    assert verify(rec)


def test_tampered_beta_and_oddg():
    rec = copy.deepcopy(beta_family_solver(3, 8, 3, B)[0].to_json())
    rec["lift"]["e"] = [7, 4]
    assert verify(rec)
    rec = copy.deepcopy(oddg_certificates(2, 2)[0].to_json())
    rec["family"]["step"] = 3
    assert verify(rec)


def test_failed_condition_rejected_at_construction():
    with pytest.raises(ValueError, match="conditions fail"):
        BalancedCertificate(k=1, n=5, strategy="minimal", lift=LiftParameters(()), conditions=[Condition("x", 1, 2)])


def test_csv_json_round_trip():
    records = [c.to_json() for c in CORPUS]
    assert certificates_from_csv(certificates_to_csv(records)) == records
