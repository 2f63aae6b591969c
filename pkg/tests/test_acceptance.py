"""Acceptance criteria 1-8, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` for the summary alone.
"""

import io
import json
import os
import sys
import time
from contextlib import redirect_stdout
from fractions import Fraction

import pytest

from scrollcert.cli import main as cli_main
from scrollcert.matching import (
    SearchBounds,
    beta_family_solver,
    curve_normal_stats,
    expected_degree,
    minimal_scroll_slope,
    oddg_certificates,
    solve_k1_odd,
)
from scrollcert.oracle import DEFAULT_PRIME, FieldConfig, verify_lemma_suite
from scrollcert.schubert import remainder_R
from scrollcert.verify import verify


def timed(fn):
    t = time.perf_counter()
    ok, detail = fn()
    return ok, detail, time.perf_counter() - t


def criterion_1():
    st = curve_normal_stats(2, 1, 3)
    ok = st.max_rulings == 3 and expected_degree(3, 1, 3) == 2
    return ok, f"max_rulings={st.max_rulings}, expected_degree={expected_degree(3, 1, 3)}"


def criterion_2():
    bad = []
    for n in range(3, 52):
        s, f = minimal_scroll_slope(n)
        want_f = (n + 1) // 2 if n % 2 else n // 2
        want_q = (n + 3) // 2 if n % 2 else n // 2 + 1
        if s != Fraction(n * n - 3, 2 * n - 3) or f != want_f or curve_normal_stats(n - 1, 1, n).max_rulings != want_q:
            bad.append(n)
    return not bad, f"mismatches={bad}"


def criterion_3():
    bad = []
    count = 0
    for n in range(3, 41):
        for k in range(1, (n - 1) // 2 + 1):
            count += 1
            q, r = divmod(n + 1, k + 1)
            if q - 2 + r * (n - k) != ((n - k) * (n + 1) - 2) % ((n - k) * (k + 1) - 1) or remainder_R(k, n).R != q - 2 + r * (n - k):
                bad.append((k, n))
    return not bad, f"{count} pairs, mismatches={bad}"


def _oddg_corpus():
    return [c for k in range(1, 7) for c in oddg_certificates(k, 10)]


def criterion_4():
    bad = []
    for c in _oddg_corpus():
        k = c.k
        r = (c.degree - 1) // k
        s0 = c.slopes["s0"]
        s0_ok = s0 == 2 if k >= 2 else s0 is None  # k = 1: Sigma_0 is a line, s0 undefined
        if c.degree != r * k + 1 or c.slopes["s+"] != 2 or not s0_ok or c.slopes["N|C0"] != [1] * (2 * k) + [0]:
            bad.append((k, r))
    n = len(_oddg_corpus())
    return not bad and n == 60, f"{n} certificates, bad={bad}"


def _beta_corpus():
    b = SearchBounds(20, 20, 1, 10)
    return beta_family_solver(3, 8, 3, b), beta_family_solver(1, 5, 3, b)


def criterion_5():
    a, b = _beta_corpus()
    ok = len(a) == 1 and a[0].lift.e == (7, 3) and a[0].slopes["s0"] == 5
    ok = ok and (a[0].family.base, a[0].family.step) == (5, 10)
    ok = ok and len(b) == 1 and b[0].lift.e == (3, 5) and b[0].slopes["s0"] == 7
    ok = ok and (b[0].family.base, b[0].family.step) == (4, 8)
    return ok, f"(8,3,3)->{[c.lift.e for c in a]}, (5,1,3)->{[c.lift.e for c in b]}"


def criterion_6():
    cfg = FieldConfig(p=DEFAULT_PRIME, trials=3)
    workers = min(4, os.cpu_count() or 1)
    t = time.perf_counter()
    rep = verify_lemma_suite(5, 0, 4, 10, 12, cfg, workers=workers)
    dt = time.perf_counter() - t
    limit = 120 if workers > 1 else 600
    ok = rep.checks_run > 0 and not rep.failures and rep.low_prime_problems == 0 and dt < limit
    return ok, f"{rep.checks_run} checks, {len(rep.failures)} failures, {workers} workers, {dt:.1f}s"


def criterion_7():
    odd = solve_k1_odd(7, SearchBounds(200, 400, 200, 10))
    a, b = _beta_corpus()
    certs = _oddg_corpus() + a + b + odd
    bad = [c.strategy for c in certs if verify(json.loads(json.dumps(c.to_json())))]
    return bool(odd) and not bad, f"{len(certs)} certificates ({len(odd)} from n=7), {len(bad)} failed"


def _cli_bytes(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv)
    return code, buf.getvalue().encode()


def criterion_8():
    configs = [
        ["certify", "--k", "2", "--n", "7", "--max-e0", "20", "--max-e1", "20", "--max-eplus", "20"],
        ["certify", "--k", "1", "--n", "10", "--format", "csv"],
        ["oracle", "--max-rank", "3", "--degree-hi", "3", "--m-max", "4", "--ell-max", "5", "--seed", "7"],
        ["examples", "--only", "beta,oddg"],
    ]
    same = [_cli_bytes(c) == _cli_bytes(c) for c in configs]
    return all(same), f"{sum(same)}/{len(same)} configurations byte-identical"


CRITERIA = [
    (1, "quadric baseline", criterion_1, 0.001),
    (2, "minimal-scroll slopes", criterion_2, 1),
    (3, "R(k,n) identity", criterion_3, 1),
    (4, "oddG degrees rk+1", criterion_4, 1),
    (5, "beta-family isolated solutions", criterion_5, 5),
    (6, "oracle matches predictors", criterion_6, None),
    (7, "certificate round-trip", criterion_7, 30),
    (8, "deterministic reports", criterion_8, None),
]


def evaluate(num):
    _, name, fn, budget = CRITERIA[num - 1]
    ok, detail, dt = timed(fn)
    if budget is not None and dt >= budget:
        ok = False
        detail += f"; over time budget {budget}s"
    line = f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} [{dt:.3f}s] {detail}"
    return ok, line


@pytest.mark.parametrize("num", [c[0] for c in CRITERIA])
def test_criterion(num, capsys):
    ok, line = evaluate(num)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(c[0]) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
