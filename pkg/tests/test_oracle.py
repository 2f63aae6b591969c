import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from scrollcert import linalg
from scrollcert.bundles import SplittingType as S, plus_trivial_source, is_balanced, predict_kernel_torsion
from scrollcert.oracle import (
    FieldConfig,
    GenericMapProblem,
    LineTarget,
    KernelSanityError,
    NonGenericError,
    TorsionTarget,
    oracle_kernel_type,
    section_dim,
    verify_lemma_suite,
)


def test_section_dim():
    assert [section_dim(3), section_dim(-1), section_dim(0)] == [4, 0, 1]


@pytest.mark.parametrize(
    "source,target,want",
    [
        ([2, 2], TorsionTarget(1), [2, 1]),
        ([3, 1, 1], TorsionTarget(2), [1, 1, 1]),
        ([2, 1, 1], LineTarget(3), [1, 0]),
        ([4, 0], TorsionTarget(3), [1, 0]),
    ],
)
def test_oracle_examples(source, target, want):
    assert oracle_kernel_type(GenericMapProblem(S(source), target)) == S(want)


def test_oracle_exact_mode_agrees():
    prob = GenericMapProblem(S([3, 1, 0]), TorsionTarget(3))
    assert oracle_kernel_type(prob, FieldConfig(exact=True, trials=1)) == oracle_kernel_type(prob)


def test_plus_trivial_instance():
    K = oracle_kernel_type(GenericMapProblem(plus_trivial_source(S([1, 1]), 2), LineTarget(1)))
    assert is_balanced(K)


def test_field_config_validation():
    with pytest.raises(ValueError):
        FieldConfig(p=100)
    with pytest.raises(ValueError):
        FieldConfig(p=2_147_483_659)
    with pytest.raises(ValueError):
        FieldConfig(trials=0)


def test_tiny_prime_fails_loudly():
    # over GF(3) random maps degenerate; the oracle must refuse rather than answer
    prob = GenericMapProblem(S([1, 1, 1]), LineTarget(3))
    with pytest.raises(NonGenericError):
        oracle_kernel_type(prob, FieldConfig(p=3, seed=2))
    with pytest.raises(KernelSanityError):
        oracle_kernel_type(prob, FieldConfig(p=3, seed=0))


def test_seed_independence():
    prob = GenericMapProblem(S([4, 2, 1]), LineTarget(5))
    assert {oracle_kernel_type(prob, FieldConfig(seed=s)) for s in range(4)} == {S([1, 1])}


def test_small_suite_clean():
    rep = verify_lemma_suite(3, 0, 3, 6, 8, FieldConfig())
    assert rep.checks_run > 0 and rep.failures == [] and rep.low_prime_problems == 0


def test_empty_suite():
    assert verify_lemma_suite(0, 0, 4, 10, 12).checks_run == 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 9), st.integers(1, 9), st.integers(0, 2**32))
def test_backends_agree(r, c, seed):
    rng = np.random.default_rng(seed)
    p = 1_048_583
    M = rng.integers(0, 5, size=(r, c), dtype=np.int64)
    ranks = {linalg.rank_mod_p(M, p, backend="python"), linalg.rank_exact(M.tolist())}
    if linalg.BACKEND == "cython":
        ranks.add(linalg.rank_mod_p(M, p, backend="cython"))
    assert len(ranks) == 1


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=1, max_size=4), st.integers(0, 6))
def test_oracle_matches_torsion_predictor(degs, m):
    E = S(degs)
    assert oracle_kernel_type(GenericMapProblem(E, TorsionTarget(m))) == predict_kernel_torsion(E, m)


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['scrollcert._rank_ext'] = None\n"
        "from scrollcert import linalg\n"
        "assert linalg.BACKEND == 'python'\n"
        "assert linalg.rank_mod_p([[1, 2], [2, 4]], 7) == 1\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)


def test_below_line_threshold_example():
    # ell = 1 is under the certified threshold 2, yet the generic kernel {1,0,0} is still balanced
    from scrollcert.bundles import kernel_line_threshold, predict_kernel_line

    E = S([1, 1, 0, 0])
    assert kernel_line_threshold(E) == 2
    K = oracle_kernel_type(GenericMapProblem(E, LineTarget(1)))
    assert K == predict_kernel_line(E, 1) == S([1, 0, 0]) and is_balanced(K)
