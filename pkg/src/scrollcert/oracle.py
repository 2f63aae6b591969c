"""Brute-force splitting types of generic kernels.

A "sufficiently general" map out of ``E = O(a_1) + ... + O(a_r)`` is realized
by random data over GF(p): polynomials for a map to ``O(ell)``, or random
points and covectors for a map onto a skyscraper sheaf.  The kernel ``K`` is
recovered from ``c(t) = h^0(K(t))``: ``c(t) - c(t-1)`` counts the summands of
``K`` of degree at least ``-t``.
"""

from __future__ import annotations

import hashlib
import itertools
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Union

import numpy as np

from . import linalg
from .bundles import (
    SplittingType,
    is_balanced,
    is_perfect,
    kernel_line_threshold,
    plus_trivial_source,
    predict_kernel_line,
    predict_kernel_plus_trivial,
    predict_kernel_torsion,
    unbalanced_degree,
)

DEFAULT_PRIME = 1_048_583


class OracleError(RuntimeError):
    pass


class NonGenericError(OracleError):
    pass


class KernelSanityError(OracleError):
    pass


@dataclass(frozen=True)
class LineTarget:
    ell: int


@dataclass(frozen=True)
class TorsionTarget:
    m: int


Target = Union[LineTarget, TorsionTarget]


@dataclass(frozen=True)
class GenericMapProblem:
    source: SplittingType
    target: Target

    def __post_init__(self):
        if isinstance(self.target, LineTarget):
            if self.source.rank == 0:
                raise ValueError("line target needs a nonzero source")
            if self.target.ell < self.source.degrees[0]:
                raise ValueError("line target degree must be at least max(source degrees)")
        elif isinstance(self.target, TorsionTarget):
            if self.target.m < 0:
                raise ValueError("number of points must be nonnegative")
            if self.source.rank == 0 and self.target.m > 0:
                raise ValueError("zero bundle admits no surjection onto torsion")
        else:
            raise TypeError(f"unknown target {self.target!r}")

    def expected_rank(self) -> int:
        if isinstance(self.target, LineTarget):
            return self.source.rank - 1
        return self.source.rank

    def expected_degree(self) -> int:
        if isinstance(self.target, LineTarget):
            return self.source.degree - self.target.ell
        return self.source.degree - self.target.m

    def degree_window(self) -> tuple[int, int]:
        """Bounds every summand of the kernel must satisfy."""
        hi = self.source.degrees[0] if self.source.rank else 0
        if isinstance(self.target, TorsionTarget):
            # E(-p_1-...-p_m) sits inside K with the same rank
            lo = (self.source.degrees[-1] if self.source.rank else 0) - self.target.m
        else:
            lo = self.expected_degree() - max(self.expected_rank() - 1, 0) * hi
        return lo, hi

    def key(self) -> str:
        kind = "line" if isinstance(self.target, LineTarget) else "torsion"
        value = self.target.ell if kind == "line" else self.target.m
        return f"{list(self.source.degrees)}|{kind}|{value}"

    def to_json(self) -> dict:
        if isinstance(self.target, LineTarget):
            target = {"line": self.target.ell}
        else:
            target = {"torsion": self.target.m}
        return {"source": self.source.to_json(), "target": target}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if p % q == 0:
            return p == q
    return all(p % q for q in range(17, math.isqrt(p) + 1, 2))


@dataclass(frozen=True)
class FieldConfig:
    p: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    exact: bool = False
    backend: str | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if not self.exact:
            if not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
            if self.p >= linalg.MAX_PRIME:
                raise ValueError("prime must be below 2**31")

    def genericity_ok(self, problem: GenericMapProblem) -> bool:
        """Whether p clears the size margin that keeps bad samples unlikely."""
        if self.exact:
            return True
        ell = problem.target.ell if isinstance(problem.target, LineTarget) else 0
        m = problem.target.m if isinstance(problem.target, TorsionTarget) else 0
        size = sum(abs(a) for a in problem.source) + abs(ell) + m + problem.source.rank
        return self.p > 2 * size * size

    def rng_for(self, problem: GenericMapProblem, trial: int) -> random.Random:
        digest = hashlib.sha256(f"{self.seed}|{problem.key()}|{trial}".encode()).digest()
        return random.Random(int.from_bytes(digest[:8], "big"))


def section_dim(d: int) -> int:
    """h^0(O(d)) on P^1."""
    return d + 1 if d >= 0 else 0


def _rank(M, cfg: FieldConfig) -> int:
    if cfg.exact:
        return linalg.rank_exact(M.tolist() if isinstance(M, np.ndarray) else M)
    return linalg.rank_mod_p(M, cfg.p, cfg.backend)


def _sample(cfg: FieldConfig, rng: random.Random, nonzero: bool = False) -> int:
    if cfg.exact:
        v = rng.randrange(-10**6, 10**6)
        return v if v or not nonzero else 1
    return rng.randrange(1 if nonzero else 0, cfg.p)


def _torsion_counts(problem, cfg, rng, ts):
    degs = problem.source.degrees
    m = problem.target.m
    if cfg.exact:
        points = rng.sample(range(-10**6, 10**6), m)
    else:
        points = rng.sample(range(cfg.p), m)
    covectors = [[_sample(cfg, rng, nonzero=True) for _ in degs] for _ in points]
    dtype = object if cfg.exact else np.int64
    top = max(degs) + ts[-1] + 1 if degs else 0
    powers = np.ones((m, max(top, 1)), dtype=dtype)
    for j in range(1, top):
        powers[:, j] = powers[:, j - 1] * np.array(points, dtype=dtype)
        if not cfg.exact:
            powers[:, j] %= cfg.p
    counts = []
    for t in ts:
        n = sum(section_dim(a + t) for a in degs)
        if n == 0 or m == 0:
            counts.append(n)
            continue
        blocks = []
        for i, a in enumerate(degs):
            h = section_dim(a + t)
            if h:
                w = np.array([cov[i] for cov in covectors], dtype=dtype)[:, None]
                block = w * powers[:, :h]
                blocks.append(block if cfg.exact else block % cfg.p)
        counts.append(n - _rank(np.hstack(blocks), cfg))
    return counts


def _line_counts(problem, cfg, rng, ts):
    degs = problem.source.degrees
    ell = problem.target.ell
    dtype = object if cfg.exact else np.int64
    polys = [np.array([_sample(cfg, rng) for _ in range(ell - a + 1)], dtype=dtype) for a in degs]
    counts = []
    for t in ts:
        n = sum(section_dim(a + t) for a in degs)
        rows = section_dim(ell + t)
        if n == 0:
            counts.append(0)
            continue
        if rows == 0:
            counts.append(n)
            continue
        M = np.zeros((rows, n), dtype=dtype)
        col = 0
        for a, phi in zip(degs, polys):
            for j in range(section_dim(a + t)):
                M[j:j + len(phi), col] = phi
                col += 1
        counts.append(n - _rank(M, cfg))
    return counts


def scan_window(problem: GenericMapProblem) -> list[int]:
    lo, hi = problem.degree_window()
    return list(range(-hi - 2, -lo + 2))


def section_counts(problem: GenericMapProblem, cfg: FieldConfig, trial: int = 0) -> tuple[list[int], list[int]]:
    """``(ts, c(t))`` for one random realization of the map."""
    ts = scan_window(problem)
    rng = cfg.rng_for(problem, trial)
    if isinstance(problem.target, LineTarget):
        return ts, _line_counts(problem, cfg, rng, ts)
    return ts, _torsion_counts(problem, cfg, rng, ts)


def recover_type(ts: list[int], counts: list[int], rank: int) -> SplittingType:
    c = dict(zip(ts, counts))
    if c[ts[0]] != 0 or c[ts[1]] != 0:
        raise KernelSanityError("kernel has sections below the admissible window")
    f = {t: c[t] - c[t - 1] for t in ts[1:]}
    steps = [f[t] for t in ts[1:]]
    if any(x < 0 for x in steps) or any(b < a for a, b in zip(steps, steps[1:])):
        raise KernelSanityError("h^0 differences not monotone; map not surjective / kernel not locally free")
    if steps[-1] != rank or steps[-2] != rank:
        raise KernelSanityError("map not surjective / kernel not locally free")
    degrees = []
    for t in ts[2:]:
        degrees += [-t] * (f[t] - f[t - 1])
    return SplittingType(degrees)


def oracle_kernel_type(problem: GenericMapProblem, cfg: FieldConfig = FieldConfig()) -> SplittingType:
    rank = problem.expected_rank()
    found = None
    for trial in range(cfg.trials):
        ts, counts = section_counts(problem, cfg, trial)
        K = recover_type(ts, counts, rank)
        if K.rank != rank or K.degree != problem.expected_degree():
            raise KernelSanityError("map not surjective / kernel not locally free")
        if found is not None and K != found:
            raise NonGenericError("non-generic sample suspected; increase p or trials")
        found = K
    return found


# --- exhaustive lemma suite -------------------------------------------------


@dataclass
class SuiteReport:
    checks_run: int = 0
    failures: list = field(default_factory=list)
    p: int = DEFAULT_PRIME
    seed: int = 0
    trials: int = 3
    low_prime_problems: int = 0

    def to_json(self) -> dict:
        return {
            "checks_run": self.checks_run,
            "failures": self.failures,
            "p": self.p,
            "seed": self.seed,
            "trials": self.trials,
            "genericity_model": "failure probability per trial O(size^2 / p); "
            "caught by strict agreement across trials",
            "low_prime_problems": self.low_prime_problems,
        }


def splitting_types(max_rank: int, degree_lo: int, degree_hi: int):
    for r in range(1, max_rank + 1):
        for combo in itertools.combinations_with_replacement(range(degree_hi, degree_lo - 1, -1), r):
            yield SplittingType(combo)


def enumerate_problems(max_rank, degree_lo, degree_hi, m_max, ell_max):
    """All suite cases as ``(lemma, problem, extra)`` triples in a fixed order."""
    for E in splitting_types(max_rank, degree_lo, degree_hi):
        for m in range(m_max + 1):
            yield "torsion", GenericMapProblem(E, TorsionTarget(m)), None
        if E.rank >= 2:
            for ell in range(E.degrees[0], ell_max + 1):
                yield "line", GenericMapProblem(E, LineTarget(ell)), None
        if is_balanced(E) and E.degrees[-1] >= 0:
            for a in range(0, max_rank - E.rank + 1):
                src = plus_trivial_source(E, a)
                if src.rank < 2:
                    continue
                for b in range(max(src.degrees[0], 0), ell_max + 1):
                    yield "plus_trivial", GenericMapProblem(src, LineTarget(b)), (E, a)


def check_problem(lemma: str, problem: GenericMapProblem, extra, cfg: FieldConfig) -> list[dict]:
    """Oracle run plus every lemma conclusion and predictor agreement; returns failures."""
    record = {"lemma": lemma, "problem": problem.to_json()}
    try:
        K = oracle_kernel_type(problem, cfg)
    except OracleError as exc:
        return [dict(record, reason=str(exc))]
    failures = []
    E = problem.source
    if lemma == "torsion":
        m = problem.target.m
        predicted = predict_kernel_torsion(E, m)
        u = unbalanced_degree(E).u
        if K.rank:
            if m >= u and not is_balanced(K):
                failures.append("kernel not balanced although m >= u(E)")
            if m == u and not is_perfect(K):
                failures.append("kernel not perfect although m = u(E)")
            if not is_balanced(K) and unbalanced_degree(K).u != u - m:
                failures.append("kernel neither balanced nor u(K) = u(E) - m")
    else:
        ell = problem.target.ell
        predicted = predict_kernel_line(E, ell)
        if ell >= kernel_line_threshold(E) and not is_balanced(K):
            failures.append("kernel not balanced although ell >= deg - (rk-1) mu_min")
        if lemma == "plus_trivial":
            base, a = extra
            if predict_kernel_plus_trivial(base, a, ell) is True and not is_balanced(K):
                failures.append("kernel not balanced although b >= (a-1) s")
            record["base"] = base.to_json()
            record["a"] = a
    if K != predicted:
        failures.append("oracle disagrees with predictor")
    return [
        dict(record, reason=reason, oracle=K.to_json(), predicted=predicted.to_json())
        for reason in failures
    ]


def _check_chunk(args):
    cases, cfg = args
    out = []
    for lemma, problem, extra in cases:
        out.append((check_problem(lemma, problem, extra, cfg), cfg.genericity_ok(problem)))
    return out


def verify_lemma_suite(
    max_rank: int,
    degree_lo: int,
    degree_hi: int,
    m_max: int,
    ell_max: int,
    cfg: FieldConfig = FieldConfig(),
    workers: int = 1,
) -> SuiteReport:
    report = SuiteReport(p=cfg.p, seed=cfg.seed, trials=cfg.trials)
    cases = list(enumerate_problems(max_rank, degree_lo, degree_hi, m_max, ell_max))
    if workers > 1 and len(cases) > 1:
        size = max(1, len(cases) // (workers * 8))
        chunks = [(cases[i:i + size], cfg) for i in range(0, len(cases), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for chunk in pool.map(_check_chunk, chunks) for r in chunk]
    else:
        results = _check_chunk((cases, cfg))
    for failures, ok in results:
        report.checks_run += 1
        report.failures.extend(failures)
        report.low_prime_problems += not ok
    return report

