"""Schubert partitions, break points, flag-resolution stages and normal-bundle pieces.

Conventions: ``G(k, n)`` is the Grassmannian of projective k-planes in P^n,
so ``dim G(k, n) = (k + 1)(n - k)``.  A partition ``a_0 >= ... >= a_k`` with
``n - k >= a_0`` and ``a_k >= 0`` has codimension ``sum(a)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bundles import SplittingType, balanced_of


@dataclass(frozen=True)
class SchubertPartition:
    k: int
    n: int
    a: tuple[int, ...]

    def __post_init__(self):
        a = tuple(int(x) for x in self.a)
        object.__setattr__(self, "a", a)
        if self.k < 0 or self.n <= self.k:
            raise ValueError(f"need 0 <= k < n, got k={self.k}, n={self.n}")
        if len(a) != self.k + 1:
            raise ValueError(f"partition must have k+1 = {self.k + 1} parts")
        if a[0] > self.n - self.k or a[-1] < 0:
            raise ValueError("parts must lie in [0, n-k]")
        if any(x < y for x, y in zip(a, a[1:])):
            raise ValueError("partition must be weakly decreasing")

    @property
    def codim(self) -> int:
        return sum(self.a)

    def to_json(self) -> dict:
        return {"k": self.k, "n": self.n, "a": list(self.a)}

    @classmethod
    def from_json(cls, data: dict) -> "SchubertPartition":
        return cls(data["k"], data["n"], tuple(data["a"]))


class BreakDecomposition(NamedTuple):
    breaks: tuple[int, ...]
    values: tuple[int, ...]

    @property
    def u(self) -> int:
        return len(self.breaks) - 1

    def block_sizes(self) -> tuple[int, ...]:
        prev = (-1,) + self.breaks[:-1]
        return tuple(b - p for b, p in zip(self.breaks, prev))


def break_points(P: SchubertPartition) -> BreakDecomposition:
    a = P.a + (-1,)
    breaks = tuple(i for i in range(P.k + 1) if a[i + 1] < a[i])
    dec = BreakDecomposition(breaks, tuple(P.a[i] for i in breaks))
    assert sum(s * v for s, v in zip(dec.block_sizes(), dec.values)) == P.codim
    return dec


def partitions_of_codim(k: int, n: int, A: int, limit: int | None = None) -> list[SchubertPartition]:
    """Every partition of codimension A, lexicographically largest first."""
    out: list[SchubertPartition] = []

    def rec(prefix, cap, remaining, slots):
        if limit is not None and len(out) >= limit:
            return
        if slots == 0:
            if remaining == 0:
                out.append(SchubertPartition(k, n, tuple(prefix)))
            return
        for v in range(min(cap, remaining), -1, -1):
            if v * slots < remaining:
                break
            rec(prefix + [v], v, remaining - v, slots - 1)

    rec([], n - k, A, k + 1)
    return out


# --- remainder and simple cycles ---------------------------------------------


class Remainder(NamedTuple):
    R: int
    q: int
    r: int


def remainder_R(k: int, n: int) -> Remainder:
    """Remainder of ``(n-k)(n+1) - 2`` modulo ``(n-k)(k+1) - 1``, computed two ways."""
    if k < 1 or 2 * k + 1 > n:
        raise ValueError(f"out of range: need 1 <= k and 2k+1 <= n, got k={k}, n={n}")
    q, r = divmod(n + 1, k + 1)
    direct = ((n - k) * (n + 1) - 2) % ((n - k) * (k + 1) - 1)
    closed = q - 2 + r * (n - k)
    assert direct == closed, (k, n, direct, closed)
    return Remainder(closed, q, r)


@dataclass(frozen=True)
class SimpleCycle:
    """The sub-Grassmannian ``G(k - alpha, n - alpha - beta)`` inside ``G(k, n)``."""

    k: int
    n: int
    alpha: int
    beta: int

    def __post_init__(self):
        if not (0 <= self.alpha <= self.k and 0 <= self.beta <= self.n - self.k):
            raise ValueError("need 0 <= alpha <= k and 0 <= beta <= n-k")

    @property
    def codim(self) -> int:
        return self.alpha * (self.n - self.k) + self.beta * (self.k + 1) - self.alpha * self.beta

    def partition(self) -> SchubertPartition:
        a = (self.n - self.k,) * self.alpha + (self.beta,) * (self.k + 1 - self.alpha)
        return SchubertPartition(self.k, self.n, a)

    def sub_grassmannian(self) -> tuple[int, int]:
        return self.k - self.alpha, self.n - self.alpha - self.beta

    def to_json(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta}


class SufficientCondition(NamedTuple):
    name: str
    fires: bool
    cycle: SimpleCycle | None
    member: bool | None


class AlphaBetaResult(NamedTuple):
    cycles: list[SimpleCycle]
    conditions: list[SufficientCondition]


def alphabeta_solutions(k: int, n: int, A: int) -> AlphaBetaResult:
    """All simple cycles of codimension A, with the two closed-form recipes checked."""
    if A < 1:
        return AlphaBetaResult([], [])
    cycles = [
        SimpleCycle(k, n, al, be)
        for al in range(k + 1)
        for be in range(n - k + 1)
        if al * (n - k) + be * (k + 1) - al * be == A
    ]
    conditions = []
    if 1 <= k and 2 * k + 1 <= n and A == remainder_R(k, n).R + 1:
        _, q, r = remainder_R(k, n)
        fires = (q - 1) % (k + 1 - r) == 0
        cyc = SimpleCycle(k, n, r, (q - 1) // (k + 1 - r)) if fires else None
        conditions.append(SufficientCondition("(k+1-r) | (q-1)", fires, cyc, cyc in cycles if fires else None))
        fires = (q - 1 + r * r) % (k + 1) == 0
        cyc = SimpleCycle(k, n, 0, A // (k + 1)) if fires else None
        conditions.append(SufficientCondition("q-1+r^2 = 0 mod k+1", fires, cyc, cyc in cycles if fires else None))
    return AlphaBetaResult(cycles, conditions)


# --- strict flag resolution --------------------------------------------------


class FlagStage(NamedTuple):
    index: int
    sub_rank: int  # rk S^i; the stage is G(sub_rank, F_i)
    ambient_rank: int  # rk F_i
    fibre_dim: int
    rank_Q: int
    rank_T: int
    rank_G: int
    dim_W: int


class FlagResolution(NamedTuple):
    stages: list[FlagStage]
    sigma0_is_point: bool
    exceptional_codims: list[int]

    @property
    def dimension(self) -> int:
        return sum(s.fibre_dim for s in self.stages)


def flag_stages(P: SchubertPartition) -> FlagResolution:
    dec = break_points(P)
    n, k = P.n, P.k
    stages = []
    for i, (ki, size, ai) in enumerate(zip(dec.breaks, dec.block_sizes(), dec.values)):
        ambient = n - k + size - ai
        stages.append(
            FlagStage(
                index=i,
                sub_rank=size,
                ambient_rank=ambient,
                fibre_dim=size * (ambient - size),
                rank_Q=n - k - ai,
                rank_T=ki + 1,
                rank_G=ai,
                dim_W=n + 1 - k + ki - ai,
            )
        )
    codims = [a - b + 1 for a, b in zip(dec.values, dec.values[1:])]
    assert all(c > 1 for c in codims), "resolution is not small"
    assert sum(s.sub_rank for s in stages) == k + 1
    assert stages[-1].rank_Q == n - k - dec.values[-1]
    assert sum(s.fibre_dim for s in stages) == (k + 1) * (n - k) - P.codim
    return FlagResolution(stages, dec.values[0] == n - k, codims)


# --- normal bundle -----------------------------------------------------------


class NormalPiece(NamedTuple):
    index: int
    rank: int
    degree: int  # tail + a_i e_i
    g: Fraction | None  # printed slope e_i/dk + tail/(dk a_i)
    tensor_degree: int  # dk tail + a_i e_i
    tensor_slope: Fraction | None  # e_i/dk + tail/a_i


class NormalGraded(NamedTuple):
    pieces: list[NormalPiece]
    rank: int
    degree: int
    tensor_degree: int
    discrepancy: bool

    def min_g(self, reading: str = "printed") -> Fraction:
        vals = [p.g if reading == "printed" else p.tensor_slope for p in self.pieces if p.rank]
        return min(vals)

    def deg(self, reading: str = "printed") -> int:
        return self.degree if reading == "printed" else self.tensor_degree


def normal_graded(P: SchubertPartition, e) -> NormalGraded:
    """Graded pieces ``S^{i*} (x) G_i`` of the normal bundle restricted to a lifted curve.

    ``e[i]`` is the degree of ``S^{i*}``.  Both the printed slope ``g_i`` and
    the tensor-rule slope are returned; ``discrepancy`` is set when they differ.
    """
    dec = break_points(P)
    e = tuple(int(x) for x in e)
    if len(e) != dec.u + 1:
        raise ValueError(f"need {dec.u + 1} degrees, got {len(e)}")
    sizes = dec.block_sizes()
    for i, (ei, dk) in enumerate(zip(e, sizes)):
        if ei < 0:
            raise ValueError("degrees must be nonnegative")
        if ei % dk:
            raise ValueError(f"block size {dk} must divide e_{i} = {ei}")
    pieces = []
    for i, (ei, dk, ai) in enumerate(zip(e, sizes, dec.values)):
        tail = sum(e[i + 1:])
        rank = dk * ai
        if rank:
            g = Fraction(ei, dk) + Fraction(tail, dk * ai)
            ts = Fraction(ei, dk) + Fraction(tail, ai)
        else:
            g = ts = None
        pieces.append(NormalPiece(i, rank, tail + ai * ei, g, dk * tail + ai * ei, ts))
    degree = sum(p.degree for p in pieces)
    assert degree == sum(i * ei + ai * ei for i, (ei, ai) in enumerate(zip(e, dec.values)))
    tensor_degree = sum(p.tensor_degree for p in pieces)
    disc = any(p.g != p.tensor_slope for p in pieces)
    return NormalGraded(pieces, sum(p.rank for p in pieces), degree, tensor_degree, disc)


def simple_cycle_normal(cycle: SimpleCycle, e0: int) -> SplittingType:
    """Graded pieces ``alpha Q + alpha beta O + beta S^*`` on a general curve of degree e0."""
    k_sub, n_sub = cycle.sub_grassmannian()
    q_rank = n_sub - k_sub
    s_rank = k_sub + 1
    out = SplittingType([0] * (cycle.alpha * cycle.beta))
    if q_rank:
        out = out + cycle.alpha * balanced_of(e0, q_rank)
    if s_rank:
        out = out + cycle.beta * balanced_of(e0, s_rank)
    return out
