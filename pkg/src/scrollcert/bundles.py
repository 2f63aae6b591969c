"""Splitting types of vector bundles on P^1.

A bundle ``O(a_1) + ... + O(a_r)`` is stored as the descending tuple of its
degrees.  Everything here is exact: slopes are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple

DELEGATED = "delegated-to-oracle"


class SlopeStats(NamedTuple):
    degree: int
    rank: int
    slope: Fraction
    floor_slope: int


class UnbalancedDegree(NamedTuple):
    u: int
    mu_min: int
    r_min: int


@dataclass(frozen=True, order=False)
class SplittingType:
    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int] = ()):
        object.__setattr__(
            self, "degrees", tuple(sorted((int(d) for d in degrees), reverse=True))
        )

    @classmethod
    def from_json(cls, data) -> "SplittingType":
        return cls(data)

    def to_json(self) -> list[int]:
        return list(self.degrees)

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __repr__(self) -> str:
        return f"SplittingType({list(self.degrees)})"

    # algebra, all returning new values
    def dual(self) -> "SplittingType":
        return SplittingType(-d for d in self.degrees)

    def twist(self, t: int) -> "SplittingType":
        return SplittingType(d + t for d in self.degrees)

    def __add__(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(self.degrees + other.degrees)

    def __mul__(self, other: "SplittingType") -> "SplittingType":
        return SplittingType(a + b for a in self.degrees for b in other.degrees)

    def __rmul__(self, count: int) -> "SplittingType":
        # 3 * E is E + E + E
        if not isinstance(count, int) or count < 0:
            return NotImplemented
        return SplittingType(self.degrees * count)


def _require_nonempty(E: SplittingType) -> None:
    if E.rank == 0:
        raise ValueError("zero bundle has no slope")


def slope_stats(E: SplittingType) -> SlopeStats:
    _require_nonempty(E)
    s = Fraction(E.degree, E.rank)
    return SlopeStats(E.degree, E.rank, s, s.numerator // s.denominator)


def slope(E: SplittingType) -> Fraction:
    return slope_stats(E).slope


def is_balanced(E: SplittingType) -> bool:
    """max - min <= 1; for split bundles on P^1 this is H^1(E (x) E^*) = 0."""
    _require_nonempty(E)
    return E.degrees[0] - E.degrees[-1] <= 1


def is_perfect(E: SplittingType) -> bool:
    _require_nonempty(E)
    return E.degrees[0] == E.degrees[-1]


def unbalanced_degree(E: SplittingType) -> UnbalancedDegree:
    """``u(E) = deg(E) - rk(E) * mu_min(E)`` with the minimal degree and its multiplicity."""
    _require_nonempty(E)
    mu_min = E.degrees[-1]
    return UnbalancedDegree(E.degree - E.rank * mu_min, mu_min, E.degrees.count(mu_min))


def bundle_algebra(E1: SplittingType, E2: SplittingType | None, op: str, t: int = 0) -> SplittingType:
    if op == "dual":
        return E1.dual()
    if op == "twist":
        return E1.twist(t)
    if op == "direct_sum":
        return E1 + E2
    if op == "tensor":
        return E1 * E2
    raise ValueError(f"unknown bundle operation {op!r}")


def balanced_of(degree: int, rank: int) -> SplittingType:
    if rank <= 0:
        raise ValueError("rank must be positive")
    q, rem = divmod(degree, rank)
    return SplittingType([q + 1] * rem + [q] * (rank - rem))


def extension_balance(E1: SplittingType, E2: SplittingType) -> tuple[bool, int | None]:
    """Middle term of a general extension of E2 by E1 is balanced when the floors match."""
    f1 = slope_stats(E1).floor_slope
    f2 = slope_stats(E2).floor_slope
    if is_balanced(E1) and is_balanced(E2) and f1 == f2:
        return True, f1
    return False, None


def predict_kernel_torsion(E: SplittingType, m: int) -> SplittingType:
    """Generic kernel of ``E -> k_{p_1} + ... + k_{p_m}`` (distinct points).

    Each point lowers one summand of maximal degree by one.
    """
    if m < 0:
        raise ValueError("number of points must be nonnegative")
    if E.rank == 0:
        if m:
            raise ValueError("zero bundle admits no surjection onto torsion")
        return E
    degs = list(E.degrees)
    r = len(degs)
    # m single-point steps in closed form: peel the top down level by level
    for _ in range(m):
        i = 0
        # the descending order is preserved by lowering the last copy of the maximum
        while i + 1 < r and degs[i + 1] == degs[0]:
            i += 1
        degs[i] -= 1
    return SplittingType(degs)


def predict_kernel_line(E: SplittingType, ell: int) -> SplittingType:
    """Generic kernel of ``E -> O(ell)``: drop a top summand, then ``ell - a`` point steps."""
    if E.rank < 2:
        raise ValueError("line-target prediction needs rank >= 2")
    a = E.degrees[0]
    if ell < a:
        raise ValueError(
            "no general surjection with locally free kernel guaranteed; oracle required"
        )
    return predict_kernel_torsion(SplittingType(E.degrees[1:]), ell - a)


def kernel_line_threshold(E: SplittingType) -> int:
    """Smallest ell for which the kernel of a general ``E -> O(ell)`` is certified balanced."""
    return E.degree - (E.rank - 1) * E.degrees[-1]


def predict_kernel_plus_trivial(E: SplittingType, a: int, b: int) -> bool | str:
    """Kernel of a general ``E^* + a O -> O(b)`` for E balanced and globally generated.

    Returns ``True`` when ``b >= (a - 1) * slope(E)``; otherwise the claim is
    not made and :data:`DELEGATED` is returned.
    """
    if not is_balanced(E) or E.degrees[-1] < 0:
        raise ValueError("E must be balanced and globally generated")
    if a < 0:
        raise ValueError("a must be nonnegative")
    if b >= (a - 1) * slope(E):
        return True
    return DELEGATED


def plus_trivial_source(E: SplittingType, a: int) -> SplittingType:
    return E.dual() + SplittingType([0] * a)
