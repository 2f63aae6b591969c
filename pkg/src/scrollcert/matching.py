"""Slope formulas and exhaustive slope-matching searches.

Every solver walks a bounded integer grid, evaluates the relevant slopes as
exact fractions, and emits a :class:`BalancedCertificate` for each point where
all matching conditions hold.  No floating point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import NamedTuple

from .bundles import SplittingType, is_balanced
from .certificate import BalancedCertificate, Condition, DegreeFamily, LiftParameters
from .schubert import (
    SchubertPartition,
    SimpleCycle,
    break_points,
    normal_graded,
    remainder_R,
    simple_cycle_normal,
)

READINGS = ("printed", "tensor")

FLAG_GI = (
    "normal-bundle pieces: printed g_i and degree e_{i+1}+...+e_u+a_i e_i "
    "differ from the tensor rule when a block has size > 1"
)
FLAG_Q_DENOMINATOR = (
    "q uses rk N = (k+1)(n-k)-1; printed denominator (k+1)(n+1)-1 recorded alongside"
)


def floor(x: Fraction) -> int:
    return x.numerator // x.denominator


@dataclass(frozen=True)
class SearchBounds:
    max_e0: int = 40
    max_e1: int = 40
    max_eplus: int = 40
    max_r: int = 10

    def __post_init__(self):
        for name in ("max_e0", "max_e1", "max_eplus", "max_r"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


# --- basic degree and slope arithmetic --------------------------------------


class CurveNormalStats(NamedTuple):
    degN: int
    rkN: int
    max_rulings: int
    q_printed: int


def curve_normal_stats(e: int, k: int, n: int) -> CurveNormalStats:
    """Normal-bundle degree and rank of a degree-e rational curve in G(k, n).

    ``max_rulings`` is the largest q with ``chi(N(-qP)) >= 0``.
    """
    if e < 1 or not 0 <= k < n:
        raise ValueError("need e >= 1 and 0 <= k < n")
    degN = e * (n + 1) - 2
    rkN = (k + 1) * (n - k) - 1
    if rkN < 1:
        raise ValueError("G(k, n) is a curve; normal bundle has rank 0")
    printed = (k + 1) * (n + 1) - 1
    return CurveNormalStats(degN, rkN, degN // rkN + 1, degN // printed)


def expected_degree(q: int, k: int, n: int) -> int:
    if q < 1:
        raise ValueError("q must be positive")
    num = (q - 1) * ((k + 1) * (n - k) - 1) + 2
    return -(-num // (n + 1))


def minimal_scroll_slope(n: int) -> tuple[Fraction, int]:
    if n < 3:
        raise ValueError("n must be at least 3")
    s = Fraction(n * n - 3, 2 * n - 3)
    f = floor(s)
    assert f == ((n + 1) // 2 if n % 2 else n // 2)
    return s, f


# --- which degrees are already known to carry balanced curves ----------------


class BalancedSource(NamedTuple):
    rule: str
    certificate: BalancedCertificate | None = None


def balanced_degree_source(k: int, n: int, e: int, bounds: SearchBounds | None = None) -> BalancedSource | None:
    """A reason why G(k, n) contains a balanced rational curve of degree e, if one is known.

    Rules: a point carries only degree 0; lines and curves of degree >= n in
    P^n; minimal curves (degree n-k); the degrees rk+1 in G(k, 2k+1); and,
    for k = 1, whatever the k = 1 solvers certify within ``bounds``.
    """
    if n == k:
        return BalancedSource("point") if e == 0 else None
    if e < 1:
        return None
    if 2 * k + 1 > n:
        k = n - k - 1
    if k == 0:
        return BalancedSource("projective") if e == 1 or e >= n else None
    if e == n - k:
        return BalancedSource("minimal")
    if n == 2 * k + 1 and e >= k + 1 and (e - 1) % k == 0:
        return BalancedSource("oddG")
    if k == 1 and bounds is not None:
        cert = _k1_certified(n, bounds).get(e)
        if cert is not None:
            return BalancedSource("sub-certificate", cert)
    return None


@lru_cache(maxsize=None)
def _k1_certified(n: int, bounds: SearchBounds) -> dict[int, BalancedCertificate]:
    try:
        certs = solve_k1(n, bounds)
    except ValueError:
        return {}
    out: dict[int, BalancedCertificate] = {}
    for c in certs:
        out.setdefault(c.degree, c)
    return out


def _source_condition(name: str, e0: int, src: BalancedSource, where: str) -> Condition:
    return Condition(name, e0, f"{src.rule} in {where}", "certified")


def _subcerts(src: BalancedSource | None) -> list[BalancedCertificate]:
    return [src.certificate] if src is not None and src.certificate is not None else []


def minimal_certificate(k: int, n: int) -> BalancedCertificate:
    """The minimal curve C_{k,n} of degree n-k; its normal slope has floor q."""
    R, q, r = remainder_R(k, n)
    s = Fraction((n - k) * (n + 1) - 2, (n - k) * (k + 1) - 1)
    return BalancedCertificate(
        k=k,
        n=n,
        strategy="minimal",
        lift=LiftParameters(e=()),
        conditions=[Condition("[slope N] = q", floor(s), q)],
        slopes={"s": s, "R": R},
        degree=n - k,
    )


# --- k = 1 ------------------------------------------------------------------


def odd_conditions(n0: int, e0: int, e1: int, eplus: int) -> dict[str, tuple[int, int]]:
    left = e0 + (2 * (e0 - 1)) // (n0 - 1)
    return {
        "odd-cond1": (e1, e0),
        "odd-cond2": (left, e1 + (e0 + e1) // (2 * n0)),
        "odd-cond3": (left, e0 + eplus + eplus // (n0 + 1)),
    }


def solve_k1_odd(n: int, bounds: SearchBounds) -> list[BalancedCertificate]:
    if n % 2 == 0 or n < 5:
        raise ValueError("solve_k1_odd needs odd n >= 5")
    n0 = (n - 1) // 2
    out = []
    for e0 in range(n0, bounds.max_e0 + 1):
        left = e0 + (2 * (e0 - 1)) // (n0 - 1)
        eplus_ok = [ep for ep in range(1, bounds.max_eplus + 1) if e0 + ep + ep // (n0 + 1) == left]
        if not eplus_ok:
            continue
        e1_ok = [e1 for e1 in range(e0, bounds.max_e1 + 1) if e1 + (e0 + e1) // (2 * n0) == left]
        for e1 in e1_ok:
            for ep in eplus_ok:
                cond = odd_conditions(n0, e0, e1, ep)
                flags = ["e_2 of the statement is identified with e_+"]
                if e1 % (2 * n0 * (n0 + 1)) == 0 and ep % (n0 + 1) == 0:
                    flags.append("divisibility-family member")
                out.append(
                    BalancedCertificate(
                        k=1,
                        n=n,
                        strategy="k1-odd",
                        lift=LiftParameters(e=(e0, e1), e_plus=ep),
                        conditions=[
                            Condition("e0 >= n0", e0, n0, ">="),
                            Condition("odd-cond1", *cond["odd-cond1"], ">="),
                            Condition("odd-cond2", *cond["odd-cond2"]),
                            Condition("odd-cond3", *cond["odd-cond3"]),
                        ],
                        slopes={
                            "s0": Fraction(e0 * (n0 + 1) - 2, n0 - 1),
                            "s1": e1 + Fraction(e0 + e1, 2 * n0),
                            "s+": e0 + ep + Fraction(ep, n0 + 1),
                        },
                        degree=e0 + e1 + (n - 2) * ep,
                        partition=(n0, 0),
                        flags=flags,
                    )
                )
    return out


def match4_sides(n1: int, e0: int, eplus: int) -> tuple[int, int]:
    return eplus + eplus // (6 * n1 - 2), (5 * e0 - 4) // (4 * n1 - 2)


def match4_parametrization(n1: int, j: int) -> dict:
    """Evaluate the closed-form choice e0 = j(4n1-2), e+ = (a-1)(6n1-2)+b against match4."""
    e0 = j * (4 * n1 - 2)
    a, b = divmod(5 * j - 1, 6 * n1 - 2)
    eplus = (a - 1) * (6 * n1 - 2) + b
    lhs, rhs = match4_sides(n1, e0, eplus) if eplus >= 0 else (None, (5 * e0 - 4) // (4 * n1 - 2))
    return {"n1": n1, "j": j, "e0": e0, "e_plus": eplus, "lhs": lhs, "rhs": rhs, "holds": lhs == rhs}


def solve_k1_div4(n: int, bounds: SearchBounds) -> list[BalancedCertificate]:
    if n % 4 or n < 8:
        raise ValueError("solve_k1_div4 needs n = 4 n1 with n1 >= 2")
    n1 = n // 4
    out = []
    for e0 in range(1, bounds.max_e0 + 1):
        src = balanced_degree_source(1, n1 + 1, e0, bounds)
        if src is None:
            continue
        rhs = (5 * e0 - 4) // (4 * n1 - 2)
        s_h = Fraction((n1 + 2) * e0 - 2, 2 * n1 - 1)
        for ep in range(1, bounds.max_eplus + 1):
            lhs = ep + ep // (6 * n1 - 2)
            if lhs != rhs:
                continue
            s_v = Fraction(e0, 2) + ep + Fraction(ep, 6 * n1 - 2)
            flags = ["match4 compares floors after removing e0/2 from both slopes"]
            if floor(s_h) != floor(s_v):
                flags.append("[s_h] != [s_v] for this odd e0")
            out.append(
                BalancedCertificate(
                    k=1,
                    n=n,
                    strategy="k1-div4",
                    lift=LiftParameters(e=(e0,), e_plus=ep),
                    conditions=[
                        _source_condition("C0 balanced in G(1, n1+1)", e0, src, f"G(1,{n1 + 1})"),
                        Condition("match4", lhs, rhs),
                    ],
                    slopes={"s_h": s_h, "s_v": s_v},
                    degree=e0 + (n - 2) * ep,
                    flags=flags,
                    sub_certificates=_subcerts(src),
                )
            )
    return out


def c2_balance_sides(n1: int, e0: int, e1: int, eplus: int, reading: str) -> tuple[int, int, int]:
    inner = eplus if reading == "e1+e+" else e0
    left = ((n1 + 2) * e1) // (n1 + 1) + e0 // (n1 + 1)
    middle = e0 + (2 * e0 - 2) // (n1 - 1)
    right = eplus + (eplus + 3 * n1 * (e1 + inner)) // (6 * n1 + 1)
    return left, middle, right


def solve_k1_div4plus2(n: int, bounds: SearchBounds, readings=("e1+e+", "e1+e0")) -> list[BalancedCertificate]:
    if n % 4 != 2 or n < 10:
        raise ValueError("solve_k1_div4plus2 needs n = 4 n1 + 2 with n1 >= 2")
    n1 = (n - 2) // 4
    out = []
    for reading in readings:
        for e0 in range(1, bounds.max_e0 + 1):
            src = balanced_degree_source(0, n1, e0)
            if src is None:
                continue
            middle = e0 + (2 * e0 - 2) // (n1 - 1)
            for e1 in range(1, bounds.max_e1 + 1):
                if n1 * e1 < e0:
                    continue
                if ((n1 + 2) * e1) // (n1 + 1) + e0 // (n1 + 1) != middle:
                    continue
                for ep in range(1, bounds.max_eplus + 1):
                    left, mid, right = c2_balance_sides(n1, e0, e1, ep, reading)
                    if right != middle:
                        continue
                    out.append(
                        BalancedCertificate(
                            k=1,
                            n=n,
                            strategy="k1-div4plus2",
                            reading=reading,
                            lift=LiftParameters(e=(e0, e1), e_plus=ep),
                            conditions=[
                                _source_condition("C0 balanced in P^n1", e0, src, f"P^{n1}"),
                                Condition("lift kernel balanced: n1 e1 >= e0", n1 * e1, e0, ">="),
                                Condition("c2-balance left = middle", left, mid),
                                Condition("c2-balance middle = right", mid, right),
                            ],
                            slopes={
                                "s_vertical_C01": Fraction(n1 + 2, n1 + 1) * e1 + Fraction(e0, n1 + 1),
                                "s0": Fraction(e0 * (n1 + 1) - 2, n1 - 1),
                            },
                            degree=e0 + e1 + (n - 2) * ep,
                            partition=(3 * n1 + 1, 3 * n1),
                            flags=[f"c2-balance inner term read as 3n1({reading})"],
                        )
                    )
    return out


def solve_k1(n: int, bounds: SearchBounds) -> list[BalancedCertificate]:
    """Dispatch on the congruence class of n (k = 1)."""
    if n % 2:
        if n == 3:
            return oddg_certificates(1, bounds.max_r)
        return solve_k1_odd(n, bounds)
    if n % 4 == 0:
        return solve_k1_div4(n, bounds)
    return solve_k1_div4plus2(n, bounds)


# --- lifts through a strict flag resolution ----------------------------------


class LiftSlopes(NamedTuple):
    s: list  # s_0..s_u, None where omitted
    s_plus: Fraction
    degN: int
    rkN: int
    eplus_bound: Fraction | None
    min_g: Fraction | None
    sigma0_point: bool


def lift_slopes(P: SchubertPartition, e, e_plus: int, reading: str = "printed") -> LiftSlopes:
    """Slopes s_0..s_u of the successive lifts and s_+ of the final lift to the supercycle."""
    n, k = P.n, P.k
    dec = break_points(P)
    sizes = dec.block_sizes()
    vals = dec.values
    e = tuple(e)
    k0 = dec.breaks[0]
    q0 = n - k - vals[0]
    point = q0 == 0
    s: list = []
    den = q0 * (k0 + 1) - 1
    s.append(Fraction(e[0] * (q0 + k0 + 1) - 2, den) if den > 0 else None)
    for i in range(1, dec.u + 1):
        if i == 1 and point:
            den = sizes[1] * (n - k - vals[1]) - 1
            num = e[1] * (n - k + sizes[1] - vals[1]) - 2
            s.append(Fraction(num, den) if den > 0 else None)
        else:
            s.append(Fraction(e[i], sizes[i]) + Fraction(sum(e[: i + 1]), n - k - vals[i]))
    normal = normal_graded(P, e)
    A = normal.rank
    degN = normal.deg(reading)
    s_plus = Fraction(degN + (A + 1) * e_plus, A)
    min_g = normal.min_g(reading)
    bound = degN - (A - 1) * min_g if dec.u > 0 else None
    return LiftSlopes(s, s_plus, degN, A, bound, min_g, point)


def _lift_candidates(P: SchubertPartition, bounds: SearchBounds):
    """Admissible (e_0, source) pairs and per-stage e_i ranges."""
    n, k = P.n, P.k
    dec = break_points(P)
    k0 = dec.breaks[0]
    q0 = n - k - dec.values[0]
    sizes = dec.block_sizes()
    if q0 == 0:
        first = [(0, BalancedSource("point"))]
    else:
        first = []
        for e0 in range(1, bounds.max_e0 + 1):
            if e0 % sizes[0]:
                continue
            src = balanced_degree_source(k0, q0 + k0, e0, bounds)
            if src is not None:
                first.append((e0, src))
    rest = [list(range(dk, bounds.max_e1 + 1, dk)) for dk in sizes[1:]]
    return first, rest


def _walk(first, rest, slope_floor):
    """Depth-first over e-vectors keeping every defined floor equal."""

    def rec(prefix, target):
        i = len(prefix)
        if i == len(rest) + 1:
            yield tuple(prefix), target
            return
        for ei in rest[i - 1]:
            f = slope_floor(tuple(prefix) + (ei,))
            if f is not None and target is not None and f != target:
                continue
            yield from rec(prefix + [ei], target if f is None else f)

    for e0, src in first:
        f0 = slope_floor((e0,))
        for e, target in rec([e0], f0):
            yield e, src, target


def _stage_floor_fn(P: SchubertPartition):
    n, k = P.n, P.k
    dec = break_points(P)
    sizes = dec.block_sizes()
    vals = dec.values
    k0 = dec.breaks[0]
    q0 = n - k - vals[0]

    def slope_floor(e):
        i = len(e) - 1
        if i == 0:
            den = q0 * (k0 + 1) - 1
            return (e[0] * (q0 + k0 + 1) - 2) // den if den > 0 else None
        if i == 1 and q0 == 0:
            den = sizes[1] * (n - k - vals[1]) - 1
            return (e[1] * (n - k + sizes[1] - vals[1]) - 2) // den if den > 0 else None
        return floor(Fraction(e[i], sizes[i]) + Fraction(sum(e), n - k - vals[i]))

    return slope_floor


def _slope_record(ls: LiftSlopes, P: SchubertPartition, e) -> dict:
    out = {f"s{i}": v for i, v in enumerate(ls.s)}
    out["s+"] = ls.s_plus
    out["deg N"] = ls.degN
    out["rk N"] = ls.rkN
    normal = normal_graded(P, e)
    out["g"] = [p.g for p in normal.pieces if p.rank]
    out["g_tensor"] = [p.tensor_slope for p in normal.pieces if p.rank]
    out["e+ bound"] = ls.eplus_bound
    return out


def _pb_conditions(P, e, e_plus, src, ls: LiftSlopes, where: str):
    dec = break_points(P)
    conds = []
    if ls.sigma0_point:
        conds.append(Condition("e0 = 0 (Sigma_0 is a point)", e[0], 0))
    else:
        label = "(i) k0 = 0: C0 balanced" if dec.breaks[0] == 0 else "(i)' C0 balanced"
        conds.append(_source_condition(label, e[0], src, where))
    for i, (ei, dk) in enumerate(zip(e, dec.block_sizes())):
        if dk > 1:
            conds.append(Condition(f"block size divides e{i}", dk, ei, "divides"))
    target = floor(ls.s_plus)
    for i, si in enumerate(ls.s):
        if si is not None:
            conds.append(Condition(f"final-slope [s{i}] = [s+]", floor(si), target))
    if dec.u == 0:
        conds.append(Condition("(ii)' u = 0", dec.u, 0))
    else:
        conds.append(Condition("(ii) e+ >= deg N - (rk N - 1) min g", e_plus, ls.eplus_bound, ">="))
    return conds


def _check_codim(k: int, n: int, A: int) -> int:
    R = remainder_R(k, n).R
    if A != R + 1:
        raise ValueError(f"partition does not match R+1: codim {A}, R+1 = {R + 1}")
    return R


def _pb_ok(ls: LiftSlopes, e_plus: int, u: int) -> bool:
    target = floor(ls.s_plus)
    if any(si is not None and floor(si) != target for si in ls.s):
        return False
    return u == 0 or e_plus >= ls.eplus_bound


def solve_pb(k: int, n: int, P: SchubertPartition, bounds: SearchBounds, readings=READINGS) -> list[BalancedCertificate]:
    """Perfect-plus-balanced: all (e_0..e_u, e_+) in bounds meeting the lifting hypotheses."""
    if not 2 * k < n:
        raise ValueError("need 2k < n")
    if (P.k, P.n) != (k, n):
        raise ValueError("partition belongs to a different Grassmannian")
    _check_codim(k, n, P.codim)
    dec = break_points(P)
    k0 = dec.breaks[0]
    where = f"G({k0},{n - k - dec.values[0] + k0})"
    first, rest = _lift_candidates(P, bounds)
    slope_floor = _stage_floor_fn(P)
    out = []
    for e, src, target in _walk(first, rest, slope_floor):
        normal = normal_graded(P, e)
        A = normal.rank
        for reading in readings:
            degN = normal.deg(reading)
            bound = degN - (A - 1) * normal.min_g(reading) if dec.u else None
            for ep in range(1, bounds.max_eplus + 1):
                # cheap integer screen before building the full record
                if target is not None and (degN + (A + 1) * ep) // A != target:
                    continue
                if bound is not None and ep < bound:
                    continue
                ls = lift_slopes(P, e, ep, reading)
                if not _pb_ok(ls, ep, dec.u):
                    continue
                flags = []
                if normal.discrepancy:
                    other = "tensor" if reading == "printed" else "printed"
                    also = _pb_ok(lift_slopes(P, e, ep, other), ep, dec.u)
                    flags.append(FLAG_GI + f"; {other} reading {'also passes' if also else 'fails'}")
                out.append(
                    BalancedCertificate(
                        k=k,
                        n=n,
                        strategy="p+b",
                        reading=reading,
                        lift=LiftParameters(e=e, e_plus=ep),
                        conditions=_pb_conditions(P, e, ep, src, ls, where),
                        slopes=_slope_record(ls, P, e),
                        degree=sum(e) + (n - k - 1) * ep,
                        partition=P.a,
                        flags=flags,
                        sub_certificates=_subcerts(src),
                    )
                )
    return out


# --- simple cycles ------------------------------------------------------------


class SimpleSlopes(NamedTuple):
    s0: Fraction | None
    s_plus: Fraction
    eplus_bound: Fraction | None


def simple_cycle_slopes(cycle: SimpleCycle, e0: int, e_plus: int) -> SimpleSlopes:
    k, n, al, be = cycle.k, cycle.n, cycle.alpha, cycle.beta
    den = (k + 1 - al) * (n - k - be) - 1
    s0 = Fraction(e0 * (n + 1 - al - be) - 2, den) if den > 0 else None
    A = al * (n - k) + be * (k + 1 - al)
    s_plus = e_plus + Fraction(e_plus + e0 * (al + be), A)
    bound = al * e0 * (Fraction(n - k, k + 1 - al) - 1) if al > 0 and be > 0 else None
    return SimpleSlopes(s0, s_plus, bound)


def _simple_base_conditions(cycle: SimpleCycle, e0: int, src: BalancedSource, e_plus: int, sl: SimpleSlopes):
    k_sub, n_sub = cycle.sub_grassmannian()
    conds = []
    if n_sub == k_sub:
        conds.append(Condition("e0 = 0 (Sigma_0 is a point)", e0, 0))
    else:
        conds.append(_source_condition("C0 balanced", e0, src, f"G({k_sub},{n_sub})"))
    if sl.eplus_bound is not None:
        conds.append(Condition("e+ >= alpha e0 ((n-k)/(k+1-alpha) - 1)", e_plus, sl.eplus_bound, ">="))
    return conds


def _simple_e0_candidates(cycle: SimpleCycle, bounds: SearchBounds):
    k_sub, n_sub = cycle.sub_grassmannian()
    if n_sub == k_sub:
        return [(0, BalancedSource("point"))]
    out = []
    for e0 in range(1, bounds.max_e0 + 1):
        src = balanced_degree_source(k_sub, n_sub, e0, bounds)
        if src is not None:
            out.append((e0, src))
    return out


def alphabeta_search(k: int, n: int, cycle: SimpleCycle, bounds: SearchBounds, check_codim: bool = True) -> list[BalancedCertificate]:
    """Perfect-plus-balanced through a sub-Grassmannian: [s0] = [s+] plus the e+ bound."""
    if check_codim:
        _check_codim(k, n, cycle.codim)
    out = []
    for e0, src in _simple_e0_candidates(cycle, bounds):
        for ep in range(1, bounds.max_eplus + 1):
            sl = simple_cycle_slopes(cycle, e0, ep)
            if sl.eplus_bound is not None and ep < sl.eplus_bound:
                continue
            if sl.s0 is not None and floor(sl.s0) != floor(sl.s_plus):
                continue
            conds = _simple_base_conditions(cycle, e0, src, ep, sl)
            if sl.s0 is not None:
                conds.append(Condition("[s0] = [s+]", floor(sl.s0), floor(sl.s_plus)))
            out.append(
                BalancedCertificate(
                    k=k,
                    n=n,
                    strategy="alphabeta",
                    lift=LiftParameters(e=(e0,), e_plus=ep),
                    conditions=conds,
                    slopes={"s0": sl.s0, "s+": sl.s_plus, "e+ bound": sl.eplus_bound},
                    degree=e0 + (n - k - 1) * ep,
                    cycle=(cycle.alpha, cycle.beta),
                    partition=cycle.partition().a,
                    sub_certificates=_subcerts(src),
                )
            )
    return out


def _bp_family(k: int, n: int, step: int, bounds: SearchBounds) -> DegreeFamily:
    return DegreeFamily(base=n - k, step=step, r_max=bounds.max_r)


def _codim_flag(k: int, n: int, A: int) -> list[str]:
    try:
        R = remainder_R(k, n).R
    except ValueError:
        return []
    if A == R + 1:
        return []
    return [f"codim {A} differs from R+1 = {R + 1}; C1 is balanced but not perfect"]


def solve_bp(
    k: int,
    n: int,
    target,
    bounds: SearchBounds,
    readings=READINGS,
    require_eplus_bound: bool = True,
) -> list[BalancedCertificate]:
    """Balanced-plus-perfect: e_+ = 1 and every defined slope an integer equal to s_+."""
    if not 2 * k < n:
        raise ValueError("need 2k < n")
    if isinstance(target, SimpleCycle):
        return _solve_bp_simple(k, n, target, bounds, require_eplus_bound)
    P = target
    dec = break_points(P)
    k0 = dec.breaks[0]
    where = f"G({k0},{n - k - dec.values[0] + k0})"
    first, rest = _lift_candidates(P, bounds)
    out = []
    for e, src, target_floor in _walk(first, rest, _stage_floor_fn(P)):
        for reading in readings:
            ls = lift_slopes(P, e, 1, reading)
            if ls.s_plus.denominator != 1:
                continue
            if any(si is not None and si != ls.s_plus for si in ls.s):
                continue
            conds = _pb_conditions(P, e, 1, src, ls, where)
            conds = [c for c in conds if not c.name.startswith("final-slope")]
            if not require_eplus_bound:
                conds = [c for c in conds if not c.name.startswith("(ii)")]
            if not all(c.holds() for c in conds):
                continue
            for i, si in enumerate(ls.s):
                if si is not None:
                    conds.append(Condition(f"s{i} = s+", si, ls.s_plus))
            conds.append(Condition("s+ integral", ls.s_plus, None, "integral"))
            flags = _codim_flag(k, n, P.codim)
            if normal_graded(P, e).discrepancy:
                flags.append(FLAG_GI)
            if not require_eplus_bound:
                flags.append("hypothesis (ii) not imposed")
            out.append(
                BalancedCertificate(
                    k=k,
                    n=n,
                    strategy="b+p",
                    reading=reading,
                    lift=LiftParameters(e=e, e_plus=1, d=n - k, m=1),
                    conditions=conds,
                    slopes=_slope_record(ls, P, e),
                    degree=n - k + sum(e),
                    family=_bp_family(k, n, sum(e), bounds),
                    partition=P.a,
                    flags=flags,
                    sub_certificates=_subcerts(src),
                )
            )
    return out


def _solve_bp_simple(k, n, cycle: SimpleCycle, bounds, require_eplus_bound) -> list[BalancedCertificate]:
    out = []
    for e0, src in _simple_e0_candidates(cycle, bounds):
        sl = simple_cycle_slopes(cycle, e0, 1)
        if sl.s_plus.denominator != 1 or (sl.s0 is not None and sl.s0 != sl.s_plus):
            continue
        if require_eplus_bound and sl.eplus_bound is not None and 1 < sl.eplus_bound:
            continue
        conds = _simple_base_conditions(cycle, e0, src, 1, sl)
        if not require_eplus_bound:
            conds = [c for c in conds if not c.name.startswith("e+ >=")]
        if sl.s0 is not None:
            conds.append(Condition("s0 = s+", sl.s0, sl.s_plus))
        conds.append(Condition("s+ integral", sl.s_plus, None, "integral"))
        out.append(
            BalancedCertificate(
                k=k,
                n=n,
                strategy="b+p",
                reading="simple-cycle",
                lift=LiftParameters(e=(e0,), e_plus=1, d=n - k, m=1),
                conditions=conds,
                slopes={"s0": sl.s0, "s+": sl.s_plus, "e+ bound": sl.eplus_bound},
                degree=n - k + e0,
                family=_bp_family(k, n, e0, bounds),
                partition=cycle.partition().a,
                cycle=(cycle.alpha, cycle.beta),
                flags=_codim_flag(k, n, cycle.codim),
                sub_certificates=_subcerts(src),
            )
        )
    return out


# --- degrees rk+1 in G(k, 2k+1) ---------------------------------------------


def oddg_certificates(k: int, r_max: int) -> list[BalancedCertificate]:
    """Degrees rk+1, r = 1..r_max, in G(k, 2k+1) via alpha = beta = 1 and e0 = k."""
    if k < 1 or r_max < 1:
        raise ValueError("need k >= 1 and r_max >= 1")
    n = 2 * k + 1
    cycle = SimpleCycle(k, n, 1, 1)
    e0 = k
    sl = simple_cycle_slopes(cycle, e0, 1)
    N = simple_cycle_normal(cycle, e0)
    expected = SplittingType([1] * (2 * k) + [0])
    src = balanced_degree_source(k - 1, 2 * k - 1, e0)
    conds = [
        _source_condition("C0 balanced", e0, src, f"G({k - 1},{2 * k - 1})"),
        Condition("s+ = 2", sl.s_plus, 2),
        Condition("e+ >= alpha e0 ((n-k)/(k+1-alpha) - 1)", 1, sl.eplus_bound, ">="),
        Condition("N|C0 splitting", N.to_json(), expected.to_json()),
        Condition("N|C0 balanced", is_balanced(N), True),
    ]
    flags = []
    if sl.s0 is not None:
        conds.insert(1, Condition("s0 = 2", sl.s0, 2))
    else:
        flags.append("Sigma_0 = G(0,1) is a line: C0 has rank-0 normal bundle, s0 omitted")
    family = DegreeFamily(base=k + 1, step=k, r_max=r_max - 1)
    return [
        BalancedCertificate(
            k=k,
            n=n,
            strategy="oddG",
            lift=LiftParameters(e=(e0,), e_plus=1, d=n - k, m=1),
            conditions=list(conds),
            slopes={"s0": sl.s0, "s+": sl.s_plus, "N|C0": N.to_json()},
            degree=r * k + 1,
            family=family,
            cycle=(1, 1),
            partition=cycle.partition().a,
            flags=list(flags),
        )
        for r in range(1, r_max + 1)
    ]


# --- the family Sigma((beta-1)^(k)) -------------------------------------------


class BetaSlopes(NamedTuple):
    s0: Fraction
    s1: Fraction
    s_plus: Fraction


def beta_slopes(k: int, n: int, beta: int, e0: int, e1: int) -> BetaSlopes:
    s0 = Fraction(e0 * (n + 1 - beta) - 2, k * (n - beta - k + 1) - 1)
    s1 = Fraction(e0 + e1, n - k) + e1
    s_plus = Fraction(e0, k) + Fraction(e1, beta - 1) + Fraction(1, k * (beta - 1)) + 1
    return BetaSlopes(s0, s1, s_plus)


def beta_partition(k: int, n: int, beta: int) -> SchubertPartition:
    return SchubertPartition(k, n, (beta - 1,) * k + (0,))


def beta_family_solver(k: int, n: int, beta: int, bounds: SearchBounds) -> list[BalancedCertificate]:
    if beta < 2:
        raise ValueError("beta must be at least 2 (beta = 1 divides by zero in s+)")
    if k < 1 or not n > 2 * k:
        raise ValueError("need k >= 1 and n > 2k")
    if k * (n - beta - k + 1) - 1 <= 0:
        raise ValueError("Sigma_0 has no normal directions for these parameters")
    out = []
    for e0 in range(0, bounds.max_e0 + 1):
        src = balanced_degree_source(k - 1, n - beta, e0, bounds)
        for e1 in range(0, bounds.max_e1 + 1):
            sl = beta_slopes(k, n, beta, e0, e1)
            if not (sl.s0 == sl.s1 == sl.s_plus and sl.s0.denominator == 1):
                continue
            if src is None:
                continue
            out.append(
                BalancedCertificate(
                    k=k,
                    n=n,
                    strategy="beta-family",
                    lift=LiftParameters(e=(e0, e1), e_plus=1, d=n - k, m=1),
                    conditions=[
                        _source_condition("C0 balanced", e0, src, f"G({k - 1},{n - beta})"),
                        Condition("s0 = s1", sl.s0, sl.s1),
                        Condition("s1 = s+", sl.s1, sl.s_plus),
                        Condition("s0 integral", sl.s0, None, "integral"),
                    ],
                    slopes={"s0": sl.s0, "s1": sl.s1, "s+": sl.s_plus, "beta": beta},
                    degree=n - k + e0 + e1,
                    family=DegreeFamily(base=n - k, step=e0 + e1, r_max=bounds.max_r),
                    partition=beta_partition(k, n, beta).a,
                    flags=["slopes from the explicit formulas of the example; hypothesis (ii) not imposed"],
                    sub_certificates=_subcerts(src),
                )
            )
    return out


# --- r = 0 printed condition --------------------------------------------------


def r0_sides(k: int, n: int, e0: int, e1: int, eplus: int) -> tuple[int, int, int]:
    q = (n + 1) // (k + 1)
    m = n - k - q + 1
    return (
        e0 + eplus + eplus // (k + q),
        (2 * k * e1 - e0) // (n - k - 1),
        (e0 * (m + 1)) // (m - 1),
    )


def r0_progression_hint(k: int, n: int) -> dict:
    q = (n + 1) // (k + 1)
    return {"q": q, "m": n - k - q + 1, "gcd(2k, q-1)": gcd(2 * k, q - 1)}


def r0_printed_search(k: int, n: int, bounds: SearchBounds) -> list[BalancedCertificate]:
    """Search the three-way floor equality printed for n+1 = q(k+1), partition (q-1, 0, ..., 0)."""
    if (n + 1) % (k + 1):
        raise ValueError("needs r = 0, i.e. (k+1) | (n+1)")
    q = (n + 1) // (k + 1)
    m = n - k - q + 1
    if q <= 2 or m <= 1:
        raise ValueError("needs q > 2 and m = n-k-q+1 > 1")
    P = SchubertPartition(k, n, (q - 1,) + (0,) * k)
    out = []
    for e0 in range(1, bounds.max_e0 + 1):
        right = (e0 * (m + 1)) // (m - 1)
        for e1 in range(1, bounds.max_e1 + 1):
            if (2 * k * e1 - e0) // (n - k - 1) != right:
                continue
            for ep in range(1, bounds.max_eplus + 1):
                left, mid, rgt = r0_sides(k, n, e0, e1, ep)
                if left != mid:
                    continue
                out.append(
                    BalancedCertificate(
                        k=k,
                        n=n,
                        strategy="r0-printed",
                        lift=LiftParameters(e=(e0, e1), e_plus=ep),
                        conditions=[
                            Condition("c+-balanced left = middle", left, mid),
                            Condition("c+-balanced middle = right", mid, rgt),
                        ],
                        slopes={"q": q, "m": m},
                        degree=e0 + e1 + (n - k - 1) * ep,
                        partition=P.a,
                        flags=["printed condition; not re-derived from the general slope formulas"],
                    )
                )
    return out


def sort_certificates(certs: list[BalancedCertificate]) -> list[BalancedCertificate]:
    return sorted(certs, key=lambda c: c.sort_key())
