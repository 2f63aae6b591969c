"""Reference-example battery: each block recomputes known values and reports pass/fail."""

from __future__ import annotations

from fractions import Fraction

from .bundles import (
    SplittingType,
    balanced_of,
    extension_balance,
    is_balanced,
    is_perfect,
    plus_trivial_source,
    predict_kernel_plus_trivial,
    predict_kernel_torsion,
)
from .matching import (
    FLAG_GI,
    FLAG_Q_DENOMINATOR,
    SearchBounds,
    alphabeta_search,
    beta_family_solver,
    beta_partition,
    c2_balance_sides,
    curve_normal_stats,
    expected_degree,
    lift_slopes,
    match4_parametrization,
    match4_sides,
    minimal_scroll_slope,
    oddg_certificates,
    r0_printed_search,
    solve_k1_div4,
    solve_k1_div4plus2,
    solve_k1_odd,
)
from .oracle import FieldConfig, GenericMapProblem, LineTarget, oracle_kernel_type
from .schubert import SchubertPartition, SimpleCycle, break_points, flag_stages, normal_graded, remainder_R, simple_cycle_normal
from .verify import verify


class Block:
    def __init__(self, name: str):
        self.name = name
        self.checks: list[dict] = []
        self.flags: list[str] = []

    def check(self, label: str, ok: bool, detail=None):
        self.checks.append({"name": label, "passed": bool(ok), "detail": detail})

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checks": self.checks, "flags": self.flags}


def _quadric(b: Block):
    st = curve_normal_stats(2, 1, 3)
    b.check("deg N, rk N, max rulings for a conic-degree curve in G(1,3)", tuple(st[:3]) == (6, 3, 3), list(st))
    b.check("expected degree through 3 lines", expected_degree(3, 1, 3) == 2)
    b.flags.append(FLAG_Q_DENOMINATOR + f"; for (e,k,n)=(2,1,3) printed-denominator value {st.q_printed}")


def _minimal(b: Block):
    bad = []
    for n in range(3, 52):
        s, f = minimal_scroll_slope(n)
        rul = curve_normal_stats(n - 1, 1, n).max_rulings
        want = (n + 3) // 2 if n % 2 else n // 2 + 1
        if s != Fraction(n * n - 3, 2 * n - 3) or rul != want:
            bad.append(n)
    b.check("slope, floor and ruling count for 3 <= n <= 51", not bad, bad)
    b.check("n=5 slope 22/7 floor 3", minimal_scroll_slope(5) == (Fraction(22, 7), 3))
    b.check("n=4 slope 13/5 floor 2", minimal_scroll_slope(4) == (Fraction(13, 5), 2))
    n = 7
    printed = ((n - 3) // 2) * SplittingType([(n + 3) // 2]) + (3 * (n - 1) // 2) * SplittingType([(n + 1) // 2])
    b.check("n=7 normal bundle is the balanced type of degree 46, rank 11", balanced_of(n * n - 3, 2 * n - 3) == printed, printed.to_json())


def _remainder(b: Block):
    bad = [(k, n) for n in range(3, 41) for k in range(1, (n - 1) // 2 + 1) if remainder_R(k, n).R != ((n - k) * (n + 1) - 2) % ((n - k) * (k + 1) - 1)]
    b.check("closed form equals direct remainder, n <= 40", not bad, bad)
    r0 = all(remainder_R(k, q * (k + 1) - 1).R == q - 2 for k in range(1, 6) for q in range(3, 8))
    b.check("r = 0 gives R = q - 2", r0)


def _bundles(b: Block):
    b.check("tensor {2,1} x {0,0}", SplittingType([2, 1]) * SplittingType([0, 0]) == SplittingType([2, 2, 1, 1]))
    b.check("extension of {3,2} by {2,2}", extension_balance(SplittingType([2, 2]), SplittingType([3, 2])) == (True, 2))
    K = predict_kernel_torsion(SplittingType([3, 1, 1]), 2)
    b.check("two point steps on {3,1,1} give a perfect kernel", K == SplittingType([1, 1, 1]) and is_perfect(K))
    E = SplittingType([1, 1])
    b.check("plus-trivial E={1,1}, a=2, b=1 predicted balanced", predict_kernel_plus_trivial(E, 2, 1) is True)
    K = oracle_kernel_type(GenericMapProblem(plus_trivial_source(E, 2), LineTarget(1)), FieldConfig())
    b.check("plus-trivial instance confirmed by the finite-field oracle", is_balanced(K), K.to_json())


def _schubert(b: Block):
    n0 = 3
    dec = break_points(SchubertPartition(1, 2 * n0 + 1, (n0, 0)))
    b.check("(n0, 0) breaks at 0 and 1", dec.breaks == (0, 1) and dec.values == (n0, 0))
    fl = flag_stages(SchubertPartition(1, 10, (7, 6)))
    b.check("(3n1+1, 3n1) for n1=2 resolves in two stages", len(fl.stages) == 2)
    k = 3
    N = simple_cycle_normal(SimpleCycle(k, 2 * k + 1, 1, 1), k)
    b.check("N|C0 = 2k O(1) + O for k=3", N == SplittingType([1] * 6 + [0]) and is_balanced(N), N.to_json())
    ng = normal_graded(SchubertPartition(2, 7, (2, 2, 0)), (2, 1))
    b.check("block of size 2 separates printed g_i from the tensor rule", ng.discrepancy, [str(p.g) + " vs " + str(p.tensor_slope) for p in ng.pieces if p.rank])
    b.flags.append(FLAG_GI)


def _oddg(b: Block):
    bad = []
    for k in range(1, 7):
        certs = oddg_certificates(k, 10)
        for r, c in enumerate(certs, 1):
            N = c.slopes["N|C0"]
            s0 = c.slopes["s0"]
            ok = c.degree == r * k + 1 and c.slopes["s+"] == 2 and (s0 == 2 if k >= 2 else s0 is None)
            ok = ok and N == [1] * (2 * k) + [0] and not verify(c.to_json())
            if not ok:
                bad.append((k, r))
    b.check("degrees rk+1 with s0 = s+ = 2 for k <= 6, r <= 10", not bad, bad)
    fam = oddg_certificates(1, 5)[0].family
    b.check("k = 1 family starts at 2 with step 1", (fam.base, fam.step) == (2, 1))
    s0 = oddg_certificates(2, 3)[2].slopes["s0"]
    b.check("k=2, r=3: degree 7, s0 = 6/3", s0 == 2)
    bounds = SearchBounds(5, 5, 3, 3)
    hits = [c for k in range(1, 5) for c in alphabeta_search(k, 2 * k + 1, SimpleCycle(k, 2 * k + 1, 1, 1), bounds, check_codim=False) if c.lift.e == (k,) and c.lift.e_plus == 1]
    b.check("simple-cycle search reproduces e0 = k, e+ = 1", len(hits) == 4)
    b.flags.append("k = 1: Sigma_0 is a line, s0 is undefined and omitted")


def _beta(b: Block):
    bounds = SearchBounds(20, 20, 1, 10)
    for k, n, beta, e, s, base, step in ((3, 8, 3, (7, 3), 5, 5, 10), (1, 5, 3, (3, 5), 7, 4, 8)):
        certs = beta_family_solver(k, n, beta, bounds)
        ok = len(certs) == 1 and certs[0].lift.e == e and certs[0].slopes["s0"] == s
        ok = ok and (certs[0].family.base, certs[0].family.step) == (base, step)
        b.check(f"(n,k,beta)=({n},{k},{beta}) has the unique solution {e}, slope {s}", ok, [c.lift.e for c in certs])
        P = beta_partition(k, n, beta)
        sizes = break_points(P).block_sizes()
        if any(ei % dk for ei, dk in zip(e, sizes)):
            b.flags.append(f"({n},{k},{beta}): e0 = {e[0]} is not divisible by the block size {sizes[0]}, so S^0* is not perfect; slopes come from the example's own formulas")
            continue
        ls = lift_slopes(P, e, 1, "printed")
        lt = lift_slopes(P, e, 1, "tensor")
        b.flags.append(
            f"({n},{k},{beta}): general e+ bound is {ls.eplus_bound} (printed g_i) / {lt.eplus_bound} (tensor rule) against e+ = 1; "
            f"general s+ is {ls.s_plus} / {lt.s_plus}"
        )
        if normal_graded(P, e).discrepancy:
            b.flags.append(FLAG_GI)


def _match(b: Block):
    odd = solve_k1_odd(7, SearchBounds(200, 400, 200, 10))
    b.check("n=7 odd-case solutions with e0 <= 200", len(odd) > 0, len(odd))
    fam = [c for c in odd if "divisibility-family member" in c.flags]
    b.check("divisibility-family members present", len(fam) > 0, len(fam))
    b.flags.append("odd case: e_2 in the statement read as e_+")

    d4 = solve_k1_div4(8, SearchBounds(40, 40, 40, 5))
    b.check("n=8 match4 solutions", len(d4) > 0, len(d4))
    rhs = all(match4_sides(n1, j * (4 * n1 - 2), 0)[1] == 5 * j - 1 for n1 in range(2, 8) for j in range(1, 20))
    b.check("e0 = j(4n1-2) gives right side 5j-1", rhs)
    par = [match4_parametrization(2, j) for j in range(1, 15)]
    b.flags.append(f"match4 closed-form e+ choice holds for {sum(p['holds'] for p in par)}/{len(par)} tested j (n1=2); unverified")

    d42 = solve_k1_div4plus2(10, SearchBounds(40, 40, 40, 5))
    by = {r: sum(c.reading == r for c in d42) for r in ("e1+e+", "e1+e0")}
    b.check("n=10 c2-balance solutions", len(d42) > 0, by)
    b.check("middle term 2 + [(2*2-2)/(2-1)] = 4", c2_balance_sides(2, 2, 1, 1, "e1+e+")[1] == 4)
    b.flags.append("c2-balance inner term searched as 3n1(e1+e+) and 3n1(e1+e0); neither endorsed")

    r0 = r0_printed_search(2, 11, SearchBounds(40, 40, 40, 5))
    b.check("(k,n)=(2,11) printed r = 0 condition has solutions", len(r0) > 0, len(r0))
    bad = [c.strategy for c in odd + d4 + d42 + r0 if verify(c.to_json())]
    b.check("all solutions re-verify independently", not bad, bad)


BLOCKS = {
    "quadric": _quadric,
    "minimal": _minimal,
    "remainder": _remainder,
    "bundles": _bundles,
    "schubert": _schubert,
    "oddg": _oddg,
    "beta": _beta,
    "match": _match,
}


def run_battery(only=None) -> list[dict]:
    names = list(BLOCKS) if not only else [n for n in BLOCKS if n in only]
    out = []
    for name in names:
        blk = Block(name)
        try:
            BLOCKS[name](blk)
        except Exception as exc:  # a crash is a failed block, not a crashed battery
            blk.check("block raised", False, f"{type(exc).__name__}: {exc}")
        out.append(blk.to_json())
    return out
