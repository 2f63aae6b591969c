"""Re-check certificates from their serialized form.

Nothing here imports the solver: every slope, floor and degree is recomputed
from the integer parameters stored in the JSON record.  ``verify`` returns the
list of problems found; an empty list means the certificate stands.
"""

from __future__ import annotations

from fractions import Fraction


def _fl(num: int, den: int) -> int:
    if den <= 0:
        raise ZeroDivisionError("non-positive denominator")
    return num // den


def _fr(x: Fraction) -> int:
    return x.numerator // x.denominator


def known_rule(rule: str, k: int, n: int, e: int) -> bool:
    """Check one of the base rules that certify a balanced degree in G(k, n)."""
    if rule == "point":
        return n == k and e == 0
    if 2 * k + 1 > n:
        k = n - k - 1
    if rule == "projective":
        return k == 0 and (e == 1 or e >= n)
    if rule == "minimal":
        return e == n - k
    if rule == "oddG":
        return k >= 1 and n == 2 * k + 1 and e >= k + 1 and (e - 1) % k == 0
    return False


def _recorded_conditions(rec) -> list[str]:
    bad = []
    for c in rec["conditions"]:
        rel, lhs, rhs = c["relation"], c["lhs"], c["rhs"]
        if rel == "certified":
            ok = rhs is not None
        elif rel == "integral":
            ok = Fraction(lhs).denominator == 1
        elif rel == "divides":
            ok = int(rhs) % int(lhs) == 0
        elif rel == ">=":
            ok = Fraction(lhs) >= Fraction(rhs)
        elif isinstance(lhs, (int, str)) and isinstance(rhs, (int, str)):
            ok = Fraction(lhs) == Fraction(rhs)
        else:
            ok = lhs == rhs
        if not ok:
            bad.append(f"recorded condition fails: {c['name']}")
    return bad


def _source(rec, k: int, n: int, e: int, name_prefix: str) -> list[str]:
    """The C0 prerequisite: a base rule or a chained sub-certificate of the right degree."""
    for c in rec["conditions"]:
        if c["relation"] == "certified" and c["name"].startswith(name_prefix):
            rule = c["rhs"].split(" in ")[0]
            break
    else:
        return [f"missing prerequisite condition {name_prefix!r}"]
    if rule == "sub-certificate":
        subs = [s for s in rec["sub_certificates"] if s["degree"] == e]
        if not subs:
            return ["sub-certificate of the required degree missing"]
        sub = subs[0]
        probs = verify(sub)
        kk = sub["k"] if 2 * sub["k"] + 1 <= sub["n"] else sub["n"] - sub["k"] - 1
        k2 = k if 2 * k + 1 <= n else n - k - 1
        if (kk, sub["n"]) != (k2, n):
            probs.append("sub-certificate lives in the wrong Grassmannian")
        return probs
    return [] if known_rule(rule, k, n, e) else [f"rule {rule!r} does not certify degree {e} in G({k},{n})"]


def _family(rec, base: int, step: int) -> list[str]:
    fam = rec["family"]
    if fam is None or fam["base"] != base or fam["step"] != step:
        return [f"family should be {base} + {step} r"]
    return []


# --- per-strategy checks ------------------------------------------------------


def _minimal(rec):
    k, n = rec["k"], rec["n"]
    q = (n + 1) // (k + 1)
    out = []
    if rec["degree"] != n - k:
        out.append("minimal degree is n-k")
    if _fl((n - k) * (n + 1) - 2, (n - k) * (k + 1) - 1) != q:
        out.append("floor of minimal normal slope is not q")
    return out


def _k1_odd(rec):
    n = rec["n"]
    n0 = (n - 1) // 2
    e0, e1 = rec["lift"]["e"]
    ep = rec["lift"]["e_plus"]
    out = []
    left = e0 + _fl(2 * e0 - 2, n0 - 1)
    if not e0 >= n0:
        out.append("e0 < n0")
    if not e1 >= e0:
        out.append("e1 < e0")
    if left != e1 + _fl(e0 + e1, 2 * n0):
        out.append("second odd condition")
    if left != e0 + ep + _fl(ep, n0 + 1):
        out.append("third odd condition")
    if rec["degree"] != e0 + e1 + (n - 2) * ep:
        out.append("degree")
    return out


def _k1_div4(rec):
    n = rec["n"]
    n1 = n // 4
    (e0,) = rec["lift"]["e"]
    ep = rec["lift"]["e_plus"]
    out = _source(rec, 1, n1 + 1, e0, "C0 balanced")
    if ep + _fl(ep, 6 * n1 - 2) != _fl(5 * e0 - 4, 4 * n1 - 2):
        out.append("match4")
    if rec["degree"] != e0 + (n - 2) * ep:
        out.append("degree")
    return out


def _k1_div4plus2(rec):
    n = rec["n"]
    n1 = (n - 2) // 4
    e0, e1 = rec["lift"]["e"]
    ep = rec["lift"]["e_plus"]
    inner = e1 + (ep if rec["reading"] == "e1+e+" else e0)
    out = _source(rec, 0, n1, e0, "C0 balanced")
    if n1 * e1 < e0:
        out.append("lift kernel not balanced")
    a = _fl((n1 + 2) * e1, n1 + 1) + _fl(e0, n1 + 1)
    b = e0 + _fl(2 * e0 - 2, n1 - 1)
    c = ep + _fl(ep + 3 * n1 * inner, 6 * n1 + 1)
    if not a == b == c:
        out.append("c2-balance")
    if rec["degree"] != e0 + e1 + (n - 2) * ep:
        out.append("degree")
    return out


def _blocks(a):
    """Break indices, block sizes and block values of a partition."""
    idx = [i for i in range(len(a)) if i == len(a) - 1 or a[i + 1] < a[i]]
    sizes = [j - i for i, j in zip([-1] + idx[:-1], idx)]
    return idx, sizes, [a[i] for i in idx]


def _lift_slopes(k, n, a, e, ep, reading):
    idx, sizes, vals = _blocks(a)
    q0 = n - k - vals[0]
    s = []
    den = q0 * (idx[0] + 1) - 1
    s.append(Fraction(e[0] * (q0 + idx[0] + 1) - 2, den) if den > 0 else None)
    for i in range(1, len(idx)):
        if i == 1 and q0 == 0:
            den = sizes[1] * (n - k - vals[1]) - 1
            s.append(Fraction(e[1] * (n - k + sizes[1] - vals[1]) - 2, den) if den > 0 else None)
        else:
            s.append(Fraction(e[i], sizes[i]) + Fraction(sum(e[: i + 1]), n - k - vals[i]))
    A = sum(a)
    degN = 0
    gs = []
    for i, (dk, ai) in enumerate(zip(sizes, vals)):
        tail = sum(e[i + 1:])
        if reading == "tensor":
            degN += dk * tail + ai * e[i]
        else:
            degN += tail + ai * e[i]
        if ai:
            gs.append(Fraction(e[i], dk) + Fraction(tail, (dk * ai) if reading != "tensor" else ai))
    s_plus = Fraction(degN + (A + 1) * ep, A)
    bound = degN - (A - 1) * min(gs) if len(idx) > 1 else None
    return s, s_plus, bound, sizes, q0, idx, vals


def _prereq_lift(rec, k, n, a, e):
    idx, sizes, vals = _blocks(a)
    q0 = n - k - vals[0]
    out = []
    for ei, dk in zip(e, sizes):
        if ei % dk:
            out.append("block size does not divide e_i")
    if q0 == 0:
        if e[0] != 0:
            out.append("Sigma_0 is a point but e0 != 0")
    else:
        out += _source(rec, idx[0], q0 + idx[0], e[0], "(i")
    return out


def _pb(rec):
    k, n = rec["k"], rec["n"]
    a, e, ep = rec["partition"], rec["lift"]["e"], rec["lift"]["e_plus"]
    q, r = divmod(n + 1, k + 1)
    out = _prereq_lift(rec, k, n, a, e)
    if sum(a) != q - 1 + r * (n - k):
        out.append("codimension is not R+1")
    s, s_plus, bound, *_ = _lift_slopes(k, n, a, e, ep, rec["reading"])
    f = _fr(s_plus)
    if any(x is not None and _fr(x) != f for x in s):
        out.append("final-slope floors differ")
    if bound is not None and ep < bound:
        out.append("e+ below bound")
    if rec["degree"] != sum(e) + (n - k - 1) * ep:
        out.append("degree")
    return out


def _simple(k, n, al, be, e0, ep):
    den = (k + 1 - al) * (n - k - be) - 1
    s0 = Fraction(e0 * (n + 1 - al - be) - 2, den) if den > 0 else None
    A = al * (n - k) + be * (k + 1) - al * be
    s_plus = ep + Fraction(ep + e0 * (al + be), A)
    bound = al * e0 * (Fraction(n - k, k + 1 - al) - 1) if al and be else None
    return s0, s_plus, bound


def _simple_prereq(rec, k, n, al, be, e0):
    ks, ns = k - al, n - al - be
    if ks == ns:
        return [] if e0 == 0 else ["Sigma_0 is a point but e0 != 0"]
    return _source(rec, ks, ns, e0, "C0 balanced")


def _bp(rec):
    k, n = rec["k"], rec["n"]
    e = rec["lift"]["e"]
    out = []
    if rec["lift"]["e_plus"] != 1:
        out.append("b+p needs e+ = 1")
    if rec["cycle"] is not None:
        al, be = rec["cycle"]["alpha"], rec["cycle"]["beta"]
        out += _simple_prereq(rec, k, n, al, be, e[0])
        s0, s_plus, _ = _simple(k, n, al, be, e[0], 1)
        s = [s0]
    else:
        out += _prereq_lift(rec, k, n, rec["partition"], e)
        s, s_plus, *_ = _lift_slopes(k, n, rec["partition"], e, 1, rec["reading"])
    if s_plus.denominator != 1 or any(x is not None and x != s_plus for x in s):
        out.append("slopes not integral and equal")
    if rec["degree"] != n - k + sum(e):
        out.append("degree")
    return out + _family(rec, n - k, sum(e))


def _alphabeta(rec):
    k, n = rec["k"], rec["n"]
    al, be = rec["cycle"]["alpha"], rec["cycle"]["beta"]
    (e0,) = rec["lift"]["e"]
    ep = rec["lift"]["e_plus"]
    out = _simple_prereq(rec, k, n, al, be, e0)
    s0, s_plus, bound = _simple(k, n, al, be, e0, ep)
    if s0 is not None and _fr(s0) != _fr(s_plus):
        out.append("[s0] != [s+]")
    if bound is not None and ep < bound:
        out.append("e+ below bound")
    if rec["degree"] != e0 + (n - k - 1) * ep:
        out.append("degree")
    return out


def _oddg(rec):
    k, n = rec["k"], rec["n"]
    out = []
    if n != 2 * k + 1 or rec["lift"]["e"] != [k] or rec["lift"]["e_plus"] != 1:
        out.append("oddG data must be n = 2k+1, e0 = k, e+ = 1")
    s0, s_plus, bound = _simple(k, n, 1, 1, k, 1)
    if s_plus != 2 or (s0 is not None and s0 != 2):
        out.append("s0 = s+ = 2 fails")
    if bound is not None and 1 < bound:
        out.append("e+ below bound")
    # alpha Q + alpha beta O + beta S^* on C0 of degree k, Q and S^* both of rank k
    split = sorted([1] * k + [0] + [1] * k, reverse=True)
    rec_split = next((c["lhs"] for c in rec["conditions"] if c["name"] == "N|C0 splitting"), None)
    if rec_split != split:
        out.append("N|C0 splitting")
    if (rec["degree"] - 1) % k or rec["degree"] < k + 1:
        out.append("degree not of the form rk+1")
    return out + _family(rec, k + 1, k)


def _beta(rec):
    k, n = rec["k"], rec["n"]
    be = rec["slopes"]["beta"]
    e0, e1 = rec["lift"]["e"]
    s0 = Fraction(e0 * (n + 1 - be) - 2, k * (n - be - k + 1) - 1)
    s1 = Fraction(e0 + e1, n - k) + e1
    sp = Fraction(e0, k) + Fraction(e1, be - 1) + Fraction(1, k * (be - 1)) + 1
    out = _source(rec, k - 1, n - be, e0, "C0 balanced")
    if not (s0 == s1 == sp and s0.denominator == 1):
        out.append("beta slopes not equal and integral")
    if rec["degree"] != n - k + e0 + e1:
        out.append("degree")
    return out + _family(rec, n - k, e0 + e1)


def _r0(rec):
    k, n = rec["k"], rec["n"]
    e0, e1 = rec["lift"]["e"]
    ep = rec["lift"]["e_plus"]
    q = (n + 1) // (k + 1)
    m = n - k - q + 1
    a = e0 + ep + _fl(ep, k + q)
    b = _fl(2 * k * e1 - e0, n - k - 1)
    c = _fl(e0 * (m + 1), m - 1)
    out = [] if a == b == c else ["printed r = 0 condition"]
    if rec["degree"] != e0 + e1 + (n - k - 1) * ep:
        out.append("degree")
    return out


CHECKS = {
    "minimal": _minimal,
    "k1-odd": _k1_odd,
    "k1-div4": _k1_div4,
    "k1-div4plus2": _k1_div4plus2,
    "p+b": _pb,
    "b+p": _bp,
    "alphabeta": _alphabeta,
    "oddG": _oddg,
    "beta-family": _beta,
    "r0-printed": _r0,
}


def verify(rec: dict) -> list[str]:
    """Problems with a serialized certificate; empty when every check passes."""
    check = CHECKS.get(rec["strategy"])
    if check is None:
        return [f"unknown strategy {rec['strategy']!r}"]
    return _recorded_conditions(rec) + check(rec)
