"""Theorem checks on presented rings, verdicts and CSV reports."""

from __future__ import annotations

import csv
import io
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from . import monomial as mono
from .constructions import (
    Duplication,
    FiberProduct,
    Idealization,
    Subspace,
    ideal_span,
    idealization,
    truncation_oracle,
)
from .errors import MissingInput, SmultError
from .limits import (
    HQuery,
    e_estimate,
    h_estimate,
    normalizer,
    sec_tan_series,
    wy_bound,
    zigzag_constants,
)
from .monomial import MonomialIdeal
from .ring import ModuleSpec, RingPresentation, quadric, quotient_length

PASS = "PASS"
PASS_IN_LIMIT = "PASS-IN-LIMIT"
INCONCLUSIVE = "INCONCLUSIVE"
FAIL = "FAIL"
ERROR = "ERROR"
_SEVERITY = {PASS: 0, PASS_IN_LIMIT: 1, INCONCLUSIVE: 2, FAIL: 3, ERROR: 4}

EXACT, LIMIT, INEQUALITY = "exact", "limit", "inequality"

# theorem id -> kind of construction it needs
THEOREMS = {
    "T3.1": "fiber_product",
    "C3.2": "fiber_product",
    "P3.3": "fiber_product",
    "L3.4": "fiber_product",
    "C3.5": "fiber_product",
    "C3.6": "duplication",
    "C3.7": "duplication",
    "L4.1": "idealization",
    "T4.2": "idealization",
    "C4.3": "idealization",
    "C4.4": "idealization",
    "P4.6.1": "idealization",
    "P4.6.2": "idealization",
    "P4.6.3-free": "idealization",
    "L4.7": "idealization",
    "P4.8": "idealization",
    "T5.1": "idealization",
    "T5.2.1": "fiber_product",
    "T5.2.2": "fiber_product",
    "T5.2.3": "fiber_product",
    "P5.3": "duplication",
    "T5.4": "fiber_product",
    "P5.5": "duplication",
    "T5.6": "idealization",
    "WY-constants": None,
}

_TARGET_TYPES = {
    "fiber_product": FiberProduct,
    "idealization": Idealization,
    "duplication": Duplication,
}


def worst(verdicts) -> str:
    verdicts = list(verdicts)
    return max(verdicts, key=_SEVERITY.__getitem__) if verdicts else PASS


@dataclass(frozen=True)
class CheckSpec:
    theorem_id: str
    target: object = None
    target_name: str = ""
    s_grid: tuple = (Fraction(1),)
    e_range: tuple = (1, 2)
    I: Optional[str] = None
    J: Optional[str] = None
    flags: frozenset = frozenset()
    tolerance: Optional[Fraction] = None
    tolerance_scale: Optional[Fraction] = None
    betti: Optional[tuple] = None
    powers: tuple = (1, 2, 3, 4)
    brackets: Optional[tuple] = None
    count: int = 8

    @property
    def label(self) -> str:
        return self.target_name or self.theorem_id


@dataclass(frozen=True)
class Row:
    theorem_id: str
    ring: str
    s: Optional[Fraction]
    e: Optional[int]
    q: Optional[int]
    lhs: Fraction
    rhs: Fraction
    relation: str
    slack: Fraction
    verdict: str


@dataclass
class Group:
    """One relation evaluated along the e-range for a fixed s."""

    name: str
    relation: str
    kind: str
    dim: int
    s: Optional[Fraction] = None
    points: list = field(default_factory=list)

    def slacks(self) -> list:
        out = []
        for _, _, lhs, rhs in self.points:
            if self.relation == "=":
                out.append(abs(lhs - rhs))
            elif self.relation == "<=":
                out.append(rhs - lhs)
            else:
                out.append(lhs - rhs)
        return out


@dataclass
class CheckReport:
    theorem_id: str
    label: str
    rows: list = field(default_factory=list)
    verdict: str = PASS
    case: Optional[str] = None
    hypotheses: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    error: Optional[str] = None
    runtime: float = 0.0


def judge(kind: str, slacks: Sequence[Fraction], tol: Fraction) -> str:
    """Verdict for one slack sequence ordered by e.

    For equalities the slack is |lhs - rhs|; for inequalities it is the
    signed margin, positive when the inequality holds.
    """
    if not slacks:
        return INCONCLUSIVE
    if kind == EXACT:
        return PASS if all(x == 0 for x in slacks) else FAIL
    tail = list(slacks[-3:])
    last = tail[-1]
    if kind == LIMIT:
        if all(x == 0 for x in slacks):
            return PASS
        shrinking = all(a >= b for a, b in zip(tail, tail[1:]))
        if last <= tol and shrinking:
            return PASS_IN_LIMIT
        widening = len(tail) > 1 and all(b >= a for a, b in zip(tail, tail[1:]))
        return FAIL if last > tol and widening else INCONCLUSIVE
    if last >= 0:
        return PASS
    if -last <= tol:
        return PASS_IN_LIMIT
    widening = len(tail) > 1 and all(b <= a for a, b in zip(tail, tail[1:]))
    return FAIL if widening else INCONCLUSIVE


def tolerance_for(spec: CheckSpec, dim: int, q_max: int) -> Fraction:
    if spec.tolerance is not None:
        return Fraction(spec.tolerance)
    if spec.tolerance_scale is not None:
        factor = Fraction(spec.tolerance_scale)
    else:
        factor = Fraction(2 * max(dim, 1))
    return factor / q_max


# ----------------------------------------------------------------- helpers


def _ideal(text: Optional[str], ring: RingPresentation) -> MonomialIdeal:
    if text is None or text.strip() == "m":
        return ring.maximal_ideal()
    return mono.parse_ideal(text, ring.nvars)


def _h(ring, s, e_range, I=None, J=None, module=None, dim=None):
    I = ring.maximal_ideal() if I is None else I
    J = ring.maximal_ideal() if J is None else J
    module = module or ModuleSpec.free(ring.nvars)
    return h_estimate(HQuery(ring, module, I, J, s, e_range, dim)).values()


def _scaled(values, factor):
    return [v * factor for v in values]


def _combine(*terms):
    """Sum of coef * series over aligned value lists."""
    out = None
    for coef, values in terms:
        vals = [coef * v for v in values]
        out = vals if out is None else [a + b for a, b in zip(out, vals)]
    return out


def _normalizer_factor(s, d):
    return 1 / normalizer(s, d)


@lru_cache(maxsize=64)
def quadric_reference(p: int, d: int, s: Fraction, e_range: tuple) -> tuple:
    """e_s(R_d) samples of the quadric at the same characteristic and e-range."""
    return tuple(e_estimate(HQuery.maximal(quadric(p, d), s, e_range)).values())


def _module_dim(ring: RingPresentation, module: ModuleSpec) -> Optional[int]:
    dims = [ring.quotient_dim(J) for J in module.summands]
    if any(d is None for d in dims):
        return None
    return max(dims)


def fiber_case(dR: int, dS: int, dT: int) -> str:
    if dR == dS == dT:
        return "dim R = dim S = dim T"
    if dR == dS > dT:
        return "dim R = dim S > dim T"
    if dR > dS > dT:
        return "dim R > dim S > dim T"
    if dS > dR > dT:
        return "dim S > dim R > dim T (roles swapped)"
    return "outside the published cases; lower-dimensional terms dropped"


class _Builder:
    def __init__(self, spec: CheckSpec, report: CheckReport):
        self.spec = spec
        self.report = report
        self.groups: list = []

    def hypothesis(self, text: str, status: str):
        self.report.hypotheses.append(f"{text}: {status}")
        return status

    def checked(self, text: str, value: Optional[bool]):
        if value is None:
            return self.hypothesis(text, "unverifiable")
        return self.hypothesis(text, "holds" if value else "fails")

    def flag(self, name: str, text: str):
        present = name in self.spec.flags
        return self.hypothesis(text, "asserted by user" if present else "not asserted")

    def add(self, name, relation, kind, dim, s, lhs, rhs, es=None, qs=None):
        g = Group(name, relation, kind, dim, s)
        p = _p(self.spec)
        es = es if es is not None else list(self.spec.e_range)
        qs = qs if qs is not None else [p ** e for e in es]
        if not isinstance(rhs, (list, tuple)):
            rhs = [rhs] * len(lhs)
        for e, q, a, b in zip(es, qs, lhs, rhs):
            g.points.append((e, q, Fraction(a), Fraction(b)))
        self.groups.append(g)
        return g


def _p(spec: CheckSpec) -> int:
    t = spec.target
    if isinstance(t, FiberProduct):
        return t.ring.p
    if isinstance(t, (Idealization, Duplication)):
        return t.ring.p
    if isinstance(t, RingPresentation):
        return t.p
    return 2


# -------------------------------------------------------------- fiber products


def _fiber_terms(fp: FiberProduct, s, e_range, over_p: bool, I=None, J=None):
    """(dim, value list, name) for R, S, T normalized by dim P."""
    P, d = fp.ring, fp.ring.dim
    out = []
    for name, ring, kernel, dim, sign in (
        ("R", fp.left, fp.kernel_left, fp.dim_left, 1),
        ("S", fp.right, fp.kernel_right, fp.dim_right, 1),
        ("T", fp.base, fp.kernel_base, fp.dim_base, -1),
    ):
        if over_p:
            vals = _h(P, s, e_range, I, J, ModuleSpec((kernel,)), d)
        else:
            vals = _h(ring, s, e_range, dim=d)
        out.append((name, dim, sign, vals))
    return out


def _fiber_sum(b: _Builder, fp: FiberProduct, terms):
    d = fp.ring.dim
    kept = [(sign, vals) for name, dim, sign, vals in terms if dim == d]
    dropped = [name for name, dim, _, _ in terms if dim < d]
    if dropped:
        note = f"dropped h-terms of lower dimension: {', '.join(dropped)}"
        if note not in b.report.notes:
            b.report.notes.append(note)
    return _combine(*kept)


def _check_fiber_additivity(b: _Builder, fp: FiberProduct, use_e: bool, general: bool):
    spec = b.spec
    P, d = fp.ring, fp.ring.dim
    b.report.case = fiber_case(fp.dim_left, fp.dim_right, fp.dim_base)
    I = _ideal(spec.I, P) if general else None
    J = _ideal(spec.J, P) if general else None
    if use_e and d < 1:
        raise MissingInput("s-multiplicities need a fiber product of positive dimension")
    for s in spec.s_grid:
        lhs = _h(P, s, spec.e_range, I, J)
        rhs = _fiber_sum(b, fp, _fiber_terms(fp, s, spec.e_range, general, I, J))
        if use_e:
            f = _normalizer_factor(s, d)
            lhs, rhs = _scaled(lhs, f), _scaled(rhs, f)
        b.add("P vs R+S-T", "=", LIMIT, d, s, lhs, rhs)


def _check_surjection(b: _Builder, fp: FiberProduct):
    spec = b.spec
    P = fp.ring
    for name, ring, kernel in (
        ("R", fp.left, fp.kernel_left),
        ("S", fp.right, fp.kernel_right),
        ("T", fp.base, fp.kernel_base),
    ):
        for s in spec.s_grid:
            over_p = _h(P, s, spec.e_range, module=ModuleSpec((kernel,)), dim=ring.dim)
            own = _h(ring, s, spec.e_range)
            b.add(f"{name} over P vs {name}", "=", EXACT, ring.dim, s, over_p, own)


def _fiber_bound(b: _Builder, fp: FiberProduct, bound: Fraction, case: str):
    spec = b.spec
    P, d = fp.ring, fp.ring.dim
    actual = fiber_case(fp.dim_left, fp.dim_right, fp.dim_base)
    b.report.case = actual
    ok = actual == case or (case == "dim R > dim S > dim T" and actual.startswith("dim S > dim R"))
    b.checked(case, ok)
    for s in spec.s_grid:
        lhs = _scaled(_h(P, s, spec.e_range), _normalizer_factor(s, d))
        b.add(f"e_s(P) >= {bound}", ">=", INEQUALITY, d, s, lhs, bound)
    return ok


def _fiber_wy(b: _Builder, fp: FiberProduct):
    spec = b.spec
    P, d = fp.ring, fp.ring.dim
    b.report.case = fiber_case(fp.dim_left, fp.dim_right, fp.dim_base)
    ok = fp.dim_left > fp.dim_right > fp.dim_base
    b.checked("dim R > dim S > dim T", ok)
    ok &= b.checked("d >= 2", fp.dim_left >= 2) == "holds"
    ok &= b.checked("p > 2", P.p > 2) == "holds"
    b.flag("ci", "R is a non-regular complete intersection")
    for s in spec.s_grid:
        lhs = _scaled(_h(P, s, spec.e_range), _normalizer_factor(s, d))
        ref = quadric_reference(P.p, d, Fraction(s), tuple(spec.e_range))
        b.add(f"e_s(P) >= e_s(R_{d})", ">=", INEQUALITY, d, s, lhs, list(ref))
    return ok


# ---------------------------------------------------------------- duplication


def _dup_hypothesis(b: _Builder, dup: Duplication):
    R = dup.base
    qd = R.quotient_dim(dup.ideal)
    return b.checked("dim R/I < dim R", None if qd is None else qd < R.dim)


def _check_duplication(b: _Builder, dup: Duplication, use_e: bool):
    spec = b.spec
    R, D, d = dup.base, dup.ring, dup.base.dim
    held = _dup_hypothesis(b, dup)
    for s in spec.s_grid:
        lhs = _h(D, s, spec.e_range, dim=d)
        rhs = _scaled(_h(R, s, spec.e_range), 2)
        if use_e:
            f = _normalizer_factor(s, d)
            lhs, rhs = _scaled(lhs, f), _scaled(rhs, f)
        b.add("R x I vs 2R", "=", LIMIT, d, s, lhs, rhs)
    return held != "fails"


def _dup_bound(b: _Builder, dup: Duplication, wy: bool):
    spec = b.spec
    D, d = dup.ring, dup.base.dim
    ok = True
    if wy:
        ok &= b.checked("d >= 2", d >= 2) == "holds"
        ok &= b.checked("p > 2", D.p > 2) == "holds"
        b.flag("ci", "R is a non-regular complete intersection")
    else:
        ok &= _dup_hypothesis(b, dup) != "fails"
        b.flag("cm", "R is Cohen-Macaulay")
    for s in spec.s_grid:
        lhs = _scaled(_h(D, s, spec.e_range, dim=d), _normalizer_factor(s, d))
        if wy:
            ref = list(quadric_reference(D.p, d, Fraction(s), tuple(spec.e_range)))
            b.add(f"e_s(R x I) >= e_s(R_{d})", ">=", INEQUALITY, d, s, lhs, ref)
        else:
            b.add("e_s(R x I) >= 1", ">=", INEQUALITY, d, s, lhs, Fraction(1))
    return ok


# ---------------------------------------------------------------- idealization


def _readings(X: Idealization):
    """(name, idealization) pairs: the given M, and the M = R specialization."""
    free = idealization(X.base, ModuleSpec.free(X.base.nvars))
    if X.module == free.module:
        return [("M", X)]
    return [("M", X), ("M=R", free)]


def _pair_over(X: Idealization, I: MonomialIdeal, J: MonomialIdeal):
    return X.lift(I), X.lift(J)


def _check_thm42(b: _Builder, X: Idealization, use_e: bool):
    spec = b.spec
    R, d = X.base, X.base.dim
    I1, I2 = _ideal(spec.I, R), _ideal(spec.J, R)
    J1, J2 = _pair_over(X, I1, I2)
    both = ModuleSpec((MonomialIdeal.zero(R.nvars),) + X.module.summands)
    for s in spec.s_grid:
        lhs = _h(X.ring, s, spec.e_range, J1, J2, dim=d)
        rhs = _h(R, s, spec.e_range, I1, I2, both)
        if use_e:
            f = _normalizer_factor(s, d)
            lhs, rhs = _scaled(lhs, f), _scaled(rhs, f)
        b.add("R x M vs R + M", "=", EXACT, d, s, lhs, rhs)


def _check_cor43(b: _Builder, X: Idealization, use_e: bool):
    spec = b.spec
    R, d = X.base, X.base.dim
    for reading, Y in _readings(X):
        mR = Y.lift(R.maximal_ideal())
        both = ModuleSpec((MonomialIdeal.zero(R.nvars),) + Y.module.summands)
        mdim = _module_dim(R, Y.module)
        for s in spec.s_grid:
            f = _normalizer_factor(s, d) if use_e else Fraction(1)
            whole = _scaled(_h(Y.ring, s, spec.e_range, dim=d), f)
            ideal = _scaled(_h(Y.ring, s, spec.e_range, mR, mR, dim=d), f)
            parts = _scaled(_h(R, s, spec.e_range, module=both), f)
            b.add(f"[{reading}] R x M <= m x mM", "<=", INEQUALITY, d, s, whole, ideal)
            b.add(f"[{reading}] m x mM = R + M", "=", EXACT, d, s, ideal, parts)
            if mdim is not None and mdim < d:
                own = _scaled(_h(R, s, spec.e_range), f)
                b.add(f"[{reading}] m x mM -> R (dim M < dim R)", "=", LIMIT, d, s, ideal, own)
    b.report.notes.append("both readings reported: the ideal m x mM with the given M, and M = R")


def _check_prop46(b: _Builder, X: Idealization, part: str):
    spec = b.spec
    R, d = X.base, X.base.dim
    I1, I2 = _ideal(spec.I, R), _ideal(spec.J, R)
    J1, J2 = _pair_over(X, I1, I2)
    if part == "1":
        mu = X.module.num_generators
        b.report.notes.append(f"mu(M) = {mu}")
        coef, relation, kind = 1 + mu, "<=", INEQUALITY
    elif part == "2":
        if not spec.betti:
            raise MissingInput("P4.6.2 needs the Betti numbers of M (key 'betti')")
        b.hypothesis("M has finite projective dimension with the given Betti numbers",
                     "asserted by user")
        coef = 1 + sum((-1) ** i * int(x) for i, x in enumerate(spec.betti))
        relation, kind = "=", LIMIT
    else:
        if not X.module.is_free:
            b.checked("M is free", False)
            raise MissingInput("P4.6.3-free only covers free modules")
        b.checked("M is free", True)
        b.report.notes.append("only the globally free case is implemented")
        coef, relation, kind = 1 + len(X.module.summands), "=", LIMIT
    for s in spec.s_grid:
        lhs = _h(X.ring, s, spec.e_range, J1, J2, dim=d)
        rhs = _scaled(_h(R, s, spec.e_range, I1, I2), coef)
        b.add(f"R x M vs {coef}*R", relation, kind, d, s, lhs, rhs)


def _check_prop48(b: _Builder, X: Idealization):
    spec = b.spec
    R, d = X.base, X.base.dim
    I = _ideal(spec.I, R)
    sop = len(I.gens) == d and mono.is_artinian(R.monomial_relations + I)
    ok = b.checked("I is generated by a system of parameters", sop) == "holds"
    mdim = _module_dim(R, X.module)
    ok &= b.checked("dim M < dim R", None if mdim is None else mdim < d) != "fails"
    J = X.lift(I)
    bound = quotient_length(X.ring, J)
    for s in spec.s_grid:
        lhs = _scaled(_h(X.ring, s, spec.e_range, J, J, dim=d), _normalizer_factor(s, d))
        b.add("e_s(J) <= length(P/J)", "<=", INEQUALITY, d, s, lhs, Fraction(bound))
    return ok


def _idealization_bound(b: _Builder, X: Idealization, wy: bool):
    spec = b.spec
    R, d = X.base, X.base.dim
    ok = True
    if wy:
        ok &= b.checked("d >= 2", d >= 2) == "holds"
        ok &= b.checked("p > 2", R.p > 2) == "holds"
        b.flag("ci", "R is a non-regular complete intersection")
    else:
        b.flag("cm", "R is Cohen-Macaulay")
    for reading, Y in _readings(X):
        mR = Y.lift(R.maximal_ideal())
        for s in spec.s_grid:
            lhs = _scaled(_h(Y.ring, s, spec.e_range, mR, mR, dim=d), _normalizer_factor(s, d))
            if wy:
                ref = list(quadric_reference(R.p, d, Fraction(s), tuple(spec.e_range)))
                b.add(f"[{reading}] e_s(m x mM) >= e_s(R_{d})", ">=", INEQUALITY, d, s, lhs, ref)
            else:
                b.add(f"[{reading}] e_s(m x mM) >= 1", ">=", INEQUALITY, d, s, lhs, Fraction(1))
    b.report.notes.append("both readings reported: the ideal m x mM with the given M, and M = R")
    return ok


def _union_dim(a: Subspace, b: Subspace) -> int:
    union = Subspace(a.p)
    for v in list(a.rows.values()) + list(b.rows.values()):
        union.insert(v)
    return len(union)


def lemma41_dims(X: Idealization, I: MonomialIdeal, n: Optional[int] = None,
                 q: Optional[int] = None, N: Optional[int] = None):
    """(dim J^n, dim I^n P, dim of their sum) in P/m^N, or the bracket analogue."""
    maxdeg = max((sum(g) for g in I.gens), default=1)
    power = n if n is not None else q
    N = N or power * maxdeg + 1
    A = truncation_oracle(X.ring, N)
    nb = X.base.nvars
    nf = A.normal_form
    Jsp = Subspace(A.p)
    spanning = []
    for deg in range(N):
        for u in mono.iter_monomials_of_degree(X.ring.nvars, deg):
            if sum(u[nb:]) > 1 or u[:nb] not in I:
                continue
            v = nf(u)
            if v and Jsp.insert(v):
                spanning.append(v)
    if n is not None:
        current = list(spanning)
        power_sp = Jsp
        for _ in range(n - 1):
            nxt = Subspace(A.p)
            fresh = []
            for a in current:
                for c in spanning:
                    w = A.mul(a, c)
                    if nxt.insert(w):
                        fresh.append(w)
            power_sp, current = nxt, fresh
        target = ideal_span(A, [nf(g) for g in X.lift(mono.ordinary_power(I, n)).gens])
    else:
        power_sp = ideal_span(A, [A.power(v, q) for v in spanning])
        target = ideal_span(A, [nf(g) for g in X.lift(mono.bracket_power(I, q)).gens])
    return len(power_sp), len(target), _union_dim(power_sp, target)


def _check_lemma41(b: _Builder, X: Idealization):
    spec = b.spec
    R = X.base
    I = _ideal(spec.I, R)
    for n in spec.powers:
        lhs, rhs, union = lemma41_dims(X, I, n=n)
        b.add("dim J^n = dim I^n P", "=", EXACT, R.dim, None, [lhs], [rhs], es=[n], qs=[None])
        b.add("dim (J^n + I^n P) = dim J^n", "=", EXACT, R.dim, None, [union], [lhs],
              es=[n], qs=[None])
    brackets = spec.brackets if spec.brackets is not None else (R.p,)
    for q in brackets:
        if not _is_power_of(q, R.p):
            raise MissingInput(f"bracket exponent {q} is not a power of p = {R.p}")
        lhs, rhs, union = lemma41_dims(X, I, q=q)
        b.add("dim J^[q] = dim I^[q] P", "=", EXACT, R.dim, None, [lhs], [rhs],
              es=[None], qs=[q])
        b.add("dim (J^[q] + I^[q] P) = dim J^[q]", "=", EXACT, R.dim, None, [union], [lhs],
              es=[None], qs=[q])
    b.report.notes.append("values are subspace dimensions inside a truncation P/m^N")


def _is_power_of(q: int, p: int) -> bool:
    while q > 1 and q % p == 0:
        q //= p
    return q == 1


def _check_wy(b: _Builder):
    n = b.spec.count
    c = zigzag_constants(n)
    series = sec_tan_series(n)
    g = Group("zigzag c_d vs series", "=", EXACT, 0, None)
    for d in range(1, n + 1):
        g.points.append((d, None, Fraction(c[d - 1]), series[d] * math.factorial(d)))
    b.groups.append(g)
    b.report.notes.append(
        "bounds 1 + c_d/d!: " + ", ".join(f"d={d}: {wy_bound(d)}" for d in range(1, n + 1))
    )


# ---------------------------------------------------------------- dispatch


def validate(spec: CheckSpec):
    if spec.theorem_id not in THEOREMS:
        raise MissingInput(f"unknown theorem id {spec.theorem_id!r}")
    kind = THEOREMS[spec.theorem_id]
    if kind is None:
        return
    if not isinstance(spec.target, _TARGET_TYPES[kind]):
        raise MissingInput(f"{spec.theorem_id} needs a {kind.replace('_', ' ')} target")
    if not spec.s_grid or not spec.e_range:
        raise MissingInput(f"{spec.theorem_id} needs a non-empty s grid and e range")
    if spec.theorem_id == "P4.6.2" and not spec.betti:
        raise MissingInput("P4.6.2 needs the Betti numbers of M (key 'betti')")


def _dispatch(b: _Builder) -> bool:
    """Fill the builder; returns False when a checkable hypothesis fails."""
    spec, t = b.spec, b.spec.target
    tid = spec.theorem_id
    if tid in ("T3.1", "C3.2"):
        _check_fiber_additivity(b, t, tid == "C3.2", general=True)
    elif tid in ("L3.4", "C3.5"):
        _check_fiber_additivity(b, t, tid == "C3.5", general=False)
    elif tid == "P3.3":
        _check_surjection(b, t)
    elif tid in ("C3.6", "C3.7"):
        return _check_duplication(b, t, tid == "C3.7")
    elif tid == "L4.1":
        _check_lemma41(b, t)
    elif tid in ("T4.2", "L4.7"):
        _check_thm42(b, t, tid == "L4.7")
    elif tid in ("C4.3", "C4.4"):
        _check_cor43(b, t, tid == "C4.4")
    elif tid.startswith("P4.6"):
        _check_prop46(b, t, tid[5])
    elif tid == "P4.8":
        return _check_prop48(b, t)
    elif tid == "T5.1":
        return _idealization_bound(b, t, wy=False)
    elif tid == "T5.2.1":
        b.flag("cm", "R, S, T are Cohen-Macaulay")
        return _fiber_bound(b, t, Fraction(1), "dim R = dim S = dim T")
    elif tid == "T5.2.2":
        b.flag("cm", "R, S are Cohen-Macaulay")
        return _fiber_bound(b, t, Fraction(2), "dim R = dim S > dim T")
    elif tid == "T5.2.3":
        b.flag("cm", "R is Cohen-Macaulay")
        return _fiber_bound(b, t, Fraction(1), "dim R > dim S > dim T")
    elif tid == "P5.3":
        return _dup_bound(b, t, wy=False)
    elif tid == "T5.4":
        return _fiber_wy(b, t)
    elif tid == "P5.5":
        return _dup_bound(b, t, wy=True)
    elif tid == "T5.6":
        return _idealization_bound(b, t, wy=True)
    elif tid == "WY-constants":
        _check_wy(b)
    return True


def run_check(spec: CheckSpec) -> CheckReport:
    report = CheckReport(spec.theorem_id, spec.label)
    start = time.perf_counter()
    try:
        validate(spec)
        b = _Builder(spec, report)
        hypotheses_hold = _dispatch(b)
        verdicts = []
        p = _p(spec)
        q_max = p ** max(spec.e_range) if spec.e_range else 1
        for g in b.groups:
            if g.kind == EXACT:
                v = judge(EXACT, g.slacks(), Fraction(0))
            else:
                v = judge(g.kind, g.slacks(), tolerance_for(spec, g.dim, q_max))
            verdicts.append(v)
            for (e, q, lhs, rhs), slack in zip(g.points, g.slacks()):
                report.rows.append(Row(spec.theorem_id, f"{spec.label}:{g.name}", g.s, e, q,
                                       lhs, rhs, g.relation, slack, v))
        report.verdict = worst(verdicts)
        if not hypotheses_hold:
            report.notes.append("a machine-checkable hypothesis fails; verdict is informational")
            if report.verdict in (PASS, PASS_IN_LIMIT, FAIL):
                report.verdict = INCONCLUSIVE
    except SmultError as exc:
        report.verdict = ERROR
        report.error = f"{type(exc).__name__}: {exc}"
    report.runtime = time.perf_counter() - start
    return report


def run_suite(specs: Sequence[CheckSpec], workers: int = 1) -> list:
    """Run checks in order; with workers > 1 they run in separate processes."""
    specs = list(specs)
    if workers > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run_check, specs))
    return [run_check(s) for s in specs]


# ---------------------------------------------------------------- output

CSV_HEADER = ("theorem_id", "ring", "s", "e", "q", "lhs", "rhs", "slack", "verdict")


def rational(x) -> str:
    if x is None:
        return ""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _cell(x) -> str:
    return "" if x is None else str(x)


def report_csv(reports: Sequence[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        if r.error is not None:
            w.writerow((r.theorem_id, r.label, "", "", "", "", "", "", r.verdict))
            continue
        for row in r.rows:
            w.writerow((row.theorem_id, row.ring, rational(row.s), _cell(row.e), _cell(row.q),
                        rational(row.lhs), rational(row.rhs), rational(row.slack), row.verdict))
    return buf.getvalue()


def summary(reports: Sequence[CheckReport], timings: bool = True) -> str:
    lines = []
    for r in reports:
        head = f"{r.theorem_id:<12} {r.label:<24} {r.verdict}"
        if timings:
            head += f"  ({r.runtime:.2f}s)"
        lines.append(head)
        if r.case:
            lines.append(f"    case: {r.case}")
        for h in r.hypotheses:
            lines.append(f"    hypothesis: {h}")
        for n in r.notes:
            lines.append(f"    note: {n}")
        if r.error:
            lines.append(f"    error: {r.error}")
    counts: dict = {}
    for r in reports:
        counts[r.verdict] = counts.get(r.verdict, 0) + 1
    tally = ", ".join(f"{k}={counts[k]}" for k in sorted(counts, key=_SEVERITY.__getitem__))
    lines.append(f"{len(reports)} checks: {tally or 'none'}")
    return "\n".join(lines)


def exit_code(reports: Sequence[CheckReport]) -> int:
    verdicts = {r.verdict for r in reports}
    if ERROR in verdicts:
        return 3
    if FAIL in verdicts:
        return 1
    return 0


def table_rows(ring: RingPresentation, I: MonomialIdeal, J: MonomialIdeal, s_grid, e_range,
               module: Optional[ModuleSpec] = None, normalizing_dim: Optional[int] = None,
               normalize_e: bool = False) -> list:
    """(s, e, q, length, value) for every grid point."""
    module = module or ModuleSpec.free(ring.nvars)
    out = []
    for s in s_grid:
        query = HQuery(ring, module, I, J, s, e_range, normalizing_dim)
        est = e_estimate(query) if normalize_e else h_estimate(query)
        for x in est.samples:
            out.append((query.s, x.e, x.q, x.length, x.normalized))
    return out


def table_command(ring, I, J, s_grid, e_range, module=None, normalizing_dim=None,
                  digits: int = 12) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(("s", "e", "q", "length", "normalized", "decimal"))
    for s, e, q, length, value in table_rows(ring, I, J, s_grid, e_range, module, normalizing_dim):
        w.writerow((rational(s), e, q, length, rational(value), decimal_string(value, digits)))
    return buf.getvalue()


def decimal_string(x: Fraction, digits: int) -> str:
    sign = "-" if x < 0 else ""
    x = abs(x)
    whole, rem = divmod(x.numerator, x.denominator)
    frac = (rem * 10 ** digits + x.denominator // 2) // x.denominator
    if frac == 10 ** digits:
        whole, frac = whole + 1, 0
    return f"{sign}{whole}.{frac:0{digits}d}"
