"""Presented rings k[x1..xn]/(Q + (f1..fk)) and exact lengths of their quotients.

Q is a monomial ideal, the f_i are arbitrary polynomials over F_p.  Every
length we need is that of an artinian quotient, so polynomial relations
are handled by linear algebra on the finite standard basis of the
monomial part: the image of (f1..fk) in k[x]/B is spanned by the reduced
products f_i * m over standard monomials m of B.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from . import monomial as mono
from .errors import ConfigError, ModulusMismatch, StructuralError
from .modp import check_prime, row_span_dim
from .monomial import MonomialIdeal


@dataclass(frozen=True)
class PolyRelation:
    """A polynomial over F_p, terms kept graded-lex descending."""

    p: int
    nvars: int
    terms: tuple

    def __post_init__(self):
        check_prime(self.p)
        collected: dict = {}
        for m, c in self.terms:
            m = tuple(m)
            if len(m) != self.nvars:
                raise StructuralError(f"term {m!r} does not live in {self.nvars} variables")
            collected[m] = (collected.get(m, 0) + c) % self.p
        terms = tuple(
            sorted(((m, c) for m, c in collected.items() if c),
                   key=lambda t: mono.grlex_key(t[0]), reverse=True)
        )
        if not terms:
            raise StructuralError("polynomial relation has no nonzero terms")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def from_dict(cls, p: int, nvars: int, terms: Mapping) -> PolyRelation:
        return cls(p, nvars, tuple(terms.items()))

    def monomials(self) -> list:
        return [m for m, _ in self.terms]

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m, _ in self.terms}) == 1

    def lift(self, nvars: int, positions: Sequence[int]) -> PolyRelation:
        return PolyRelation(
            self.p, nvars, tuple((mono.embed(m, nvars, positions), c) for m, c in self.terms)
        )

    def __str__(self):
        return format_poly(self)


@dataclass(frozen=True)
class ModuleSpec:
    """The module R/J_1 + ... + R/J_r; J_i = (0) is a free summand."""

    summands: tuple

    def __post_init__(self):
        summands = tuple(self.summands)
        if not summands:
            raise StructuralError("a module needs at least one summand")
        if len({J.nvars for J in summands}) != 1:
            raise StructuralError("module summands live in different ambient rings")
        object.__setattr__(self, "summands", summands)

    @classmethod
    def free(cls, nvars: int, rank: int = 1) -> ModuleSpec:
        return cls(tuple(MonomialIdeal.zero(nvars) for _ in range(rank)))

    @property
    def nvars(self) -> int:
        return self.summands[0].nvars

    @property
    def num_generators(self) -> int:
        """mu(M): summands R/R vanish, every other cyclic piece needs one generator."""
        return sum(1 for J in self.summands if not J.is_unit)

    @property
    def is_free(self) -> bool:
        return all(J.is_zero for J in self.summands)

    def __str__(self):
        return " + ".join("R" if J.is_zero else f"R/{J}" for J in self.summands)


@dataclass(frozen=True)
class ExpandedIdeal:
    """A monomial ideal plus an optional implicit (x_S)^cap summand."""

    ideal: MonomialIdeal
    cap: Optional[int] = None
    cap_vars: Optional[tuple] = None

    def __add__(self, other: MonomialIdeal) -> ExpandedIdeal:
        return replace(self, ideal=self.ideal + other)

    def lift(self, nvars: int, positions: Sequence[int]) -> ExpandedIdeal:
        cap_vars = self.cap_vars
        if self.cap is not None:
            src = range(self.ideal.nvars) if cap_vars is None else cap_vars
            cap_vars = tuple(positions[i] for i in src)
        return ExpandedIdeal(self.ideal.lift(nvars, positions), self.cap, cap_vars)

    def materialize(self) -> MonomialIdeal:
        if self.cap is None:
            return self.ideal
        n = self.ideal.nvars
        idx = range(n) if self.cap_vars is None else self.cap_vars
        power = mono.ordinary_power(MonomialIdeal.of_variables(n, idx), self.cap)
        return self.ideal + power


def _as_expanded(A) -> ExpandedIdeal:
    return A if isinstance(A, ExpandedIdeal) else ExpandedIdeal(A)


@dataclass(frozen=True)
class RingPresentation:
    """R = k[x1..xn]/(Q + (f1..fk)) with maximal ideal (x1..xn).

    ``dim`` is declared, not computed.  ``parameters`` asserts that each
    polynomial relation cuts the dimension of k[x]/Q by exactly one.
    """

    p: int
    nvars: int
    monomial_relations: MonomialIdeal
    dim: int
    poly_relations: tuple = ()
    parameters: bool = False
    labels: Optional[tuple] = None

    def __post_init__(self):
        check_prime(self.p)
        if self.monomial_relations.nvars != self.nvars:
            raise StructuralError("monomial relations use the wrong number of variables")
        rels = tuple(self.poly_relations)
        for f in rels:
            if f.p != self.p:
                raise ModulusMismatch(f"relation over F_{f.p} in a ring over F_{self.p}")
            if f.nvars != self.nvars:
                raise StructuralError("polynomial relation uses the wrong number of variables")
        object.__setattr__(self, "poly_relations", rels)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.nvars:
                raise StructuralError("one label per variable is required")
            object.__setattr__(self, "labels", labels)
        if self.dim < 0:
            raise StructuralError("declared dimension must be non-negative")

    @classmethod
    def polynomial(cls, p: int, nvars: int, labels=None) -> RingPresentation:
        return cls(p, nvars, MonomialIdeal.zero(nvars), nvars, labels=labels)

    @classmethod
    def monomial(cls, p: int, relations: MonomialIdeal, labels=None) -> RingPresentation:
        return cls(p, relations.nvars, relations, mono.krull_dimension(relations), labels=labels)

    @property
    def is_monomial(self) -> bool:
        return not self.poly_relations

    def maximal_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.maximal(self.nvars)

    def check_declared_dim(self):
        """Enforce the declared-dimension rule for user-supplied presentations."""
        k = mono.krull_dimension(self.monomial_relations)
        if self.parameters:
            expected = k - len(self.poly_relations)
        else:
            if self.poly_relations:
                raise StructuralError(
                    "polynomial relations require the parameter flag"
                )
            expected = k
        if self.dim != expected:
            raise StructuralError(
                f"declared dimension {self.dim} disagrees with the presentation ({expected})"
            )
        return self

    def quotient_dim(self, J: MonomialIdeal) -> Optional[int]:
        """dim R/J when decidable (monomial rings); None otherwise."""
        if not self.is_monomial:
            return None
        return mono.krull_dimension(self.monomial_relations + J)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"x{i + 1}"

    def __str__(self):
        return format_ring(self)


def quotient_length(ring: RingPresentation, A, degree_cap: Optional[int] = None) -> int:
    """l(k[x]/(Q + A + m^cap + (f1..fk))).

    ``A`` is a MonomialIdeal or an ExpandedIdeal (which carries its own
    cap); ``degree_cap`` adds m^cap on top.
    """
    A = _as_expanded(A)
    if A.ideal.nvars != ring.nvars:
        raise StructuralError("ideal and ring use different numbers of variables")
    B = ring.monomial_relations + A.ideal
    cap, cap_vars = A.cap, A.cap_vars
    if degree_cap is not None:
        if cap is None:
            cap, cap_vars = degree_cap, None
        elif cap_vars is None:
            cap = min(cap, degree_cap)
        else:
            B = ring.monomial_relations + A.materialize()
            cap, cap_vars = degree_cap, None
    return _length(ring, B, cap, cap_vars)


def _length(ring, B, cap, cap_vars) -> int:
    if not ring.poly_relations:
        return mono.colength(B, cap, cap_vars)
    basis = mono.standard_monomials(B, cap, cap_vars)
    index = {m: i for i, m in enumerate(basis)}
    vectors = []
    for f in ring.poly_relations:
        for m in basis:
            vec = {}
            for t, c in f.terms:
                j = index.get(tuple(map(int.__add__, t, m)))
                if j is not None:
                    vec[j] = c
            if vec:
                vectors.append(vec)
    return len(basis) - row_span_dim(vectors, ring.p)


def module_length(ring: RingPresentation, module: ModuleSpec, A, degree_cap=None) -> int:
    """l(M/AM) for M = sum R/J_i: lengths add over the summands."""
    if module.nvars != ring.nvars:
        raise StructuralError("module and ring use different numbers of variables")
    A = _as_expanded(A)
    return sum(quotient_length(ring, A + J, degree_cap) for J in module.summands)


def expand_pair(I: MonomialIdeal, J: MonomialIdeal, s, q: int) -> ExpandedIdeal:
    """I^ceil(s q) + J^[q].

    Powers of an ideal generated by variables are never materialized; they
    become a degree cap on those variables.
    """
    s = Fraction(s)
    if s <= 0:
        raise StructuralError("s must be positive")
    if q < 1:
        raise StructuralError("q must be positive")
    if I.nvars != J.nvars:
        raise StructuralError("I and J live in different rings")
    return power_ideal(I, math.ceil(s * q), modulo=mono.bracket_power(J, q))


def power_ideal(I: MonomialIdeal, n: int, modulo: Optional[MonomialIdeal] = None) -> ExpandedIdeal:
    """I^n, kept implicit when I is generated by variables."""
    base = MonomialIdeal.zero(I.nvars) if modulo is None else modulo
    if n == 0:
        return ExpandedIdeal(MonomialIdeal.unit(I.nvars))
    if I.is_maximal():
        return ExpandedIdeal(base, n, None)
    variables = I.variable_generators()
    if variables is not None:
        return ExpandedIdeal(base, n, tuple(sorted(variables)))
    return ExpandedIdeal(base + mono.ordinary_power(I, n, modulo=modulo))


def ceil_sq(s, q: int) -> int:
    return math.ceil(Fraction(s) * q)


# ---------------------------------------------------------------- text format

_TERM = re.compile(r"^(?:(\d+)\s*\*\s*)?(.+)$")


def parse_poly(text: str, p: int, nvars: int) -> PolyRelation:
    """Parse ``coeff*monomial`` terms joined by + or -."""
    src = text.replace(" ", "")
    if not src:
        raise StructuralError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", src)
    if "".join(pieces) != src:
        raise StructuralError(f"cannot parse polynomial {text!r}")
    terms = []
    for piece in pieces:
        sign = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        if body.isdigit():
            coeff, body = int(body), "1"
        else:
            match = _TERM.match(body)
            coeff = int(match.group(1)) if match.group(1) else 1
            body = match.group(2)
        terms.append((mono.parse_monomial(body, nvars), sign * coeff))
    return PolyRelation(p, nvars, tuple(terms))


def format_poly(f: PolyRelation) -> str:
    return "+".join(f"{c}*{mono.format_monomial(m)}" for m, c in f.terms)


_RING_KEYS = ("p", "n", "labels", "mono", "poly", "dim", "param")


def ring_from_fields(fields: Mapping, check: bool = True) -> RingPresentation:
    """Build a ring from the key/value form shared by inline specs and config tables."""
    unknown = set(fields) - set(_RING_KEYS)
    if unknown:
        raise ConfigError(f"unknown ring keys {sorted(unknown)}")
    try:
        p = int(fields["p"])
        n = int(fields["n"])
    except KeyError as exc:
        raise ConfigError(f"ring spec is missing {exc.args[0]!r}") from None
    labels = fields.get("labels")
    if isinstance(labels, str):
        labels = tuple(x.strip() for x in labels.split(",") if x.strip())
    Q = fields.get("mono", "()")
    Q = mono.parse_ideal(Q, n) if isinstance(Q, str) else MonomialIdeal(
        n, [mono.parse_monomial(t, n) for t in Q])
    polys = fields.get("poly", ())
    if isinstance(polys, str):
        polys = [t for t in polys.split(",") if t.strip()]
    rels = tuple(parse_poly(t, p, n) for t in polys)
    param = fields.get("param", False)
    if isinstance(param, str):
        param = param.strip().lower() in ("1", "true", "yes")
    dim = fields.get("dim")
    if dim is None:
        dim = mono.krull_dimension(Q) - (len(rels) if param else 0)
    ring = RingPresentation(p, n, Q, int(dim), rels, bool(param), labels)
    return ring.check_declared_dim() if check else ring


def parse_ring(text: str, check: bool = True) -> RingPresentation:
    """Parse ``p=3; n=2; mono=(x1*x2); dim=1``."""
    fields = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ConfigError(f"ring spec entry {chunk!r} lacks '='")
        key = key.strip()
        if key in fields:
            raise ConfigError(f"duplicate ring key {key!r}")
        fields[key] = value.strip()
    try:
        return ring_from_fields(fields, check=check)
    except StructuralError as exc:
        raise ConfigError(str(exc)) from exc


def format_ring(ring: RingPresentation) -> str:
    parts = [f"p={ring.p}", f"n={ring.nvars}"]
    if ring.labels:
        parts.append("labels=" + ",".join(ring.labels))
    parts.append("mono=" + mono.format_ideal(ring.monomial_relations))
    if ring.poly_relations:
        parts.append("poly=" + ",".join(format_poly(f) for f in ring.poly_relations))
    parts.append(f"dim={ring.dim}")
    if ring.parameters:
        parts.append("param=1")
    return "; ".join(parts)


def quadric(p: int, d: int) -> RingPresentation:
    """k[x0..xd]/(x0^2 + ... + xd^2), of dimension d."""
    n = d + 1
    f = PolyRelation(p, n, tuple((tuple(2 if j == i else 0 for j in range(n)), 1) for i in range(n)))
    return RingPresentation(
        p, n, MonomialIdeal.zero(n), d, (f,), True, tuple(f"x{i}" for i in range(n))
    )
