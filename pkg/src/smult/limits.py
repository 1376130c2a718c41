"""Normalizer, zigzag constants and finite-Frobenius-step estimates of h_s and e_s."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import StructuralError
from .monomial import MonomialIdeal, bracket_power
from .ring import (
    ExpandedIdeal,
    ModuleSpec,
    RingPresentation,
    expand_pair,
    module_length,
    power_ideal,
)


def normalizer(s, d: int) -> Fraction:
    """H_s(d): volume of {x in [0,1]^d : sum x_i <= s}."""
    s = Fraction(s)
    if s <= 0:
        raise StructuralError("s must be positive")
    if d < 1:
        raise StructuralError("dimension must be at least 1")
    total = Fraction(0)
    for i in range(min(math.floor(s), d) + 1):
        total += (-1) ** i * math.comb(d, i) * (s - i) ** d
    return total / math.factorial(d)


def lattice_count(q: int, d: int, c: int) -> int:
    """#{a in [0, q)^d : a_1 + ... + a_d < c}, by inclusion-exclusion."""
    if c <= 0:
        return 0
    total = 0
    for i in range(d + 1):
        m = c - 1 - i * q
        if m < 0:
            break
        total += (-1) ** i * math.comb(d, i) * math.comb(m + d, d)
    return total


def zigzag_constants(n: int) -> list:
    """c_1..c_n with sec x + tan x = 1 + sum c_d x^d / d!, via the boustrophedon triangle."""
    if n < 1:
        raise StructuralError("need at least one constant")
    row = [1]
    out = []
    for k in range(1, n + 1):
        nxt = [0]
        for j in range(1, k + 1):
            nxt.append(nxt[j - 1] + row[k - j])
        row = nxt
        out.append(row[-1])
    return out


def wy_bound(d: int) -> Fraction:
    """The lower bound 1 + c_d/d! for non-regular rings of dimension d."""
    return 1 + Fraction(zigzag_constants(d)[-1], math.factorial(d))


def sec_tan_series(n: int) -> list:
    """Exact Taylor coefficients a_0..a_n of sec x + tan x, from power-series arithmetic."""
    cos = [Fraction(0)] * (n + 1)
    sin = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        sign = -1 if (k // 2) % 2 else 1
        coef = Fraction(sign, math.factorial(k))
        if k % 2:
            sin[k] = coef
        else:
            cos[k] = coef
    sec = [Fraction(0)] * (n + 1)
    sec[0] = 1 / cos[0]
    for k in range(1, n + 1):
        sec[k] = -sum(cos[j] * sec[k - j] for j in range(1, k + 1)) / cos[0]
    tan = [sum(sin[j] * sec[k - j] for j in range(k + 1)) for k in range(n + 1)]
    return [a + b for a, b in zip(sec, tan)]


# ----------------------------------------------------------------- estimates


@dataclass(frozen=True)
class Sample:
    e: int
    q: int
    length: int
    normalized: Fraction


@dataclass(frozen=True)
class HEstimate:
    samples: tuple
    richardson: Fraction
    gap: Optional[Fraction]

    @property
    def last(self) -> Fraction:
        return self.samples[-1].normalized

    def values(self) -> list:
        return [x.normalized for x in self.samples]


def richardson(samples: Sequence) -> Fraction:
    """Limit estimate from the last two samples under a 1/q error model."""
    if len(samples) == 1:
        return samples[0].normalized
    a, b = samples[-2], samples[-1]
    return (b.q * b.normalized - a.q * a.normalized) / (b.q - a.q)


def estimate_from(samples: Sequence) -> HEstimate:
    samples = tuple(samples)
    gap = None
    if len(samples) > 1:
        gap = abs(samples[-1].normalized - samples[-2].normalized)
    return HEstimate(samples, richardson(samples), gap)


def _check_range(e_range) -> tuple:
    e_range = tuple(int(e) for e in e_range)
    if not e_range:
        raise StructuralError("e_range is empty")
    if any(e < 1 for e in e_range) or list(e_range) != sorted(set(e_range)):
        raise StructuralError("e_range must be strictly increasing positive integers")
    return e_range


@dataclass(frozen=True)
class HQuery:
    ring: RingPresentation
    module: ModuleSpec
    I: MonomialIdeal
    J: MonomialIdeal
    s: Fraction
    e_range: tuple
    normalizing_dim: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "s", Fraction(self.s))
        object.__setattr__(self, "e_range", _check_range(self.e_range))
        if self.s <= 0:
            raise StructuralError("s must be positive")

    @classmethod
    def maximal(cls, ring: RingPresentation, s, e_range, module: Optional[ModuleSpec] = None,
                normalizing_dim: Optional[int] = None) -> HQuery:
        m = ring.maximal_ideal()
        module = module or ModuleSpec.free(ring.nvars)
        return cls(ring, module, m, m, s, e_range, normalizing_dim)

    @property
    def dim(self) -> int:
        return self.ring.dim if self.normalizing_dim is None else self.normalizing_dim


def h_estimate(query: HQuery) -> HEstimate:
    d = query.dim
    samples = []
    for e in query.e_range:
        q = query.ring.p ** e
        A = expand_pair(query.I, query.J, query.s, q)
        length = module_length(query.ring, query.module, A)
        samples.append(Sample(e, q, length, Fraction(length, q ** d)))
    return estimate_from(samples)


def scale(est: HEstimate, factor: Fraction) -> HEstimate:
    samples = [Sample(x.e, x.q, x.length, x.normalized * factor) for x in est.samples]
    return estimate_from(samples)


def e_estimate(query: HQuery) -> HEstimate:
    """h_s divided by H_s(d); needs d >= 1."""
    return scale(h_estimate(query), 1 / normalizer(query.s, query.dim))


def endpoint_multiplicities(ring: RingPresentation, module: Optional[ModuleSpec],
                            I: MonomialIdeal, e_range, normalizing_dim: Optional[int] = None):
    """(Hilbert-Kunz, Hilbert-Samuel) estimates along n = q = p^e."""
    e_range = _check_range(e_range)
    module = module or ModuleSpec.free(ring.nvars)
    d = ring.dim if normalizing_dim is None else normalizing_dim
    hk, hs = [], []
    for e in e_range:
        q = ring.p ** e
        a = module_length(ring, module, ExpandedIdeal(bracket_power(I, q)))
        hk.append(Sample(e, q, a, Fraction(a, q ** d)))
        b = module_length(ring, module, power_ideal(I, q))
        hs.append(Sample(e, q, b, Fraction(math.factorial(d) * b, q ** d)))
    return estimate_from(hk), estimate_from(hs)


@dataclass(frozen=True)
class InterpolationPoint:
    s: Fraction
    e_s: Fraction
    target: str
    target_value: Fraction

    @property
    def distance(self) -> Fraction:
        return abs(self.e_s - self.target_value)


def interpolation_profile(ring: RingPresentation, I: MonomialIdeal, e_range,
                          small_s=None, large_s=None,
                          module: Optional[ModuleSpec] = None) -> list:
    """Compare e_s at e_max with the two endpoint multiplicities.

    The large-s threshold defaults to d times the largest generator degree
    of I; nothing here asserts where the coincidence sets in.
    """
    e_range = _check_range(e_range)
    module = module or ModuleSpec.free(ring.nvars)
    d = ring.dim
    hk, hs = endpoint_multiplicities(ring, module, I, e_range)
    q_max = ring.p ** e_range[-1]
    small = Fraction(small_s) if small_s is not None else Fraction(1, q_max)
    maxdeg = max((sum(g) for g in I.gens), default=1)
    large = Fraction(large_s) if large_s is not None else Fraction(d * maxdeg)
    out = []
    for s, name, ref in ((small, "hilbert-samuel", hs), (large, "hilbert-kunz", hk)):
        est = e_estimate(HQuery(ring, module, I, I, s, e_range))
        out.append(InterpolationPoint(s, est.last, name, ref.last))
    return out
