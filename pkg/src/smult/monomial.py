"""Monomial ideals in a polynomial ring k[x1, ..., xn].

A monomial is a plain tuple of non-negative exponents.  Ideals keep a
minimal generating set at all times, ordered lexicographically, so two
equal ideals always compare equal.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import NotArtinian, StructuralError

Monomial = tuple


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial):
    return (sum(m), m)


def _check_lengths(gens, nvars):
    for g in gens:
        if len(g) != nvars:
            raise StructuralError(
                f"monomial {g!r} has {len(g)} exponents, expected {nvars}"
            )
        if any(x < 0 for x in g):
            raise StructuralError(f"negative exponent in {g!r}")


def _minimal(gens: Iterable[Monomial]) -> tuple:
    kept: list = []
    for g in sorted(set(gens), key=grlex_key):
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """Ideal generated by monomials; ``gens`` is always minimal and sorted."""

    nvars: int
    gens: tuple = ()

    def __post_init__(self):
        if self.nvars < 0:
            raise StructuralError("nvars must be non-negative")
        gens = tuple(tuple(int(x) for x in g) for g in self.gens)
        _check_lengths(gens, self.nvars)
        object.__setattr__(self, "gens", _minimal(gens))

    @classmethod
    def zero(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, ((0,) * nvars,))

    @classmethod
    def maximal(cls, nvars: int) -> MonomialIdeal:
        return cls(nvars, variable_monomials(nvars))

    @classmethod
    def of_variables(cls, nvars: int, indices: Iterable[int]) -> MonomialIdeal:
        return cls(nvars, [unit_vector(nvars, i) for i in indices])

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return (0,) * self.nvars in self.gens

    def __contains__(self, m: Monomial) -> bool:
        return contains(self, m)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_sum(self, other)

    def __mul__(self, other: MonomialIdeal) -> MonomialIdeal:
        return ideal_product(self, other)

    def __le__(self, other: MonomialIdeal) -> bool:
        """Ideal inclusion."""
        return all(g in other for g in self.gens)

    def pure_power_exponents(self) -> list:
        """Smallest b_i with x_i^b_i in the ideal, or None per variable."""
        bounds: list = [None] * self.nvars
        for g in self.gens:
            support = [i for i, x in enumerate(g) if x]
            if len(support) == 1:
                i = support[0]
                if bounds[i] is None or g[i] < bounds[i]:
                    bounds[i] = g[i]
        return bounds

    def variable_generators(self) -> Optional[list]:
        """Indices i when the ideal is generated by distinct variables x_i."""
        idx = []
        for g in self.gens:
            if sum(g) != 1:
                return None
            idx.append(g.index(1))
        return idx if idx else None

    def is_maximal(self) -> bool:
        v = self.variable_generators()
        return v is not None and len(v) == self.nvars

    def lift(self, nvars: int, positions: Sequence[int]) -> MonomialIdeal:
        """Embed into a larger ring, sending variable i to ``positions[i]``."""
        return MonomialIdeal(nvars, [embed(g, nvars, positions) for g in self.gens])

    def quotient(self, m: Monomial) -> MonomialIdeal:
        """The colon ideal (I : m)."""
        return MonomialIdeal(
            self.nvars, [tuple(max(a - b, 0) for a, b in zip(g, m)) for g in self.gens]
        )

    def intersection(self, other: MonomialIdeal) -> MonomialIdeal:
        _same_ambient(self, other)
        return MonomialIdeal(
            self.nvars,
            [tuple(map(max, a, b)) for a in self.gens for b in other.gens],
        )

    def __str__(self) -> str:
        return format_ideal(self)


def unit_vector(nvars: int, i: int) -> Monomial:
    return tuple(1 if j == i else 0 for j in range(nvars))


def variable_monomials(nvars: int) -> list:
    return [unit_vector(nvars, i) for i in range(nvars)]


def embed(m: Monomial, nvars: int, positions: Sequence[int]) -> Monomial:
    out = [0] * nvars
    for x, pos in zip(m, positions):
        out[pos] += x
    return tuple(out)


def _same_ambient(a: MonomialIdeal, b: MonomialIdeal):
    if a.nvars != b.nvars:
        raise StructuralError(
            f"ideals live in {a.nvars} and {b.nvars} variables respectively"
        )


def minimalize(gens: Iterable[Monomial], nvars: Optional[int] = None) -> MonomialIdeal:
    gens = [tuple(g) for g in gens]
    if nvars is None:
        if not gens:
            raise StructuralError("cannot infer ambient size of an empty generator set")
        nvars = len(gens[0])
    return MonomialIdeal(nvars, gens)


def contains(ideal: MonomialIdeal, m: Monomial) -> bool:
    if len(m) != ideal.nvars:
        raise StructuralError(f"monomial {m!r} does not live in {ideal.nvars} variables")
    return any(divides(g, m) for g in ideal.gens)


def ideal_sum(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(a, b)
    return MonomialIdeal(a.nvars, a.gens + b.gens)


def ideal_product(a: MonomialIdeal, b: MonomialIdeal) -> MonomialIdeal:
    _same_ambient(a, b)
    return MonomialIdeal(
        a.nvars, [tuple(map(int.__add__, g, h)) for g in a.gens for h in b.gens]
    )


def bracket_power(ideal: MonomialIdeal, q: int) -> MonomialIdeal:
    if q < 1:
        raise StructuralError("bracket power exponent must be positive")
    return MonomialIdeal(ideal.nvars, [tuple(q * x for x in g) for g in ideal.gens])


def ordinary_power(
    ideal: MonomialIdeal, n: int, modulo: Optional[MonomialIdeal] = None
) -> MonomialIdeal:
    """I^n, minimalizing after every multiplication step.

    With ``modulo`` set, products already lying in it are discarded as soon
    as they appear; the result then only satisfies
    ``result + modulo == I^n + modulo``.
    """
    if n < 0:
        raise StructuralError("power must be non-negative")
    current = MonomialIdeal.unit(ideal.nvars)
    for _ in range(n):
        products = {tuple(map(int.__add__, g, h)) for g in current.gens for h in ideal.gens}
        if modulo is not None:
            products = [m for m in products if m not in modulo]
        current = MonomialIdeal(ideal.nvars, products)
        if current.is_zero:
            break
    return current


def is_artinian(ideal: MonomialIdeal) -> bool:
    """True iff every variable has a pure power inside the ideal."""
    if ideal.is_unit:
        return True
    return all(b is not None for b in ideal.pure_power_exponents())


def _cap_mask(nvars, cap_vars):
    if cap_vars is None:
        return (True,) * nvars
    chosen = set(cap_vars)
    return tuple(i in chosen for i in range(nvars))


def colength(
    ideal: MonomialIdeal,
    degree_cap: Optional[int] = None,
    cap_vars: Optional[Iterable[int]] = None,
) -> int:
    """Number of standard monomials of ``ideal``.

    With ``degree_cap`` only monomials of total degree below the cap are
    counted, i.e. the colength of I + m^cap.  ``cap_vars`` restricts the
    degree to a subset of the variables, giving I + (x_S)^cap.

    Counting recurses on the first variable, slicing off the ideal of the
    remaining variables for each exponent, and memoizes on the slices.
    """
    n = ideal.nvars
    mask = _cap_mask(n, cap_vars)
    memo: dict = {}

    def count(k: int, gens: tuple, cap) -> int:
        if cap is not None and cap <= 0:
            return 0
        if k == n:
            return 0 if gens else 1
        key = (k, gens, cap)
        hit = memo.get(key)
        if hit is not None:
            return hit
        bound = None
        for g in gens:
            if g[0] and not any(g[1:]):
                bound = g[0] if bound is None else min(bound, g[0])
            elif not any(g):
                memo[key] = 0
                return 0
        capped = cap is not None and mask[k]
        if capped:
            bound = cap if bound is None else min(bound, cap)
        if bound is None:
            raise NotArtinian(f"no pure power of x{k + 1} bounds the standard monomials")
        if k == n - 1:
            memo[key] = bound
            return bound
        by_level: dict = {}
        for g in gens:
            by_level.setdefault(g[0], []).append(g[1:])
        breakpoints = sorted(t for t in by_level if t < bound)
        total = 0
        active: list = []
        sliced: tuple = ()
        edges = breakpoints + [bound]
        if not breakpoints or breakpoints[0] != 0:
            edges = [0] + edges
        for lo, hi in zip(edges, edges[1:]):
            if lo in by_level:
                active.extend(by_level[lo])
                sliced = _minimal(active)
                active = list(sliced)
            if capped:
                for t in range(lo, hi):
                    total += count(k + 1, sliced, cap - t)
            else:
                total += (hi - lo) * count(k + 1, sliced, cap)
        memo[key] = total
        return total

    return count(0, ideal.gens, degree_cap)


def standard_monomials(
    ideal: MonomialIdeal,
    degree_cap: Optional[int] = None,
    cap_vars: Optional[Iterable[int]] = None,
) -> list:
    """All standard monomials, graded-lex sorted."""
    n = ideal.nvars
    mask = _cap_mask(n, cap_vars)
    out: list = []

    def walk(k: int, gens: tuple, cap, prefix: tuple):
        if cap is not None and cap <= 0:
            return
        if any(not any(g) for g in gens):
            return
        if k == n:
            out.append(prefix)
            return
        bound = None
        for g in gens:
            if g[0] and not any(g[1:]):
                bound = g[0] if bound is None else min(bound, g[0])
        capped = cap is not None and mask[k]
        if capped:
            bound = cap if bound is None else min(bound, cap)
        if bound is None:
            raise NotArtinian(f"no pure power of x{k + 1} bounds the standard monomials")
        for t in range(bound):
            sliced = _minimal(g[1:] for g in gens if g[0] <= t)
            walk(k + 1, sliced, cap - t if capped else cap, prefix + (t,))

    walk(0, ideal.gens, degree_cap, ())
    out.sort(key=grlex_key)
    return out


def brute_force_colength(
    ideal: MonomialIdeal,
    degree_cap: Optional[int] = None,
    cap_vars: Optional[Iterable[int]] = None,
) -> int:
    """Box-enumeration oracle for :func:`colength`."""
    if ideal.is_unit:
        return 0
    mask = _cap_mask(ideal.nvars, cap_vars)
    bounds = ideal.pure_power_exponents()
    box = []
    for i, b in enumerate(bounds):
        if b is None and (degree_cap is None or not mask[i]):
            raise NotArtinian(f"x{i + 1} is unbounded")
        limit = b if b is not None else degree_cap
        if degree_cap is not None and mask[i]:
            limit = min(limit, degree_cap)
        box.append(range(limit))
    count = 0
    for m in itertools.product(*box):
        if degree_cap is not None and sum(x for x, c in zip(m, mask) if c) >= degree_cap:
            continue
        if not any(divides(g, m) for g in ideal.gens):
            count += 1
    return count


def krull_dimension(ideal: MonomialIdeal) -> int:
    """Dimension of k[x]/Q: the largest variable set containing no generator support.

    Returns -1 for the unit ideal (the zero ring).
    """
    if ideal.is_unit:
        return -1
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in ideal.gens]
    for size in range(ideal.nvars, -1, -1):
        for subset in itertools.combinations(range(ideal.nvars), size):
            chosen = set(subset)
            if not any(s <= chosen for s in supports):
                return size
    return 0


_MONO_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, nvars: int) -> Monomial:
    """Parse ``x1^2*x3`` (1-indexed variables); ``1`` is the empty product."""
    text = text.strip()
    exps = [0] * nvars
    if text == "1":
        return tuple(exps)
    if not text:
        raise StructuralError("empty monomial")
    for factor in text.split("*"):
        match = _MONO_FACTOR.match(factor.strip())
        if not match:
            raise StructuralError(f"bad monomial factor {factor!r}")
        i = int(match.group(1))
        if not 1 <= i <= nvars:
            raise StructuralError(f"variable x{i} outside x1..x{nvars}")
        exps[i - 1] += int(match.group(2) or 1)
    return tuple(exps)


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, x in enumerate(m):
        if x == 1:
            parts.append(f"x{i + 1}")
        elif x > 1:
            parts.append(f"x{i + 1}^{x}")
    return "*".join(parts) if parts else "1"


def parse_ideal(text: str, nvars: int) -> MonomialIdeal:
    """Parse ``(x1^2, x2)``; ``()`` and ``(0)`` are the zero ideal."""
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise StructuralError(f"ideal {text!r} must be parenthesized")
    body = text[1:-1].strip()
    if body in ("", "0"):
        return MonomialIdeal.zero(nvars)
    return MonomialIdeal(nvars, [parse_monomial(t, nvars) for t in body.split(",")])


def format_ideal(ideal: MonomialIdeal) -> str:
    return "(" + ", ".join(format_monomial(g) for g in ideal.gens) + ")"


def iter_monomials_of_degree(nvars: int, deg: int) -> Iterator[Monomial]:
    if nvars == 0:
        if deg == 0:
            yield ()
        return
    for first in range(deg, -1, -1):
        for rest in iter_monomials_of_degree(nvars - 1, deg - first):
            yield (first,) + rest
