"""Presentations of fiber products, idealizations and amalgamated duplications.

Each constructor returns a small record holding the presented ring plus
whatever bookkeeping the theorem checks need (kernels of the natural
projections, variable positions).  The second half of the module is an
independent oracle: explicit finite-dimensional algebras, built either from
a presentation truncated at m^N or directly from the set-theoretic
definition of the construction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import monomial as mono
from .errors import (
    CharacteristicMismatch,
    StructuralError,
    TruncationTooSmall,
    UnsupportedIdeal,
    UnsupportedSurjection,
)
from .monomial import MonomialIdeal
from .ring import ModuleSpec, PolyRelation, RingPresentation


# ------------------------------------------------------------- fiber products


@dataclass(frozen=True)
class FiberProduct:
    """R x_T S for surjections that match variables pairwise and kill the rest.

    Variables of the presentation: R's variables in order, then the
    unmatched variables of S.  ``kernel_left`` etc. are the monomial ideals
    K with R = P/K, S = P/K, T = P/K.
    """

    left: RingPresentation
    right: RingPresentation
    match: tuple
    ring: RingPresentation
    base: RingPresentation
    right_positions: tuple
    kernel_left: MonomialIdeal
    kernel_right: MonomialIdeal
    kernel_base: MonomialIdeal

    @property
    def dim_left(self):
        return self.left.dim

    @property
    def dim_right(self):
        return self.right.dim

    @property
    def dim_base(self):
        return self.base.dim


def _support(m):
    return {i for i, x in enumerate(m) if x}


def fiber_product(left: RingPresentation, right: RingPresentation, match=()) -> FiberProduct:
    """``match`` lists 0-based pairs (i, j): x_i of ``left`` and x_j of ``right``
    map to the same variable of T.  An empty match means T = k."""
    if left.p != right.p:
        raise CharacteristicMismatch(f"factors over F_{left.p} and F_{right.p}")
    match = tuple((int(i), int(j)) for i, j in match)
    li = [i for i, _ in match]
    rj = [j for _, j in match]
    if len(set(li)) != len(li) or len(set(rj)) != len(rj):
        raise UnsupportedSurjection("each variable may be matched at most once")
    if any(not 0 <= i < left.nvars for i in li) or any(not 0 <= j < right.nvars for j in rj):
        raise UnsupportedSurjection("matched variable index out of range")

    nl = left.nvars
    partner = dict((j, i) for i, j in match)
    right_pos = []
    nxt = nl
    for j in range(right.nvars):
        if j in partner:
            right_pos.append(partner[j])
        else:
            right_pos.append(nxt)
            nxt += 1
    n = nxt
    shared = set(li)
    a_vars = [i for i in range(nl) if i not in shared]
    b_vars = list(range(nl, n))

    def split(Q: MonomialIdeal, positions, own):
        own_part, shared_part = [], []
        for g in Q.gens:
            lifted = mono.embed(g, n, positions)
            (own_part if _support(lifted) & own else shared_part).append(lifted)
        return own_part, MonomialIdeal(n, shared_part)

    QRa, QRsh = split(left.monomial_relations, range(nl), set(a_vars))
    QSb, QSsh = split(right.monomial_relations, right_pos, set(b_vars))
    a_ideal = MonomialIdeal.of_variables(n, a_vars)
    b_ideal = MonomialIdeal.of_variables(n, b_vars)
    relations = (
        MonomialIdeal(n, QRa + QSb)
        + a_ideal * QRsh
        + b_ideal * QSsh
        + QRsh.intersection(QSsh)
        + a_ideal * b_ideal
    )

    polys: list = []
    shared_polys: list = []
    right_lifted = [f.lift(n, right_pos) for f in right.poly_relations]
    for f in left.poly_relations:
        g = f.lift(n, range(nl))
        if all(_support(m) & set(a_vars) for m in g.monomials()):
            polys.append(g)
        elif g in right_lifted:
            shared_polys.append(g)
        else:
            raise UnsupportedSurjection(
                f"relation {g} of the left factor does not vanish on the right factor"
            )
    for g in right_lifted:
        if all(_support(m) & set(b_vars) for m in g.monomials()):
            polys.append(g)
        elif g not in shared_polys:
            raise UnsupportedSurjection(
                f"relation {g} of the right factor does not vanish on the left factor"
            )
    polys.extend(shared_polys)

    labels = None
    if left.labels or right.labels:
        labels = [left.label(i) for i in range(nl)]
        for j in range(right.nvars):
            if j not in partner:
                name = right.label(j)
                while name in labels:
                    name += "'"
                labels.append(name)

    dim = max(left.dim, right.dim)
    ring = RingPresentation(
        left.p, n, relations, dim, tuple(polys),
        parameters=False, labels=tuple(labels) if labels else None,
    )
    if ring.is_monomial and mono.krull_dimension(relations) != dim:
        raise StructuralError("fiber product presentation has an unexpected dimension")

    # T lives on the matched variables, in left order
    sh_sorted = sorted(shared)
    nt = len(sh_sorted)

    def project(m):
        return tuple(m[v] for v in sh_sorted)

    QT = MonomialIdeal(nt, [project(g) for g in (QRsh + QSsh).gens])
    t_polys = tuple(
        PolyRelation(left.p, nt, tuple((project(m), c) for m, c in f.terms)) for f in shared_polys
    )
    t_dim = mono.krull_dimension(QT) - len(t_polys)
    base = RingPresentation(
        left.p, nt, QT, max(t_dim, 0), t_polys, parameters=bool(t_polys),
        labels=tuple(left.label(v) for v in sh_sorted) if labels else None,
    )
    if base.dim > min(left.dim, right.dim):
        raise UnsupportedSurjection("T cannot have larger dimension than either factor")

    return FiberProduct(
        left=left,
        right=right,
        match=match,
        ring=ring,
        base=base,
        right_positions=tuple(right_pos),
        kernel_left=b_ideal + left.monomial_relations.lift(n, range(nl)),
        kernel_right=a_ideal + right.monomial_relations.lift(n, right_pos),
        kernel_base=a_ideal + b_ideal + QRsh + QSsh,
    )


def fiber_product_presentation(left, right, match=()) -> RingPresentation:
    return fiber_product(left, right, match).ring


# -------------------------------------------------------------- idealizations


@dataclass(frozen=True)
class Idealization:
    """R ⋉ M with M = sum R/J_i; new variables z_i follow R's variables."""

    base: RingPresentation
    module: ModuleSpec
    ring: RingPresentation

    @property
    def base_positions(self) -> tuple:
        return tuple(range(self.base.nvars))

    def lift(self, J: MonomialIdeal) -> MonomialIdeal:
        return J.lift(self.ring.nvars, self.base_positions)


def idealization(base: RingPresentation, module: ModuleSpec) -> Idealization:
    if module.nvars != base.nvars:
        raise StructuralError("module summands must live in the base ring's variables")
    nb, r = base.nvars, len(module.summands)
    n = nb + r
    pos = range(nb)
    gens = [mono.embed(g, n, pos) for g in base.monomial_relations.gens]
    for i in range(r):
        for j in range(i, r):
            m = [0] * n
            m[nb + i] += 1
            m[nb + j] += 1
            gens.append(tuple(m))
    for i, J in enumerate(module.summands):
        for g in J.gens:
            m = list(mono.embed(g, n, pos))
            m[nb + i] += 1
            gens.append(tuple(m))
    labels = None
    if base.labels:
        labels = tuple(base.labels) + tuple(f"z{i + 1}" for i in range(r))
    ring = RingPresentation(
        base.p, n, MonomialIdeal(n, gens), base.dim,
        tuple(f.lift(n, pos) for f in base.poly_relations),
        parameters=base.parameters, labels=labels,
    )
    return Idealization(base, module, ring)


def idealization_presentation(base, module) -> RingPresentation:
    return idealization(base, module).ring


# ------------------------------------------------------ amalgamated duplication


@dataclass(frozen=True)
class Duplication:
    """R ⋈ I with z_k standing for (0, i_k)."""

    base: RingPresentation
    ideal: MonomialIdeal
    ring: RingPresentation


def duplication(base: RingPresentation, ideal: MonomialIdeal) -> Duplication:
    if ideal.nvars != base.nvars:
        raise StructuralError("ideal must live in the base ring's variables")
    if base.poly_relations:
        raise UnsupportedIdeal("duplication needs a monomial base ring")
    if ideal.is_unit:
        raise UnsupportedIdeal("the duplicated ideal must be proper")
    Q = base.monomial_relations
    gens = [g for g in ideal.gens if g not in Q]
    if not gens:
        raise UnsupportedIdeal("the ideal is zero in the base ring")
    nb, m = base.nvars, len(gens)
    n = nb + m
    pos = range(nb)

    def z(k):
        return tuple(1 if i == nb + k else 0 for i in range(n))

    def add(*ms):
        return tuple(map(sum, zip(*ms)))

    mono_rels = [mono.embed(g, n, pos) for g in Q.gens]
    for k, g in enumerate(gens):
        for h in Q.quotient(g).gens:
            mono_rels.append(add(mono.embed(h, n, pos), z(k)))
    polys = []
    for k in range(m):
        for l in range(k, m):
            prod = add(gens[k], gens[l])
            zz = add(z(k), z(l))
            if prod in Q:
                mono_rels.append(zz)
                continue
            divisor = next((t for t, g in enumerate(gens) if mono.divides(g, prod)), None)
            if divisor is None:
                raise UnsupportedIdeal(f"no generator divides {mono.format_monomial(prod)}")
            cof = tuple(a - b for a, b in zip(prod, gens[divisor]))
            polys.append(((zz, 1), (add(mono.embed(cof, n, pos), z(divisor)), -1)))
    for k in range(m):
        for l in range(k + 1, m):
            lcm = tuple(map(max, gens[k], gens[l]))
            ck = tuple(a - b for a, b in zip(lcm, gens[k]))
            cl = tuple(a - b for a, b in zip(lcm, gens[l]))
            left = add(mono.embed(ck, n, pos), z(k))
            right = add(mono.embed(cl, n, pos), z(l))
            polys.append(((left, 1), (right, -1)))
    mono_ideal = MonomialIdeal(n, mono_rels)
    relations = []
    for terms in polys:
        kept = tuple((t, c) for t, c in terms if t not in mono_ideal)
        if len(kept) == 1:
            mono_ideal = mono_ideal + MonomialIdeal(n, [kept[0][0]])
        elif kept:
            relations.append(PolyRelation(base.p, n, kept))
    # drop relations made redundant by monomials added above
    relations = [
        f for f in (
            _strip(f, mono_ideal) for f in relations
        ) if f is not None
    ]
    labels = None
    if base.labels:
        labels = tuple(base.labels) + tuple(f"z{k + 1}" for k in range(m))
    ring = RingPresentation(base.p, n, mono_ideal, base.dim, tuple(dict.fromkeys(relations)),
                            parameters=False, labels=labels)
    return Duplication(base, MonomialIdeal(nb, gens), ring)


def _strip(f: PolyRelation, Q: MonomialIdeal):
    kept = tuple((t, c) for t, c in f.terms if t not in Q)
    if not kept:
        return None
    return PolyRelation(f.p, f.nvars, kept)


def duplication_presentation(base, ideal) -> RingPresentation:
    return duplication(base, ideal).ring


# --------------------------------------------------------- finite algebras


class Subspace:
    """Subspace of F_p^n kept in reduced row echelon form.

    Vectors are sparse {index: value} dicts; a new pivot is the largest
    index present.
    """

    def __init__(self, p: int):
        self.p = p
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        p = self.p
        v = {k: x % p for k, x in v.items() if x % p}
        for piv in sorted((k for k in v if k in self.rows), reverse=True):
            c = v.get(piv)
            if not c:
                continue
            for k, x in self.rows[piv].items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)
        # pivots introduced by subtraction are below the ones handled
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                return v
            piv = max(hits)
            c = v[piv]
            for k, x in self.rows[piv].items():
                nv = (v.get(k, 0) - c * x) % p
                if nv:
                    v[k] = nv
                else:
                    v.pop(k, None)

    def insert(self, v: dict) -> bool:
        r = self.reduce(v)
        if not r:
            return False
        piv = max(r)
        inv = pow(r[piv], self.p - 2, self.p)
        r = {k: x * inv % self.p for k, x in r.items()}
        for other in self.rows.values():
            c = other.get(piv)
            if c:
                for k, x in r.items():
                    nv = (other.get(k, 0) - c * x) % self.p
                    if nv:
                        other[k] = nv
                    else:
                        other.pop(k, None)
        self.rows[piv] = r
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def _axpy(acc: dict, c: int, v: dict, p: int):
    for k, x in v.items():
        nv = (acc.get(k, 0) + c * x) % p
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class ArtinAlgebra:
    """Commutative finite-dimensional F_p-algebra with explicit structure constants.

    ``product(i, j)`` returns basis_i * basis_j as a sparse vector; results
    are cached, so the table is filled on demand.  ``generators`` are the
    images of the ring's variables; ``top`` lists elements spanning m^(N-1)
    for an algebra truncated at m^N.
    """

    def __init__(self, p, basis, product: Callable, unit: dict, generators,
                 truncation: Optional[int] = None, top=None, check: bool = True,
                 normal_form: Optional[Callable] = None):
        self.p = p
        self.basis = list(basis)
        self._product = product
        self._table: dict = {}
        self.unit = dict(unit)
        self.generators = [dict(g) for g in generators]
        self.truncation = truncation
        self.top = top
        self.normal_form = normal_form
        if check:
            self.spot_check()

    @property
    def dim(self):
        return len(self.basis)

    def constant(self, i: int, j: int) -> dict:
        key = (i, j) if i <= j else (j, i)
        hit = self._table.get(key)
        if hit is None:
            hit = self._product(*key)
            self._table[key] = hit
        return hit

    def mul(self, u: dict, v: dict) -> dict:
        out: dict = {}
        p = self.p
        for i, a in u.items():
            for j, b in v.items():
                _axpy(out, a * b, self.constant(i, j), p)
        return out

    def power(self, u: dict, k: int) -> dict:
        result = dict(self.unit)
        base = dict(u)
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def spot_check(self, trials: int = 24, seed: int = 0):
        rng = random.Random(seed)
        n = self.dim
        if n == 0:
            return
        for _ in range(trials):
            i, j, k = (rng.randrange(n) for _ in range(3))
            ei, ej, ek = {i: 1}, {j: 1}, {k: 1}
            if self._product(i, j) != self._product(j, i):
                raise StructuralError("structure constants are not commutative")
            if self.mul(self.mul(ei, ej), ek) != self.mul(ei, self.mul(ej, ek)):
                raise StructuralError("structure constants are not associative")
        for i in range(min(n, trials)):
            if self.mul(self.unit, {i: 1}) != {i: 1}:
                raise StructuralError("unit element does not act as identity")


def truncation_oracle(ring: RingPresentation, N: int) -> ArtinAlgebra:
    """The algebra ring/m^N with basis given by normal-form monomials."""
    if N < 1:
        raise StructuralError("truncation order must be positive")
    B = ring.monomial_relations
    std = mono.standard_monomials(B, N)
    index = {m: i for i, m in enumerate(std)}
    relations = Subspace(ring.p)
    for f in ring.poly_relations:
        for m in std:
            vec = {}
            for t, c in f.terms:
                j = index.get(tuple(map(int.__add__, t, m)))
                if j is not None:
                    vec[j] = c
            if vec:
                relations.insert(vec)
    free = [i for i in range(len(std)) if i not in relations.rows]
    position = {old: new for new, old in enumerate(free)}
    p = ring.p

    def normal_form(m) -> dict:
        i = index.get(m)
        if i is None:
            return {}
        row = relations.rows.get(i)
        if row is None:
            return {position[i]: 1}
        return {position[k]: (-x) % p for k, x in row.items() if k != i}

    labels = [std[i] for i in free]

    def product(i, j):
        return normal_form(tuple(map(int.__add__, labels[i], labels[j])))

    n = ring.nvars
    gens = [normal_form(mono.unit_vector(n, i)) for i in range(n)]
    top = [normal_form(m) for m in mono.iter_monomials_of_degree(n, N - 1)]
    return ArtinAlgebra(p, labels, product, normal_form((0,) * n), gens, N, top,
                        normal_form=normal_form)


def _span_times(algebra: ArtinAlgebra, vectors, multipliers) -> Subspace:
    S = Subspace(algebra.p)
    for v in vectors:
        for g in multipliers:
            S.insert(algebra.mul(v, g))
    return S


def ideal_span(algebra: ArtinAlgebra, gens) -> Subspace:
    """The ideal generated by ``gens``, as a subspace."""
    basis = [{i: 1} for i in range(algebra.dim)]
    return _span_times(algebra, gens, basis)


def ideal_power(algebra: ArtinAlgebra, gens, n: int) -> Subspace:
    """(gens)^n as a subspace, built one factor at a time."""
    if n == 0:
        S = Subspace(algebra.p)
        for i in range(algebra.dim):
            S.insert({i: 1})
        return S
    ideal = ideal_span(algebra, gens)
    for _ in range(n - 1):
        spanning = list(ideal.rows.values())
        ideal = _span_times(algebra, spanning, gens)
    return ideal


def ideal_power_length_oracle(algebra: ArtinAlgebra, gens, mode) -> int:
    """Codimension of a power ideal computed by pure linear algebra.

    ``mode`` is ("bracket", q), ("ordinary", n) or ("pair", s, q).
    """
    kind = mode[0]
    if kind == "bracket":
        ideal = ideal_span(algebra, [algebra.power(g, mode[1]) for g in gens])
    elif kind == "ordinary":
        ideal = ideal_power(algebra, gens, mode[1])
    elif kind == "pair":
        s, q = Fraction(mode[1]), mode[2]
        ideal = ideal_power(algebra, gens, math.ceil(s * q))
        for g in gens:
            for i in range(algebra.dim):
                ideal.insert(algebra.mul(algebra.power(g, q), {i: 1}))
    else:
        raise StructuralError(f"unknown power mode {kind!r}")
    if algebra.top is not None and algebra.truncation and algebra.truncation > 1:
        if not all(ideal.contains(t) for t in algebra.top):
            raise TruncationTooSmall(
                f"m^{algebra.truncation - 1} is not inside the ideal; raise N"
            )
    return algebra.dim - len(ideal)


def filtration_dims(algebra: ArtinAlgebra, gens, N: int) -> list:
    """dim n^j / n^(j+1) for j < N, n the ideal of the subalgebra generated by ``gens``."""
    level = Subspace(algebra.p)
    spanning: list = []
    frontier = list(gens)
    while frontier:
        fresh = [v for v in frontier if level.insert(v)]
        spanning.extend(fresh)
        frontier = [algebra.mul(v, g) for v in fresh for g in gens]
    dims = [len(level)]
    for _ in range(N - 1):
        nxt = Subspace(algebra.p)
        spanning_next = []
        for v in spanning:
            for g in gens:
                w = algebra.mul(v, g)
                if nxt.insert(w):
                    spanning_next.append(w)
        dims.append(len(nxt))
        spanning = spanning_next
    dims.append(0)
    out = [1]
    for j in range(1, N):
        out.append(dims[j - 1] - dims[j])
    return out


# ------------------------------------------- direct set-theoretic constructions


def _pair_algebra(p, blocks, rule, unit, generators):
    """Algebra on a direct sum of blocks; ``rule(bi, i, bj, j)`` multiplies basis
    element i of block bi with basis element j of block bj."""
    offsets = []
    labels = []
    for name, size in blocks:
        offsets.append(len(labels))
        labels.extend((name, k) for k in range(size))
    where = []
    for bi, (_, size) in enumerate(blocks):
        where.extend((bi, k) for k in range(size))

    def product(i, j):
        bi, a = where[i]
        bj, b = where[j]
        out: dict = {}
        for block, vec in rule(bi, a, bj, b):
            for k, x in vec.items():
                key = offsets[block] + k
                out[key] = (out.get(key, 0) + x) % p
        return {k: x for k, x in out.items() if x}

    def place(parts):
        out = {}
        for block, vec in parts:
            for k, x in vec.items():
                out[offsets[block] + k] = x
        return out

    return ArtinAlgebra(p, labels, product, place(unit), [place(g) for g in generators])


def _map_to(source: ArtinAlgebra, target: ArtinAlgebra) -> list:
    """Normal form in ``target`` of each (monomial) basis element of ``source``."""
    return [_monomial_in(target, m) for m in source.basis]


def _monomial_in(algebra: ArtinAlgebra, m) -> dict:
    vec = dict(algebra.unit)
    for i, e in enumerate(m):
        if e:
            vec = algebra.mul(vec, algebra.power(algebra.generators[i], e))
    return vec


def _act(images, algebra: ArtinAlgebra, i: int, vec: dict) -> dict:
    return algebra.mul(images[i], vec)


def direct_fiber_product(fp: FiberProduct, K: int) -> tuple:
    """Subalgebra of (R/m^K) x (S/m^K) generated by the images of P's variables."""
    AR = truncation_oracle(fp.left, K)
    AS = truncation_oracle(fp.right, K)
    factors = (AR, AS)

    def rule(bi, a, bj, b):
        if bi != bj:
            return []
        return [(bi, factors[bi].constant(a, b))]

    partner = {i: j for i, j in fp.match}
    gens = []
    for i in range(fp.left.nvars):
        parts = [(0, AR.generators[i])]
        if i in partner:
            parts.append((1, AS.generators[partner[i]]))
        gens.append(parts)
    for j in range(fp.right.nvars):
        if j not in dict((jj, ii) for ii, jj in fp.match):
            gens.append([(1, AS.generators[j])])
    A = _pair_algebra(fp.left.p, [("R", AR.dim), ("S", AS.dim)], rule,
                      [(0, AR.unit), (1, AS.unit)], gens)
    return A, A.generators


def direct_idealization(ideal: Idealization, K: int) -> tuple:
    """R/m^K + sum (R/J_i)/m^K with the square-zero product rule."""
    base = ideal.base
    AR = truncation_oracle(base, K)
    pieces = []
    for J in ideal.module.summands:
        ring = RingPresentation(base.p, base.nvars, base.monomial_relations + J, base.dim,
                                base.poly_relations, base.parameters)
        Ai = truncation_oracle(ring, K)
        pieces.append((Ai, _map_to(AR, Ai)))

    def rule(bi, a, bj, b):
        if bi == 0 and bj == 0:
            return [(0, AR.constant(a, b))]
        if bi and bj:
            return []
        if bi == 0:
            Ai, images = pieces[bj - 1]
            return [(bj, _act(images, Ai, a, {b: 1}))]
        Ai, images = pieces[bi - 1]
        return [(bi, _act(images, Ai, b, {a: 1}))]

    blocks = [("R", AR.dim)] + [(f"M{k}", Ai.dim) for k, (Ai, _) in enumerate(pieces)]
    gens = [[(0, g)] for g in AR.generators]
    gens += [[(k + 1, Ai.unit)] for k, (Ai, _) in enumerate(pieces)]
    A = _pair_algebra(base.p, blocks, rule, [(0, AR.unit)], gens)
    return A, A.generators


def direct_duplication(dup: Duplication, K: int) -> tuple:
    """Pairs (r, i) with (r, i)(s, j) = (rs, rj + si + ij) over R/m^K."""
    AR = truncation_oracle(dup.base, K)

    def rule(bi, a, bj, b):
        return [(0 if bi == 0 and bj == 0 else 1, AR.constant(a, b))]

    gens = [[(0, g)] for g in AR.generators]
    gens += [[(1, _monomial_in(AR, g))] for g in dup.ideal.gens]
    A = _pair_algebra(dup.base.p, [("r", AR.dim), ("i", AR.dim)], rule, [(0, AR.unit)], gens)
    return A, A.generators


def direct_filtration(obj, N: int) -> list:
    """Per-degree dimensions of the direct construction, truncated deep enough to be exact."""
    if isinstance(obj, FiberProduct):
        A, gens = direct_fiber_product(obj, N)
    elif isinstance(obj, Idealization):
        A, gens = direct_idealization(obj, N)
    elif isinstance(obj, Duplication):
        # (0, u) with u in I of degree >= K lies in n^(K - maxdeg + 1)
        maxdeg = max(sum(g) for g in obj.ideal.gens)
        A, gens = direct_duplication(obj, N + maxdeg - 1)
    else:
        raise StructuralError("direct constructions exist for fiber products, "
                              "idealizations and duplications")
    return filtration_dims(A, gens, N)


def hypersurface_hilbert_function(nvars: int, degree: int, N: int) -> list:
    """Hilbert function of k[x1..xn]/(f) with f homogeneous, degrees below N."""
    def c(j):
        return math.comb(j + nvars - 1, nvars - 1) if j >= 0 else 0
    return [c(j) - c(j - degree) for j in range(N)]


def presentation_filtration(ring: RingPresentation, N: int) -> list:
    A = truncation_oracle(ring, N)
    return filtration_dims(A, A.generators, N)
