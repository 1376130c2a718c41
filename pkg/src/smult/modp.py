"""Sparse linear algebra over the prime field F_p."""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .errors import ModulusMismatch, StructuralError

# Keeps a*b for reduced residues inside a signed 64-bit word.
MAX_MODULUS = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if isinstance(p, int) and p > MAX_MODULUS:
        raise StructuralError(f"characteristic {p} exceeds the machine-word limit")
    if not isinstance(p, int) or not is_prime(p):
        raise StructuralError(f"characteristic {p!r} is not a prime")
    return p


@dataclass(frozen=True)
class SparseMatrix:
    """rows x cols matrix over F_p storing only nonzero entries."""

    rows: int
    cols: int
    p: int
    entries: Mapping = field(default_factory=dict)

    def __post_init__(self):
        check_prime(self.p)
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise StructuralError(f"entry ({i}, {j}) outside {self.rows}x{self.cols}")
            v %= self.p
            if v:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)

    @classmethod
    def from_dense(cls, rows: list, p: int) -> SparseMatrix:
        ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v % p}
        return cls(len(rows), ncols, p, entries)

    @classmethod
    def from_rows(cls, vectors: list, cols: int, p: int) -> SparseMatrix:
        entries = {(i, j): v for i, vec in enumerate(vectors) for j, v in vec.items()}
        return cls(len(vectors), cols, p, entries)

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(
            self.cols, self.rows, self.p, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def to_dense(self) -> list:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def row_dicts(self) -> list:
        rows: list = [{} for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows


def _eliminate(rows: list, p: int) -> int:
    """Markowitz-ordered elimination on a private list of row dicts."""
    rows = {i: r for i, r in enumerate(rows) if r}
    col_rows: dict = {}
    for i, r in rows.items():
        for j in r:
            col_rows.setdefault(j, set()).add(i)
    heap = [(len(r), i) for i, r in rows.items()]
    heapq.heapify(heap)
    rank = 0
    while heap:
        length, i = heapq.heappop(heap)
        row = rows.get(i)
        if row is None:
            continue
        if len(row) != length:
            heapq.heappush(heap, (len(row), i))
            continue
        # pivot column: the one touching the fewest other rows
        j = min(row, key=lambda c: (len(col_rows[c]), c))
        del rows[i]
        for c in row:
            col_rows[c].discard(i)
        rank += 1
        inv = pow(row[j], p - 2, p)
        for k in list(col_rows[j]):
            target = rows[k]
            factor = target[j] * inv % p
            for c, v in row.items():
                nv = (target.get(c, 0) - factor * v) % p
                if nv:
                    if c not in target:
                        col_rows[c].add(k)
                    target[c] = nv
                elif c in target:
                    del target[c]
                    col_rows[c].discard(k)
            if target:
                heapq.heappush(heap, (len(target), k))
            else:
                del rows[k]
    return rank


def rank(matrix: SparseMatrix) -> int:
    """Rank over F_p; the input is never mutated."""
    return _eliminate(matrix.row_dicts(), matrix.p)


def row_span_dim(vectors: Iterable[Mapping], p: int) -> int:
    """Dimension of the span of sparse vectors given as {index: value} maps."""
    check_prime(p)
    rows = []
    for v in vectors:
        r = {j: x % p for j, x in v.items() if x % p}
        if r:
            rows.append(r)
    return _eliminate(rows, p)


def dense_rank(rows: list, p: int) -> int:
    """Textbook row reduction; the oracle for :func:`rank`."""
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c]), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = pow(a[r][c], p - 2, p)
        a[r] = [x * inv % p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == nrows:
            break
    return r


def same_modulus(*ps: int) -> int:
    if len(set(ps)) > 1:
        raise ModulusMismatch(f"incompatible characteristics {sorted(set(ps))}")
    return ps[0]
