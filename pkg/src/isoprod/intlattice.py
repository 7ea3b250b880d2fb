"""Exact integer linear algebra.

Everything here runs over Z with Python's arbitrary-precision integers:
Smith normal form with transforming matrices, invariant factors of a
finitely presented abelian group, and kernels of matrices over a prime
field.  No floating point is involved anywhere; intermediate entry growth
is routine and harmless.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence


class IntMatrix:
    """Dense integer matrix with exact arithmetic.

    Entries are stored row-major as lists of Python ints.  The class is a
    thin carrier: elimination algorithms live in module functions.

    >>> IntMatrix([[1, 2], [3, 4]]).det()
    -2
    """

    __slots__ = ("data", "cols")

    def __init__(self, rows: Iterable[Iterable[int]], cols: int | None = None):
        data = [[int(x) for x in row] for row in rows]
        if data:
            width = len(data[0])
            if cols is not None and cols != width:
                raise ValueError(f"rows have {width} entries, expected {cols}")
            if any(len(row) != width for row in data):
                raise ValueError("rows have unequal lengths")
            cols = width
        elif cols is None:
            raise ValueError("column count required for a matrix with no rows")
        elif cols < 0:
            raise ValueError("column count must be nonnegative")
        self.data = data
        self.cols = cols

    @property
    def rows(self) -> int:
        return len(self.data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def copy(self) -> "IntMatrix":
        return IntMatrix([row[:] for row in self.data], cols=self.cols)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.cols == other.cols and self.data == other.data

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = []
        for row in self.data:
            out.append(
                [sum(row[k] * other.data[k][j] for k in range(self.cols)) for j in range(other.cols)]
            )
        return IntMatrix(out, cols=other.cols)

    def diagonal(self) -> list[int]:
        return [self.data[i][i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(
            self.data[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = [row[:] for row in self.data]
        sign = 1
        prev = 1
        for t in range(n - 1):
            if a[t][t] == 0:
                for i in range(t + 1, n):
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
                a[i][t] = 0
            prev = a[t][t]
        return sign * a[n - 1][n - 1]

    def __repr__(self) -> str:
        return f"IntMatrix({self.data!r}, cols={self.cols})"


@dataclass(frozen=True)
class InvariantFactors:
    """Canonical form of a finitely generated abelian group.

    ``factors`` is the divisibility chain d_1 | d_2 | ... with every d_i >= 2
    (factors of 1 are never stored); ``free_rank`` counts the Z summands.
    """

    factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free rank must be nonnegative")
        for d in self.factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for a, b in zip(self.factors, self.factors[1:]):
            if b % a:
                raise ValueError(f"broken divisibility chain: {a} does not divide {b}")

    @property
    def is_trivial(self) -> bool:
        return not self.factors and self.free_rank == 0

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | None:
        """Group order, or None for an infinite group."""
        if self.free_rank:
            return None
        return prod(self.factors)

    def with_free_rank(self, extra: int) -> "InvariantFactors":
        return InvariantFactors(self.factors, self.free_rank + extra)

    def __str__(self) -> str:
        parts = ["Z"] * self.free_rank + [f"Z/{d}" for d in self.factors]
        return " ⊕ ".join(parts) if parts else "0"


def _nearest_quotient(a: int, b: int) -> int:
    """Quotient q minimizing |a - q*b| (b nonzero)."""
    q, r = divmod(a, b)
    if 2 * abs(r) > abs(b):
        q += 1
    return q


def _row_sub(d: list[list[int]], u: list[list[int]] | None, i: int, t: int, q: int) -> None:
    if not q:
        return
    dt = d[t]
    di = d[i]
    for j in range(len(di)):
        di[j] -= q * dt[j]
    if u is not None:
        ut = u[t]
        ui = u[i]
        for j in range(len(ui)):
            ui[j] -= q * ut[j]


def _row_swap(d: list[list[int]], u: list[list[int]] | None, i: int, t: int) -> None:
    d[i], d[t] = d[t], d[i]
    if u is not None:
        u[i], u[t] = u[t], u[i]


def _row_neg(d: list[list[int]], u: list[list[int]] | None, i: int) -> None:
    d[i] = [-x for x in d[i]]
    if u is not None:
        u[i] = [-x for x in u[i]]


def _col_sub(d: list[list[int]], v: list[list[int]] | None, j: int, t: int, q: int) -> None:
    if not q:
        return
    for row in d:
        row[j] -= q * row[t]
    if v is not None:
        for row in v:
            row[j] -= q * row[t]


def _col_swap(d: list[list[int]], v: list[list[int]] | None, j: int, t: int) -> None:
    for row in d:
        row[j], row[t] = row[t], row[j]
    if v is not None:
        for row in v:
            row[j], row[t] = row[t], row[j]


def _select_pivot(d: list[list[int]], t: int, m: int, n: int) -> tuple[int, int] | None:
    """Coordinates of a nonzero entry of minimal |value| in d[t:, t:]."""
    best = None
    where = None
    for i in range(t, m):
        row = d[i]
        for j in range(t, n):
            x = row[j]
            if x and (best is None or abs(x) < best):
                best = abs(x)
                where = (i, j)
                if best == 1:
                    return where
    return where


def _smith(d: list[list[int]], m: int, n: int,
           u: list[list[int]] | None, v: list[list[int]] | None) -> None:
    """In-place Smith elimination of the m x n array d.

    u and v, when given, accumulate the row and column operations so that
    u * original * v = d on exit.  Pivots of minimal absolute value limit
    entry growth.
    """
    for t in range(min(m, n)):
        found = _select_pivot(d, t, m, n)
        if found is None:
            break
        _row_swap(d, u, found[0], t)
        _col_swap(d, v, found[1], t)
        while True:
            # Euclidean sweeps until row t and column t are clear past the pivot.
            while True:
                offender = next((i for i in range(t + 1, m) if d[i][t]), None)
                if offender is not None:
                    q = _nearest_quotient(d[offender][t], d[t][t])
                    _row_sub(d, u, offender, t, q)
                    if d[offender][t]:
                        _row_swap(d, u, offender, t)
                    continue
                offender = next((j for j in range(t + 1, n) if d[t][j]), None)
                if offender is not None:
                    q = _nearest_quotient(d[t][offender], d[t][t])
                    _col_sub(d, v, offender, t, q)
                    if d[t][offender]:
                        _col_swap(d, v, offender, t)
                    continue
                break
            pivot = d[t][t]
            bad = next(
                (i for i in range(t + 1, m) if any(d[i][j] % pivot for j in range(t + 1, n))),
                None,
            )
            if bad is None:
                break
            # Fold the offending row into row t so the next sweep shrinks the pivot.
            _row_sub(d, u, t, bad, -1)
        if d[t][t] < 0:
            _row_neg(d, u, t)


def smith_normal_form(A: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith normal form with transforms: returns (D, U, V) with U*A*V = D.

    D is diagonal with nonnegative entries in a divisibility chain
    d_1 | d_2 | ...; U and V are unimodular (determinant +-1).
    """
    m, n = A.rows, A.cols
    d = [row[:] for row in A.data]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]
    _smith(d, m, n, u, v)
    return (
        IntMatrix(d, cols=n),
        IntMatrix(u, cols=m),
        IntMatrix(v, cols=n),
    )


def _presparse_reduce(rows: list[dict[int, int]], live_cols: set[int]) -> int:
    """Eliminate +-1 pivots on sparse rows, deleting pivot row and column.

    Each elimination contributes an invariant factor of 1, so only the count
    of removed columns matters.  Mutates rows / live_cols; returns the number
    of pivots removed.  Greedy sparsest-row choice keeps fill-in low.
    """
    removed = 0
    by_unit: dict[int, set[int]] = {}  # col -> row ids having +-1 there

    def scan(idx: int) -> None:
        for c, val in rows[idx].items():
            if abs(val) == 1:
                by_unit.setdefault(c, set()).add(idx)

    for idx in range(len(rows)):
        scan(idx)
    dead_rows: set[int] = set()
    while True:
        pick = None
        for c, idxs in by_unit.items():
            if c not in live_cols:
                continue
            for idx in idxs:
                if idx in dead_rows or abs(rows[idx].get(c, 0)) != 1:
                    continue
                if pick is None or len(rows[idx]) < len(rows[pick[0]]):
                    pick = (idx, c)
        if pick is None:
            return removed
        pr, pc = pick
        pivot_row = rows[pr]
        sign = pivot_row[pc]
        dead_rows.add(pr)
        live_cols.discard(pc)
        removed += 1
        for idx in range(len(rows)):
            if idx == pr or idx in dead_rows:
                continue
            row = rows[idx]
            coef = row.get(pc)
            if not coef:
                continue
            factor = coef * sign  # row -= factor * pivot_row zeroes column pc
            for c, val in pivot_row.items():
                if c not in live_cols:
                    continue
                new = row.get(c, 0) - factor * val
                if new:
                    row[c] = new
                    if abs(new) == 1:
                        by_unit.setdefault(c, set()).add(idx)
                else:
                    row.pop(c, None)
            row.pop(pc, None)
        pivot_row.clear()


def _diagonal_invariants(rows: list[list[int]], ncols: int) -> list[int]:
    """Nonzero diagonal of the Smith form of the given relation rows.

    A sparse unit-pivot pass shrinks the problem before the dense
    elimination; unit pivots contribute factors of 1 which are returned
    explicitly so callers can count consumed columns.
    """
    sparse = [
        {j: x for j, x in enumerate(row) if x}
        for row in rows
    ]
    sparse = [r for r in sparse if r]
    live = set(range(ncols))
    units = _presparse_reduce(sparse, live)
    col_index = {c: j for j, c in enumerate(sorted(live))}
    dense = []
    for row in sparse:
        if not row:
            continue
        out = [0] * len(col_index)
        for c, val in row.items():
            out[col_index[c]] = val
        dense.append(out)
    _smith(dense, len(dense), len(col_index), None, None)
    diag = [dense[i][i] for i in range(min(len(dense), len(col_index)))]
    return [1] * units + [d for d in diag if d]


def abelian_invariants(
    relations: IntMatrix,
    generator_orders: Sequence[int | str | None] | None = None,
) -> InvariantFactors:
    """Invariant factors of the abelian group presented by ``relations``.

    Columns index generators, rows are relations.  ``generator_orders``
    optionally gives each generator a finite order k_i (appending the row
    k_i * e_i); entries of None or "free" leave that generator free, and
    omitting the argument leaves all of them free.

    >>> str(abelian_invariants(IntMatrix([], cols=3), [2, 2, 2]))
    'Z/2 ⊕ Z/2 ⊕ Z/2'
    """
    n = relations.cols
    rows = [row[:] for row in relations.data]
    if generator_orders is not None:
        if len(generator_orders) != n:
            raise ValueError(
                f"got {len(generator_orders)} generator orders for {n} generators"
            )
        for i, k in enumerate(generator_orders):
            if k is None or k == "free":
                continue
            k = int(k)
            if k < 1:
                raise ValueError(f"generator order {k} < 1")
            row = [0] * n
            row[i] = k
            rows.append(row)
    diag = _diagonal_invariants(rows, n)
    return InvariantFactors(
        factors=tuple(d for d in diag if d > 1),
        free_rank=n - len(diag),
    )


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def _rref_mod_p(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(p); returns (rref rows, pivot columns)."""
    mat = [[x % p for x in row] for row in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        src = next((i for i in range(r, len(mat)) if mat[i][c]), None)
        if src is None:
            continue
        mat[r], mat[src] = mat[src], mat[r]
        inv = pow(mat[r][c], -1, p)
        mat[r] = [(x * inv) % p for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [(x - f * y) % p for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank_mod_p(M: IntMatrix, p: int) -> int:
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return len(_rref_mod_p(M.data, p)[1])


def kernel_basis_mod_p(M: IntMatrix, p: int) -> list[tuple[int, ...]]:
    """Basis of the kernel of the map x -> M x over GF(p).

    The basis has cols - rank(M) vectors, one per non-pivot column in
    ascending column order (the free coordinate of each vector is 1).
    """
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = M.cols
    rref, pivots = _rref_mod_p(M.data, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        vec = [0] * n
        vec[f] = 1
        for r, c in enumerate(pivots):
            vec[c] = (-rref[r][f]) % p
        basis.append(tuple(vec))
    return basis
