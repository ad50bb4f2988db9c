"""Exact linear algebra over the integers and over Z/kZ.

Everything here uses Python's arbitrary-precision integers, so results
are exact at any size.  Determinants use fraction-free (Bareiss)
elimination; linear systems modulo k, where k need not be prime, go
through the Smith normal form so that solvability is decided correctly
even when the matrix is singular mod k.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import gcd

from .errors import InputError

Rows = tuple[tuple[int, ...], ...]


def _freeze_rows(rows: Iterable[Iterable[int]]) -> Rows:
    out = tuple(tuple(int(x) for x in row) for row in rows)
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise InputError(f"ragged rows: lengths {sorted(widths)}")
    return out


@dataclass(frozen=True)
class IntMatrix:
    """An immutable integer matrix; may be empty (0 rows or 0 columns)."""

    rows: Rows

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> IntMatrix:
        return cls(_freeze_rows(rows))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def transpose(self) -> IntMatrix:
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else IntMatrix(())

    def reduce(self, modulus: int) -> ModMatrix:
        """Entrywise residues of this matrix modulo ``modulus``."""
        return ModMatrix(
            tuple(tuple(x % modulus for x in row) for row in self.rows), modulus
        )


@dataclass(frozen=True)
class ModMatrix:
    """A matrix of residues modulo a fixed ``modulus`` >= 2."""

    rows: Rows
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise InputError(f"modulus must be >= 2, got {self.modulus}")
        for row in self.rows:
            for x in row:
                if not 0 <= x < self.modulus:
                    raise InputError(f"entry {x} not reduced modulo {self.modulus}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]], modulus: int) -> ModMatrix:
        return cls(_freeze_rows(rows), modulus)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def lift(self) -> IntMatrix:
        """The integer matrix with the same entries (each in [0, modulus))."""
        return IntMatrix(self.rows)

    def transpose(self) -> ModMatrix:
        if not self.rows:
            return self
        return ModMatrix(tuple(zip(*self.rows)), self.modulus)

    def __matmul__(self, other: ModVector) -> ModVector:
        if not isinstance(other, ModVector):
            return NotImplemented
        if other.modulus != self.modulus:
            raise InputError("modulus mismatch")
        if len(other.values) != self.ncols:
            raise InputError(
                f"size mismatch: {self.nrows}x{self.ncols} times length {len(other.values)}"
            )
        k = self.modulus
        return ModVector(
            tuple(sum(a * b for a, b in zip(row, other.values)) % k for row in self.rows),
            k,
        )


@dataclass(frozen=True)
class ModVector:
    """A vector of residues modulo a fixed ``modulus`` >= 2."""

    values: tuple[int, ...]
    modulus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(x) for x in self.values))
        if self.modulus < 2:
            raise InputError(f"modulus must be >= 2, got {self.modulus}")
        for x in self.values:
            if not 0 <= x < self.modulus:
                raise InputError(f"entry {x} not reduced modulo {self.modulus}")

    @classmethod
    def reduce(cls, values: Iterable[int], modulus: int) -> ModVector:
        """Reduce arbitrary integers into residues modulo ``modulus``."""
        return cls(tuple(int(x) % modulus for x in values), modulus)

    def __len__(self) -> int:
        return len(self.values)

    def negate(self) -> ModVector:
        k = self.modulus
        return ModVector(tuple((-x) % k for x in self.values), k)


def det_int(m: IntMatrix) -> int:
    """Exact determinant of a square integer matrix.

    Fraction-free elimination: every division below is exact, so no
    rounding ever occurs.  The 0x0 matrix has determinant 1.
    """
    n = m.nrows
    if n != m.ncols:
        raise InputError(f"determinant needs a square matrix, got {n}x{m.ncols}")
    if n == 0:
        return 1
    a = [list(row) for row in m.rows]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t] != 0:
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


def is_unit_mod(a: int, modulus: int) -> bool:
    """True iff ``a`` is invertible modulo ``modulus``."""
    if modulus < 2:
        raise InputError(f"modulus must be >= 2, got {modulus}")
    return gcd(a, modulus) == 1


def is_invertible_mod(m: ModMatrix) -> bool:
    """True iff the square matrix is invertible over Z/kZ."""
    if m.nrows != m.ncols:
        raise InputError(f"invertibility needs a square matrix, got {m.nrows}x{m.ncols}")
    return is_unit_mod(det_int(m.lift()), m.modulus)


def smith_normal_form(m: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns ``(u, d, v)`` with ``u @ m @ v == d``, where ``u`` and ``v``
    are unimodular, ``d`` is diagonal with nonnegative entries, and each
    diagonal entry divides the next.
    """
    nr, nc = m.nrows, m.ncols
    a = [list(row) for row in m.rows]
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, q: int) -> None:
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, q: int) -> None:
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i: int) -> None:
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    def smallest_pivot(t: int) -> tuple[int, int] | None:
        best: tuple[int, int] | None = None
        best_abs = 0
        for i in range(t, nr):
            for j in range(t, nc):
                x = abs(a[i][j])
                if x and (best is None or x < best_abs):
                    best, best_abs = (i, j), x
                    if x == 1:
                        return best
        return best

    t = 0
    while t < min(nr, nc):
        pos = smallest_pivot(t)
        if pos is None:
            break
        swap_rows(t, pos[0])
        swap_cols(t, pos[1])
        while True:
            # Clear column t; a nonzero remainder becomes the new, smaller pivot.
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] == 0:
                    continue
                q = a[i][t] // a[t][t]
                add_row(i, t, -q)
                if a[i][t] != 0:
                    swap_rows(t, i)
                    dirty = True
            if dirty:
                continue
            for j in range(t + 1, nc):
                if a[t][j] == 0:
                    continue
                q = a[t][j] // a[t][t]
                add_col(j, t, -q)
                if a[t][j] != 0:
                    swap_cols(t, j)
                    dirty = True
            if dirty:
                continue
            # Pivot must divide every remaining entry to keep the chain.
            witness = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % a[t][t] != 0:
                        witness = i
                        break
                if witness is not None:
                    break
            if witness is None:
                break
            add_row(t, witness, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    d = [[a[i][j] if i == j else 0 for j in range(nc)] for i in range(nr)]
    return IntMatrix.from_rows(u), IntMatrix.from_rows(d), IntMatrix.from_rows(v)


def solve_mod(m: ModMatrix, c: ModVector) -> ModVector | None:
    """One solution of ``m @ x == c`` over Z/kZ, or None when there is none.

    Works for any modulus and any (possibly singular, possibly
    non-square) matrix.  The returned solution is deterministic but not
    guaranteed extremal in any ordering.
    """
    if c.modulus != m.modulus:
        raise InputError("modulus mismatch")
    if len(c.values) != m.nrows:
        raise InputError(f"size mismatch: {m.nrows} rows, {len(c.values)} targets")
    k = m.modulus
    u, d, v = smith_normal_form(m.lift())
    uc = [sum(a * b for a, b in zip(row, c.values)) % k for row in u.rows]
    z = [0] * m.ncols
    for i in range(m.nrows):
        di = d.rows[i][i] if i < m.ncols else 0
        rhs = uc[i]
        if di == 0:
            if rhs != 0:
                return None
            continue
        g = gcd(di, k)
        if rhs % g != 0:
            return None
        kk = k // g
        if kk == 1:
            z[i] = 0
        else:
            z[i] = (rhs // g) * pow((di // g) % kk, -1, kk) % kk
    x = [sum(row[j] * z[j] for j in range(m.ncols)) % k for row in v.rows]
    return ModVector(tuple(x), k)
