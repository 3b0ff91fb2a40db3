"""Smith normal form over the integers.

Two routes:

* :func:`smith_normal_form` runs the textbook dense algorithm and can
  return unimodular certificates ``U``, ``V`` with ``U A V = D``.
* :func:`sparse_diagonal` reduces a large sparse matrix to diagonal form
  by unimodular row and column operations (unit pivots first, then the
  smallest magnitude pivot with the fewest nonzeros).  The diagonal is
  then put in invariant-factor form by :func:`invariant_factors`.

All arithmetic uses Python integers, so there is no overflow.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd

from .chains import SparseMatrix


@dataclass(frozen=True)
class SNFResult:
    diagonal: tuple[int, ...]
    U: tuple[tuple[int, ...], ...] | None = None
    V: tuple[tuple[int, ...], ...] | None = None

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)


def invariant_factors(entries) -> list[int]:
    """Divisibility chain of the group ``sum Z/e`` for nonzero entries ``e``."""
    vals = sorted(abs(e) for e in entries if e)
    units = sum(1 for v in vals if v == 1)
    vals = vals[units:]
    n = len(vals)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = vals[i], vals[j]
            g = gcd(a, b)
            vals[i], vals[j] = g, a // g * b
    return [1] * units + vals


def _matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, certificates: bool = False) -> SNFResult:
    """Dense Smith normal form of ``M`` (a list of rows or a SparseMatrix)."""
    if isinstance(M, SparseMatrix):
        if not certificates:
            diag = sparse_diagonal(M)
            chain = invariant_factors(diag)
            k = min(M.nrows, M.ncols)
            return SNFResult(tuple(chain + [0] * (k - len(chain))))
        M = M.to_dense()
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m) if certificates else None
    V = _identity(n) if certificates else None

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        if V is not None:
            for row in V:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row dst += f * row src
        A[dst] = [a + f * b for a, b in zip(A[dst], A[src])]
        if U is not None:
            U[dst] = [a + f * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, f):  # col dst += f * col src
        for row in A:
            row[dst] += f * row[src]
        if V is not None:
            for row in V:
                row[dst] += f * row[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = A[t][t]
            moved = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    if A[i][t]:
                        swap_rows(t, i)
                        moved = True
                        break
            if moved:
                continue
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    if A[t][j]:
                        swap_cols(t, j)
                        moved = True
                        break
            if moved:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            if U is not None:
                U[t] = [-a for a in U[t]]
        t += 1
    diag = tuple(A[i][i] for i in range(min(m, n)))
    if certificates:
        return SNFResult(diag, tuple(map(tuple, U)), tuple(map(tuple, V)))
    return SNFResult(diag)


def verify_certificate(M, result: SNFResult) -> bool:
    """Exact check of ``U M V == diag``."""
    if result.U is None or result.V is None:
        raise ValueError("result carries no certificates")
    if isinstance(M, SparseMatrix):
        M = M.to_dense()
    M = [list(r) for r in M]
    prod = _matmul(_matmul([list(r) for r in result.U], M), [list(r) for r in result.V])
    for i, row in enumerate(prod):
        for j, v in enumerate(row):
            expected = result.diagonal[i] if i == j else 0
            if v != expected:
                return False
    return True


def _determinant_pm1(U) -> bool:
    """|det U| == 1 by fraction-free elimination (Bareiss)."""
    A = [list(r) for r in U]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return False
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    det = sign * A[n - 1][n - 1] if n else 1
    return abs(det) == 1


def is_unimodular(U) -> bool:
    return _determinant_pm1(U)


# ---------------------------------------------------------------------------
# sparse route


class _Sparse:
    def __init__(self, M: SparseMatrix):
        self.rows: dict[int, dict[int, int]] = {}
        self.cols: dict[int, set[int]] = {}
        for j, col in enumerate(M.columns):
            if not col:
                continue
            self.cols[j] = set(col)
            for i, v in col.items():
                self.rows.setdefault(i, {})[j] = v

    def row_axpy(self, dst: int, src: int, f: int):
        """row dst += f * row src."""
        rd = self.rows[dst]
        cols = self.cols
        for k, v in self.rows[src].items():
            w = rd.get(k, 0) + f * v
            if w:
                if k not in rd:
                    cols[k].add(dst)
                rd[k] = w
            else:
                del rd[k]
                cols[k].discard(dst)

    def col_axpy(self, dst: int, src: int, f: int):
        """col dst += f * col src."""
        rows = self.rows
        cd = self.cols.setdefault(dst, set())
        for r in list(self.cols[src]):
            row = rows[r]
            w = row.get(dst, 0) + f * row[src]
            if w:
                row[dst] = w
                cd.add(r)
            else:
                row.pop(dst, None)
                cd.discard(r)

    def drop(self, r: int, c: int):
        for k in self.rows[r]:
            if k != c:
                self.cols[k].discard(r)
        del self.rows[r]
        del self.cols[c]


def sparse_diagonal(M: SparseMatrix) -> list[int]:
    """Nonzero diagonal entries of a diagonal form of ``M`` (absolute values)."""
    S = _Sparse(M)
    diag: list[int] = []
    rows, cols = S.rows, S.cols

    # unit pivots, columns in order of increasing fill
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    while heap:
        size, c = heapq.heappop(heap)
        rs = cols.get(c)
        if rs is None:
            continue
        if not rs:
            del cols[c]
            continue
        if len(rs) != size:
            heapq.heappush(heap, (len(rs), c))
            continue
        best = None
        for r in rs:
            v = rows[r][c]
            if v == 1 or v == -1:
                if best is None or len(rows[r]) < len(rows[best]):
                    best = r
        if best is None:
            continue
        p = rows[best][c]
        for r2 in list(rs):
            if r2 != best:
                S.row_axpy(r2, best, -rows[r2][c] * p)
        diag.append(1)
        S.drop(best, c)

    # general pivots on the remainder
    for c in [c for c, rs in cols.items() if not rs]:
        del cols[c]
    while cols:
        best = None
        for c, rs in cols.items():
            for r in rs:
                key = (abs(rows[r][c]), len(rows[r]) + len(rs))
                if best is None or key < best[0]:
                    best = (key, r, c)
        _, r, c = best
        while True:
            p = rows[r][c]
            moved = False
            for r2 in list(cols[c]):
                if r2 == r:
                    continue
                S.row_axpy(r2, r, -(rows[r2][c] // p))
                if c in rows[r2]:
                    r, moved = r2, True
                    break
            if moved:
                continue
            for c2 in list(rows[r]):
                if c2 == c:
                    continue
                S.col_axpy(c2, c, -(rows[r][c2] // p))
                if c2 in rows[r]:
                    c, moved = c2, True
                    break
                if not cols[c2]:
                    del cols[c2]
            if moved:
                continue
            break
        diag.append(abs(rows[r][c]))
        S.drop(r, c)
        for k in [k for k, rs in cols.items() if not rs]:
            del cols[k]
    return diag


def rank_and_torsion(M: SparseMatrix) -> tuple[int, list[int]]:
    """Rank over Q and invariant factors > 1 of an integer matrix."""
    diag = sparse_diagonal(M)
    chain = invariant_factors(diag)
    return len(chain), [d for d in chain if d > 1]
