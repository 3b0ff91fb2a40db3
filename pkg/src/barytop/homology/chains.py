"""Normalized chain complexes of finite simplicial sets."""
from __future__ import annotations

from dataclasses import dataclass

from ..sset.core import SimplicialSet


@dataclass(frozen=True)
class SparseMatrix:
    """Integer matrix stored column-wise as ``{row: value}`` dicts."""

    nrows: int
    ncols: int
    columns: tuple[dict, ...]

    @classmethod
    def from_dense(cls, rows) -> "SparseMatrix":
        rows = [list(r) for r in rows]
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        cols = []
        for j in range(ncols):
            cols.append({i: rows[i][j] for i in range(nrows) if rows[i][j]})
        return cls(nrows, ncols, tuple(cols))

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                out[i][j] = v
        return out

    def nnz(self) -> int:
        return sum(len(c) for c in self.columns)

    def matmul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = []
        for col in other.columns:
            acc: dict = {}
            for k, v in col.items():
                for i, w in self.columns[k].items():
                    acc[i] = acc.get(i, 0) + w * v
            cols.append({i: v for i, v in acc.items() if v})
        return SparseMatrix(self.nrows, other.ncols, tuple(cols))

    def is_zero(self) -> bool:
        return all(not c for c in self.columns)


@dataclass(frozen=True)
class ChainComplex:
    """``boundary[d]`` maps degree-``d`` cells to degree-``d-1`` cells."""

    ranks: tuple[int, ...]
    boundary: tuple[SparseMatrix, ...]

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    def check_d_squared(self) -> bool:
        for d in range(2, len(self.boundary)):
            if not self.boundary[d - 1].matmul(self.boundary[d]).is_zero():
                return False
        return True


def boundary_matrix(X: SimplicialSet, d: int) -> SparseMatrix:
    """Alternating face sum; faces that are degenerate contribute nothing."""
    nrows = X.count(d - 1)
    if d <= 0 or d >= len(X.counts):
        return SparseMatrix(max(nrows, 0), X.count(d), tuple({} for _ in X.cells(d)))
    cols = []
    for fs in X.faces[d]:
        col: dict = {}
        sign = 1
        for mask, t in fs:
            if not mask:
                v = col.get(t, 0) + sign
                if v:
                    col[t] = v
                else:
                    del col[t]
            sign = -sign
        cols.append(col)
    return SparseMatrix(nrows, X.count(d), tuple(cols))


def normalized_chains(X: SimplicialSet, max_degree: int | None = None) -> ChainComplex:
    """Normalized chains up to ``max_degree`` (default: dimension of ``X``).

    ``boundary[0]`` is the zero map out of degree 0.
    """
    top = X.dim if max_degree is None else max_degree
    ranks = tuple(X.count(d) for d in range(top + 1))
    mats = [SparseMatrix(0, X.count(0), tuple({} for _ in X.cells(0)))]
    for d in range(1, top + 1):
        mats.append(boundary_matrix(X, d))
    return ChainComplex(ranks, tuple(mats))
