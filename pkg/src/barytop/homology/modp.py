"""Ranks of integer matrices reduced modulo a prime.

Kept separate from the integral elimination on purpose: the mod-p Betti
numbers computed here are compared against the universal coefficient
theorem applied to the integral answer.
"""
from __future__ import annotations

import heapq

from .chains import SparseMatrix


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def rank_mod_p(M: SparseMatrix, p: int) -> int:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return _rank_mod2(M)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = {}
    for j, col in enumerate(M.columns):
        entries = {i: v % p for i, v in col.items() if v % p}
        if not entries:
            continue
        cols[j] = set(entries)
        for i, v in entries.items():
            rows.setdefault(i, {})[j] = v
    rank = 0
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    while heap:
        size, c = heapq.heappop(heap)
        rs = cols.get(c)
        if not rs:
            cols.pop(c, None)
            continue
        if len(rs) != size:
            heapq.heappush(heap, (len(rs), c))
            continue
        r = min(rs, key=lambda x: len(rows[x]))
        prow = rows[r]
        inv = pow(prow[c], -1, p)
        for r2 in rs - {r}:
            row = rows[r2]
            f = (-row[c] * inv) % p
            for k, v in prow.items():
                w = (row.get(k, 0) + f * v) % p
                if w:
                    if k not in row:
                        cols[k].add(r2)
                    row[k] = w
                else:
                    row.pop(k, None)
                    cols[k].discard(r2)
        for k in prow:
            if k != c:
                cols[k].discard(r)
        del rows[r]
        del cols[c]
        rank += 1
    return rank


def _rank_mod2(M: SparseMatrix) -> int:
    rows: dict[int, set[int]] = {}
    cols: dict[int, set[int]] = {}
    for j, col in enumerate(M.columns):
        entries = {i for i, v in col.items() if v & 1}
        if not entries:
            continue
        cols[j] = entries
        for i in entries:
            rows.setdefault(i, set()).add(j)
    rank = 0
    heap = [(len(rs), c) for c, rs in cols.items()]
    heapq.heapify(heap)
    while heap:
        size, c = heapq.heappop(heap)
        rs = cols.get(c)
        if not rs:
            cols.pop(c, None)
            continue
        if len(rs) != size:
            heapq.heappush(heap, (len(rs), c))
            continue
        r = min(rs, key=lambda x: len(rows[x]))
        prow = rows[r]
        for r2 in rs - {r}:
            row = rows[r2]
            for k in prow:
                if k in row:
                    row.discard(k)
                    cols[k].discard(r2)
                else:
                    row.add(k)
                    cols[k].add(r2)
        for k in prow:
            if k != c:
                cols[k].discard(r)
        del rows[r]
        del cols[c]
        rank += 1
    return rank
