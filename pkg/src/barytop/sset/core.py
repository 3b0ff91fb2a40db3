"""Finite simplicial sets stored by their nondegenerate cells.

A simplex of degree ``m`` is a pair ``(mask, cell)``: ``cell`` indexes a
nondegenerate cell of dimension ``c`` and ``mask`` is an ``m``-bit integer
whose set bits are the degeneracy indices of the Eilenberg-Zilber normal
form ``s_{i1} ... s_{ir}`` (``i1 > ... > ir``).  Equivalently bit ``t`` is
set when the underlying surjection ``[m] -> [c]`` takes the same value on
``t`` and ``t + 1``.  The dimension of the cell is ``m - popcount(mask)``,
so the pair alone determines it.

Faces of a nondegenerate ``d``-cell are stored as ``d + 1`` such pairs in
degree ``d - 1``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

Simplex = tuple[int, int]


class SimplicialSetError(ValueError):
    """Structural inconsistency in a simplicial set or group action."""


class CellBudgetExceeded(RuntimeError):
    """A construction produced more nondegenerate cells than allowed."""

    def __init__(self, what: str, census: Sequence[int], budget: int):
        self.what = what
        self.census = list(census)
        self.budget = budget
        super().__init__(
            f"{what}: cell budget {budget} exceeded (partial census {self.census})"
        )


def popcount(x: int) -> int:
    return bin(x).count("1")


# ---------------------------------------------------------------------------
# operator words


def word_from_mask(mask: int) -> tuple[int, ...]:
    """Degeneracy indices in normal form (strictly decreasing)."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(reversed(out))


def mask_from_word(word: Iterable[int]) -> int:
    """Normal-form mask of an arbitrary composite ``s_{w0} s_{w1} ... s_{wk}``.

    The word is read as an operator applied right to left, so it need not be
    in normal form; the simplicial identity ``s_i s_j = s_{j+1} s_i`` for
    ``i <= j`` is used to normalise it.
    """
    mask = 0
    for i in reversed(list(word)):
        if i < 0:
            raise SimplicialSetError(f"negative degeneracy index {i}")
        # applying s_i after degeneracies ``mask`` shifts flats at >= i up
        low = mask & ((1 << i) - 1)
        high = mask >> i
        mask = low | (high << (i + 1)) | (1 << i)
    return mask


@dataclass(frozen=True)
class OperatorWord:
    """A degeneracy operator in Eilenberg-Zilber normal form."""

    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if any(a <= b for a, b in zip(self.indices, self.indices[1:])):
            raise SimplicialSetError(f"not in normal form: {self.indices}")

    @classmethod
    def from_mask(cls, mask: int) -> "OperatorWord":
        return cls(word_from_mask(mask))

    @classmethod
    def normalize(cls, word: Iterable[int]) -> "OperatorWord":
        return cls(word_from_mask(mask_from_word(word)))

    @property
    def mask(self) -> int:
        m = 0
        for i in self.indices:
            m |= 1 << i
        return m

    def __len__(self):
        return len(self.indices)


# ---------------------------------------------------------------------------
# face algebra on degeneracies (all cached; degrees stay small)


@lru_cache(maxsize=None)
def _values(m: int, mask: int) -> tuple[int, ...]:
    vals = [0]
    for t in range(m):
        vals.append(vals[-1] + (0 if mask >> t & 1 else 1))
    return tuple(vals)


def _flats(vals: Sequence[int]) -> int:
    mask = 0
    for t in range(len(vals) - 1):
        if vals[t] == vals[t + 1]:
            mask |= 1 << t
    return mask


@lru_cache(maxsize=None)
def degeneracy_face(m: int, mask: int, j: int) -> tuple[int, int]:
    """Apply ``d_j`` to the degeneracy operator ``mask`` in degree ``m``.

    Returns ``(i, new_mask)``.  ``i == -1`` means the operator survives and
    the result is ``s_{new_mask}`` of the same cell; otherwise the result is
    ``s_{new_mask}`` applied to ``d_i`` of the cell.
    """
    vals = _values(m, mask)
    top = vals[-1]
    w = vals[:j] + vals[j + 1:]
    if (j > 0 and vals[j - 1] == vals[j]) or (j < m and vals[j + 1] == vals[j]):
        return -1, _flats(w)
    i = vals[j]
    w = tuple(v if v < i else v - 1 for v in w)
    assert top >= 1
    return i, _flats(w)


@lru_cache(maxsize=None)
def compose_masks(m: int, outer: int, inner: int) -> int:
    """Flats of ``eta_inner o eta_outer`` where ``outer`` lives in degree ``m``."""
    vals = _values(m, outer)
    mask = outer
    for t in range(m):
        if not outer >> t & 1 and inner >> vals[t] & 1:
            mask |= 1 << t
    return mask


@lru_cache(maxsize=None)
def squeeze_mask(m: int, mask: int, common: int) -> int:
    """Remove the bit positions of ``common`` (a subset of ``mask``) and reindex."""
    out = 0
    k = 0
    for t in range(m):
        if common >> t & 1:
            continue
        if mask >> t & 1:
            out |= 1 << k
        k += 1
    return out


@lru_cache(maxsize=None)
def degeneracy_degenerate(m: int, mask: int, i: int) -> int:
    """Mask of ``s_i`` applied to an ``m``-simplex with flats ``mask``."""
    low = mask & ((1 << i) - 1)
    high = mask >> i
    return low | (high << (i + 1)) | (1 << i)


# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class SimplicialSet:
    """Finite simplicial set given by its nondegenerate cells.

    ``counts[d]`` is the number of nondegenerate ``d``-cells and
    ``faces[d][i]`` the tuple of ``d + 1`` faces of cell ``i`` (empty for
    ``d == 0``).  Instances are treated as immutable.
    """

    counts: tuple[int, ...]
    faces: tuple[tuple[tuple[Simplex, ...], ...], ...]
    basepoint: int = 0
    name: str = field(default="", compare=False)

    @property
    def dim(self) -> int:
        d = len(self.counts) - 1
        while d > 0 and self.counts[d] == 0:
            d -= 1
        return d

    def cells(self, d: int) -> range:
        if d < 0 or d >= len(self.counts):
            return range(0)
        return range(self.counts[d])

    def count(self, d: int) -> int:
        return self.counts[d] if 0 <= d < len(self.counts) else 0

    def total_cells(self) -> int:
        return sum(self.counts)

    # -- simplex calculus -------------------------------------------------

    def face(self, m: int, simplex: Simplex, j: int) -> Simplex:
        """``d_j`` of the degree-``m`` simplex ``(mask, cell)``."""
        mask, cell = simplex
        i, nm = degeneracy_face(m, mask, j)
        if i < 0:
            return nm, cell
        c = m - popcount(mask)
        inner, target = self.faces[c][cell][i]
        return compose_masks(m - 1, nm, inner), target

    def vertices(self, m: int, simplex: Simplex) -> tuple[int, ...]:
        """Vertex (0-cell) ids of a degree-``m`` simplex, in order."""
        out = []
        for v in range(m + 1):
            s, deg = simplex, m
            while deg > v:
                s = self.face(deg, s, deg)
                deg -= 1
            while deg > 0:
                s = self.face(deg, s, 0)
                deg -= 1
            out.append(s[1])
        return tuple(out)

    def is_degenerate_face(self, d: int, cell: int, j: int) -> bool:
        return self.faces[d][cell][j][0] != 0

    # -- validation -------------------------------------------------------

    def validate(self) -> None:
        """Check targets, dimensions and every simplicial identity."""
        if not self.counts or self.counts[0] < 1:
            raise SimplicialSetError("no 0-cells")
        if not 0 <= self.basepoint < self.counts[0]:
            raise SimplicialSetError("basepoint out of range")
        if len(self.faces) != len(self.counts):
            raise SimplicialSetError("faces/counts length mismatch")
        for d in range(1, len(self.counts)):
            if len(self.faces[d]) != self.counts[d]:
                raise SimplicialSetError(f"dimension {d}: wrong number of face tuples")
            for cell, fs in enumerate(self.faces[d]):
                if len(fs) != d + 1:
                    raise SimplicialSetError(f"cell ({d},{cell}) has {len(fs)} faces")
                for mask, target in fs:
                    if mask >> (d - 1):
                        raise SimplicialSetError(f"cell ({d},{cell}): mask out of range")
                    c = d - 1 - popcount(mask)
                    if c < 0 or not 0 <= target < self.count(c):
                        raise SimplicialSetError(f"cell ({d},{cell}): bad face target")
                # d_i d_j = d_{j-1} d_i for i < j
                for j in range(1, d + 1 if d >= 2 else 1):
                    for i in range(j):
                        a = self.face(d - 1, fs[j], i)
                        b = self.face(d - 1, fs[i], j - 1)
                        if a != b:
                            raise SimplicialSetError(
                                f"cell ({d},{cell}): d{i}d{j} != d{j - 1}d{i}"
                            )
        if self.faces[0] and any(self.faces[0]):
            raise SimplicialSetError("0-cells cannot have faces")

    # -- comparison / io --------------------------------------------------

    def structure(self):
        return (self.counts, self.faces, self.basepoint)

    def __eq__(self, other):
        if not isinstance(other, SimplicialSet):
            return NotImplemented
        return self.structure() == other.structure()

    def __hash__(self):
        return hash(self.structure())

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<SimplicialSet{label} census={list(self.counts)}>"

    def to_dict(self) -> dict:
        return {
            "dims": len(self.counts) - 1,
            "cells": list(self.counts),
            "faces": [
                [[[list(word_from_mask(mask)), target] for mask, target in fs] for fs in self.faces[d]]
                for d in range(len(self.counts))
            ],
            "basepoint": self.basepoint,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, doc: dict, name: str = "") -> "SimplicialSet":
        counts = tuple(int(c) for c in doc["cells"])
        if doc.get("dims", len(counts) - 1) != len(counts) - 1:
            raise SimplicialSetError("dims does not match the cell list")
        faces = []
        for d, layer in enumerate(doc["faces"]):
            faces.append(tuple(
                tuple((OperatorWord(tuple(word)).mask, int(t)) for word, t in fs) for fs in layer
            ))
        out = cls(counts, tuple(faces), int(doc.get("basepoint", 0)), name)
        out.validate()
        return out

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "SimplicialSet":
        return cls.from_dict(json.loads(text), name)


def make_sset(layers: Sequence[Sequence[Sequence[Simplex]]], basepoint: int = 0,
              name: str = "", counts: Sequence[int] | None = None) -> SimplicialSet:
    """Build from per-dimension face lists; ``layers[0]`` may be a vertex count."""
    if counts is None:
        counts = [len(layer) for layer in layers]
    counts = list(counts)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    faces = [tuple(() for _ in range(counts[0]))]
    for d in range(1, len(counts)):
        faces.append(tuple(tuple(fs) for fs in layers[d]))
    return SimplicialSet(tuple(counts), tuple(faces), basepoint, name)


def full_mask(m: int) -> int:
    return (1 << m) - 1


@dataclass(frozen=True, eq=False)
class GroupAction:
    """Action of a finite group by simplicial automorphisms.

    ``perms[g][d]`` is the permutation of nondegenerate ``d``-cells induced
    by group element ``g``; element 0 is the identity.
    """

    perms: tuple[tuple[tuple[int, ...], ...], ...]
    labels: tuple = ()

    @property
    def order(self) -> int:
        return len(self.perms)

    def validate(self, X: SimplicialSet) -> None:
        if not self.perms:
            raise SimplicialSetError("empty group")
        for g, per in enumerate(self.perms):
            if len(per) != len(X.counts):
                raise SimplicialSetError(f"element {g}: wrong number of dimensions")
            for d, p in enumerate(per):
                if sorted(p) != list(range(X.counts[d])):
                    raise SimplicialSetError(f"element {g}: not a permutation in dim {d}")
        ident = self.perms[0]
        if any(tuple(p) != tuple(range(len(p))) for p in ident):
            raise SimplicialSetError("element 0 is not the identity")
        if X.counts[0] and any(per[0][X.basepoint] != X.basepoint for per in self.perms):
            raise SimplicialSetError("action does not fix the basepoint")
        # closure under composition
        seen = {per: g for g, per in enumerate(self.perms)}
        if len(seen) != len(self.perms):
            raise SimplicialSetError("repeated group element")
        for a in self.perms:
            for b in self.perms:
                comp = tuple(tuple(pa[pb[i]] for i in range(len(pb))) for pa, pb in zip(a, b))
                if comp not in seen:
                    raise SimplicialSetError("composition law fails: set is not closed")
        # simplicial automorphisms: commute with the stored faces
        for per in self.perms:
            for d in range(1, len(X.counts)):
                pd = per[d]
                for cell, fs in enumerate(X.faces[d]):
                    image = X.faces[d][pd[cell]]
                    for (mask, t), (mask2, t2) in zip(fs, image):
                        c = d - 1 - popcount(mask)
                        if mask != mask2 or per[c][t] != t2:
                            raise SimplicialSetError(
                                "action does not commute with faces"
                            )


def trivial_action(X: SimplicialSet) -> GroupAction:
    return GroupAction((tuple(tuple(range(c)) for c in X.counts),), ("e",))
