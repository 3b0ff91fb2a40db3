"""Admissible Steenrod words and the bigraded generators they index.

``Sq^I iota_n`` with ``I = (i_1, ..., i_r)`` is a polynomial generator of
the mod-2 cohomology of ``K(Z, n)`` when

* ``i_1 - i_2 - ... - i_r < n`` (excess),
* ``i_k >= 2 i_{k+1}``,
* ``i_r > 1``.

It has degree ``n + |I|`` and filtration ``2^r``.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class AdmissibleWord:
    indices: tuple[int, ...]
    base: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not is_admissible(self.indices, self.base):
            raise ValueError(f"{self.indices} is not admissible over degree {self.base}")

    @property
    def length(self) -> int:
        return len(self.indices)

    @property
    def excess(self) -> int:
        return excess(self.indices)

    @property
    def degree(self) -> int:
        return self.base + sum(self.indices)

    @property
    def filtration(self) -> int:
        return 2 ** len(self.indices)

    def __str__(self):
        if not self.indices:
            return f"iota_{self.base}"
        return "".join(f"Sq^{i}" for i in self.indices) + f" iota_{self.base}"


@dataclass(frozen=True)
class BigradedGenerator:
    """An algebra generator of homological degree ``degree`` and filtration ``filtration``.

    ``exterior`` generators square to zero.
    """

    degree: int
    filtration: int
    provenance: object
    exterior: bool = False

    def __post_init__(self):
        if self.degree < 1 or self.filtration < 1:
            raise ValueError("degree and filtration must be positive")

    @classmethod
    def from_word(cls, word: AdmissibleWord) -> "BigradedGenerator":
        return cls(word.degree, word.filtration, word)


def excess(indices) -> int:
    if not indices:
        return 0
    return indices[0] - sum(indices[1:])


def is_admissible(indices, base: int) -> bool:
    if any(i < 1 for i in indices):
        return False
    if any(a < 2 * b for a, b in zip(indices, indices[1:])):
        return False
    if indices and indices[-1] <= 1:
        return False
    return excess(indices) < base


def admissible_sequences(n: int, dmax: int) -> list[AdmissibleWord]:
    """All admissible words over ``iota_n`` of degree at most ``dmax``.

    Includes the empty word; ordered by degree, then lexicographically.
    """
    if n < 2:
        raise ValueError("admissible words need base degree n >= 2")
    budget = dmax - n
    found: list[tuple[int, ...]] = []

    def extend(word: tuple[int, ...], total: int):
        # word is built from the right: word[0] is the current i_1
        if excess(word) < n:
            found.append(word)
        lo = 2 * word[0] if word else 2
        for i in range(lo, budget - total + 1):
            nxt = (i,) + word
            # excess grows with i and never drops under further extension
            if excess(nxt) >= n:
                break
            extend(nxt, total + i)

    extend((), 0)
    return sorted((AdmissibleWord(w, n) for w in found),
                  key=lambda w: (w.degree, w.indices))


def mod2_generators(n: int, dmax: int) -> list[BigradedGenerator]:
    return [BigradedGenerator.from_word(w) for w in admissible_sequences(n, dmax)]
