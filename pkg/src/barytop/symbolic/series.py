"""Truncated Poincare series with exact integer coefficients."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class PoincareSeries:
    """Coefficients ``coeffs[d]`` for degrees ``0..dmax``.

    ``p`` is the field characteristic (0 for rational ranks).
    """

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(c < 0 for c in self.coeffs):
            raise ValueError("Poincare series coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, p: int, dmax: int) -> "PoincareSeries":
        return cls(p, (0,) * (dmax + 1))

    @classmethod
    def unit(cls, p: int, dmax: int) -> "PoincareSeries":
        return cls.monomial(p, dmax, 0)

    @classmethod
    def monomial(cls, p: int, dmax: int, degree: int, count: int = 1) -> "PoincareSeries":
        c = [0] * (dmax + 1)
        if 0 <= degree <= dmax:
            c[degree] = count
        return cls(p, tuple(c))

    @classmethod
    def from_dict(cls, p: int, dmax: int, dims: dict[int, int]) -> "PoincareSeries":
        c = [0] * (dmax + 1)
        for d, v in dims.items():
            if 0 <= d <= dmax:
                c[d] += v
        return cls(p, tuple(c))

    @property
    def dmax(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def _check(self, other: "PoincareSeries"):
        if self.p != other.p:
            raise ValueError(f"characteristic mismatch: {self.p} vs {other.p}")

    def __add__(self, other: "PoincareSeries") -> "PoincareSeries":
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        return PoincareSeries(self.p, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)))

    def __mul__(self, other: "PoincareSeries") -> "PoincareSeries":
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        out = [0] * n
        for i, a in enumerate(self.coeffs[:n]):
            if a:
                for j in range(n - i):
                    out[i + j] += a * other.coeffs[j]
        return PoincareSeries(self.p, tuple(out))

    def scale(self, k: int) -> "PoincareSeries":
        return PoincareSeries(self.p, tuple(k * c for c in self.coeffs))

    def shift(self, k: int) -> "PoincareSeries":
        """Raise (k > 0) or lower (k < 0) every degree by |k|, keeping dmax.

        Lowering drops whatever falls below degree 0.
        """
        n = len(self.coeffs)
        out = [0] * n
        for d, c in enumerate(self.coeffs):
            if 0 <= d + k < n:
                out[d + k] = c
        return PoincareSeries(self.p, tuple(out))

    def truncate(self, dmax: int) -> "PoincareSeries":
        c = list(self.coeffs[: dmax + 1]) + [0] * max(0, dmax + 1 - len(self.coeffs))
        return PoincareSeries(self.p, tuple(c))

    def reduced(self) -> "PoincareSeries":
        """Drop one class in degree 0 (reduced homology of a connected space)."""
        c = list(self.coeffs)
        if c and c[0] > 0:
            c[0] -= 1
        return PoincareSeries(self.p, tuple(c))

    def unreduced(self) -> "PoincareSeries":
        c = list(self.coeffs)
        if c:
            c[0] += 1
        return PoincareSeries(self.p, tuple(c))

    def euler(self) -> int:
        return sum((-1) ** d * c for d, c in enumerate(self.coeffs))

    def nonzero(self) -> dict[int, int]:
        return {d: c for d, c in enumerate(self.coeffs) if c}

    def to_json(self) -> dict:
        return {"p": self.p, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, doc: dict) -> "PoincareSeries":
        return cls(int(doc["p"]), tuple(doc["coeffs"]))
