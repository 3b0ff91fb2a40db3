"""Euler characteristics of symmetric products and barycenter spaces.

All values come from coefficient extraction in ``(1 - t)^(-chi)`` so that
``chi <= 0`` needs no special casing.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial


def _sp_series(chi: int, nmax: int) -> list[int]:
    """Coefficients of ``(1 - t)^(-chi)`` up to ``t^nmax``."""
    coeffs = [1] + [0] * nmax
    if chi >= 0:
        # multiply chi times by 1/(1-t): prefix sums
        for _ in range(chi):
            for i in range(1, nmax + 1):
                coeffs[i] += coeffs[i - 1]
    else:
        for _ in range(-chi):
            for i in range(nmax, 0, -1):
                coeffs[i] -= coeffs[i - 1]
    return coeffs


def euler_sp(n: int, chi: int) -> int:
    """``chi(SP^n X)`` for a space with Euler characteristic ``chi``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _sp_series(chi, n)[n]


def euler_rsp(n: int, chi: int) -> int:
    """``chi(SPbar^n X) = 1 + chi(SP^n X) - chi(SP^{n-1} X)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    c = _sp_series(chi, n)
    return 1 + c[n] - c[n - 1]


def euler_barycenter(n: int, chi: int) -> int:
    """``chi(B_n X) = 1 - (1 - chi)(2 - chi)...(n - chi) / n!``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    prod = Fraction(1)
    for i in range(1, n + 1):
        prod *= i - chi
    value = 1 - prod / factorial(n)
    assert value.denominator == 1, "non-integral Euler characteristic"
    return int(value)
