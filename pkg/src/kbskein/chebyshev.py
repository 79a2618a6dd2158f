"""Chebyshev polynomials T_n, S_n for every integer index, and S-basis conversions.

Both families obey ``f_{n+1} = x f_n - f_{n-1}``; ``T_0 = 2, T_1 = x`` and
``S_0 = 1, S_1 = x``.  Extended to negative indices they satisfy
``T_{-n} = T_n`` and ``S_{-n} = -S_{n-2}``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .laurent import ZERO, Coercible, LaurentPoly


class UniPoly:
    """Polynomial in one formal variable ``x`` with :class:`LaurentPoly` coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, Coercible] | None = None):
        d = {}
        for k, c in (coeffs or {}).items():
            if k < 0:
                raise ValueError(f"negative power {k} in UniPoly")
            c = LaurentPoly.coerce(c)
            if c:
                d[int(k)] = c
        self._coeffs = dict(sorted(d.items()))

    @property
    def coeffs(self) -> dict[int, LaurentPoly]:
        return dict(self._coeffs)

    def coeff(self, k: int) -> LaurentPoly:
        return self._coeffs.get(k, ZERO)

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        d = dict(self._coeffs)
        for k, c in other._coeffs.items():
            d[k] = d.get(k, ZERO) + c
        return UniPoly(d)

    def __neg__(self) -> "UniPoly":
        return UniPoly({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if isinstance(other, (int, LaurentPoly)):
            return UniPoly({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, UniPoly):
            return NotImplemented
        d: dict[int, LaurentPoly] = {}
        for i, a in self._coeffs.items():
            for j, b in other._coeffs.items():
                d[i + j] = d.get(i + j, ZERO) + a * b
        return UniPoly(d)

    __rmul__ = __mul__

    def mul_x(self, times: int = 1) -> "UniPoly":
        return UniPoly({k + times: c for k, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __repr__(self) -> str:
        if not self._coeffs:
            return "UniPoly(0)"
        parts = [f"({c})*x^{k}" for k, c in self._coeffs.items()]
        return "UniPoly(" + " + ".join(parts) + ")"


X = UniPoly({1: 1})
UNI_ONE = UniPoly({0: 1})


@lru_cache(maxsize=None)
def _T_nonneg(n: int) -> UniPoly:
    if n == 0:
        return UniPoly({0: 2})
    if n == 1:
        return X
    return _T_nonneg(n - 1).mul_x() - _T_nonneg(n - 2)


@lru_cache(maxsize=None)
def _S_nonneg(n: int) -> UniPoly:
    if n == 0:
        return UNI_ONE
    if n == 1:
        return X
    return _S_nonneg(n - 1).mul_x() - _S_nonneg(n - 2)


def _warm(fn, n):
    # fill the cache bottom-up so deep indices never hit the recursion limit
    for k in range(0, n + 1, 256):
        fn(k)
    return fn(n)


def cheb_T(n: int) -> UniPoly:
    return _warm(_T_nonneg, abs(n))


def cheb_S(n: int) -> UniPoly:
    if n >= 0:
        return _warm(_S_nonneg, n)
    if n == -1:
        return UniPoly()
    return -_warm(_S_nonneg, -n - 2)


def s_index(n: int) -> tuple[int, int] | None:
    """Resolve ``S_n`` to ``sign * S_m`` with ``m >= 0``; ``None`` when ``S_n = 0``."""
    if n >= 0:
        return 1, n
    if n == -1:
        return None
    return -1, -n - 2


def s_basis_expand(p: UniPoly) -> dict[int, LaurentPoly]:
    """Coefficients ``c_n`` with ``p = sum c_n S_n``."""
    out: dict[int, LaurentPoly] = {}
    rest = p
    while rest:
        d = rest.degree()
        c = rest.coeff(d)
        out[d] = c
        rest = rest - cheb_S(d) * c
    return dict(sorted(out.items()))


def from_s_basis(coeffs: Mapping[int, Coercible]) -> UniPoly:
    total = UniPoly()
    for n, c in coeffs.items():
        total = total + cheb_S(n) * LaurentPoly.coerce(c)
    return total


@lru_cache(maxsize=None)
def power_to_s(j: int) -> tuple[tuple[int, int], ...]:
    """Integer S-basis expansion of ``x**j`` as ``((n, c_n), ...)``."""
    if j == 0:
        return ((0, 1),)
    d: dict[int, int] = {}
    for n, c in power_to_s(j - 1):
        # x S_n = S_{n+1} + S_{n-1}, S_{-1} = 0
        d[n + 1] = d.get(n + 1, 0) + c
        if n >= 1:
            d[n - 1] = d.get(n - 1, 0) + c
    return tuple(sorted((n, c) for n, c in d.items() if c))


def s_product(a: int, b: int) -> list[int]:
    """Indices ``m`` with ``S_a S_b = sum S_m`` (Clebsch-Gordan rule), ``a, b >= 0``."""
    if a < 0 or b < 0:
        raise ValueError("s_product needs nonnegative indices")
    return [a + b - 2 * j for j in range(min(a, b) + 1)]


# -- identities used in the torus-knot computations -------------------------

def alternating_even_sum_identity(m: int) -> tuple[UniPoly, UniPoly]:
    """Both sides of ``2x^2 sum_{r<=m} (-1)^r S_{2r} = (-1)^{m+1}(S_{2m-2} - x^2 S_{2m} - S_{2m+2})``."""
    lhs = UniPoly()
    for r in range(m + 1):
        lhs = lhs + cheb_S(2 * r) * (-1) ** r
    lhs = lhs.mul_x(2) * 2
    rhs = (cheb_S(2 * m - 2) - cheb_S(2 * m).mul_x(2) - cheb_S(2 * m + 2)) * (-1) ** (m + 1)
    return lhs, rhs


def alternating_sum_quotient_identity(p: int) -> tuple[UniPoly, UniPoly]:
    """``S_1 * sum_{k=1}^{p-1} (-1)^k S_{2p-2k-2}`` against ``-S_{2p-3}``."""
    total = UniPoly()
    for k in range(1, p):
        total = total + cheb_S(2 * p - 2 * k - 2) * (-1) ** k
    return cheb_S(1) * total, -cheb_S(2 * p - 3)


def x_times_even_T_identity(p: int) -> tuple[UniPoly, UniPoly, UniPoly]:
    """``x T_{2p}``, ``T_{2p+1} + T_{2p-1}`` and ``S_{2p+1} - S_{2p-3}``; all three agree."""
    return (
        cheb_T(2 * p).mul_x(),
        cheb_T(2 * p + 1) + cheb_T(2 * p - 1),
        cheb_S(2 * p + 1) - cheb_S(2 * p - 3),
    )


__all__ = [
    "UniPoly", "X", "cheb_T", "cheb_S", "s_index", "s_basis_expand", "from_s_basis",
    "power_to_s", "s_product", "alternating_even_sum_identity",
    "alternating_sum_quotient_identity", "x_times_even_T_identity",
]
