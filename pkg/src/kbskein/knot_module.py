"""Skein module of the complement ``M_p`` of the (2, 2p+1)-torus knot.

``K_t(M_p)`` is free on ``S_k(x) S_n(y)`` with ``k >= 0`` and ``0 <= n <= p``.
Polynomials in ``x, y`` (parallel copies of the two generating curves) are
staged in :class:`FreeXY` and brought to that basis by :func:`km_reduce`,
which rewrites high ``S_n(y)`` with the reduction relation

    S_{p+i}(y) = (-1)^i t^{2i+1} S_{2i}(x) (t S_{p-1}(y) + t^-1 S_p(y))
                 - t^{4i+2} S_{p-i-1}(y),        1 <= i <= p+1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .chebyshev import UniPoly, cheb_S, cheb_T, power_to_s, s_basis_expand, s_index, s_product
from .errors import IndexOutOfRange, UnsupportedCurve
from .laurent import ONE, ZERO, Coercible, LaurentPoly, t_pow
from .torus_skein import TorusSkein


@dataclass(frozen=True)
class TorusKnotParam:
    """``p >= 1``; the knot is the (2, 2p+1)-torus knot."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"torus knot parameter must be an integer >= 1, got {self.p!r}")


def _as_p(p) -> int:
    if isinstance(p, TorusKnotParam):
        return p.p
    return TorusKnotParam(p).p


def _acc(d: dict, key, val: LaurentPoly) -> None:
    v = d.get(key, ZERO) + val
    if v:
        d[key] = v
    else:
        d.pop(key, None)


# ---------------------------------------------------------------------------
# FreeXY: commutative staging polynomials in x, y
# ---------------------------------------------------------------------------

class FreeXY:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[tuple[int, int], Coercible] | None = None):
        d = {}
        for (j, n), c in (coeffs or {}).items():
            if j < 0 or n < 0:
                raise ValueError(f"negative power in FreeXY: {(j, n)}")
            c = LaurentPoly.coerce(c)
            if c:
                d[(int(j), int(n))] = c
        self._coeffs = dict(sorted(d.items()))

    @classmethod
    def mono(cls, j: int, n: int, coeff: Coercible = 1) -> "FreeXY":
        return cls({(j, n): coeff})

    @classmethod
    def from_y(cls, poly: UniPoly) -> "FreeXY":
        return cls({(0, k): c for k, c in poly.coeffs.items()})

    @classmethod
    def from_x(cls, poly: UniPoly) -> "FreeXY":
        return cls({(k, 0): c for k, c in poly.coeffs.items()})

    @property
    def coeffs(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "FreeXY") -> "FreeXY":
        d = dict(self._coeffs)
        for k, c in other._coeffs.items():
            _acc(d, k, c)
        return FreeXY(d)

    def __neg__(self) -> "FreeXY":
        return FreeXY({k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "FreeXY") -> "FreeXY":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return FreeXY({k: c * other for k, c in self._coeffs.items()})
        if not isinstance(other, FreeXY):
            return NotImplemented
        d: dict = {}
        for (j1, n1), c1 in self._coeffs.items():
            for (j2, n2), c2 in other._coeffs.items():
                _acc(d, (j1 + j2, n1 + n2), c1 * c2)
        return FreeXY(d)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeXY):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def to_json(self) -> list:
        return [[j, n, c.to_json()] for (j, n), c in self._coeffs.items()]

    @classmethod
    def from_json(cls, data) -> "FreeXY":
        return cls({(int(j), int(n)): LaurentPoly.from_json(c) for j, n, c in data})

    def __repr__(self) -> str:
        if not self._coeffs:
            return "FreeXY(0)"
        return "FreeXY(" + " + ".join(f"({c})*x^{j}y^{n}" for (j, n), c in self._coeffs.items()) + ")"


X_ = FreeXY.mono(1, 0)
Y_ = FreeXY.mono(0, 1)


def _y_S(n: int) -> FreeXY:
    return FreeXY.from_y(cheb_S(n))


# ---------------------------------------------------------------------------
# KMElement: reduced elements of K_t(M_p)
# ---------------------------------------------------------------------------

class KMElement:
    """``sum c_{k,n} S_k(x) S_n(y)`` with ``0 <= n <= p``."""

    __slots__ = ("p", "_coeffs")

    def __init__(self, p, coeffs: Mapping[tuple[int, int], Coercible] | None = None):
        self.p = _as_p(p)
        d = {}
        for (k, n), c in (coeffs or {}).items():
            if k < 0 or not 0 <= n <= self.p:
                raise ValueError(f"basis index {(k, n)} outside the K_t(M_{self.p}) basis")
            c = LaurentPoly.coerce(c)
            if c:
                d[(int(k), int(n))] = c
        self._coeffs = dict(sorted(d.items()))

    @property
    def coeffs(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._coeffs)

    def coeff(self, k: int, n: int) -> LaurentPoly:
        return self._coeffs.get((k, n), ZERO)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def _check(self, other: "KMElement"):
        if other.p != self.p:
            raise ValueError(f"mixing K_t(M_{self.p}) and K_t(M_{other.p})")

    def __add__(self, other: "KMElement") -> "KMElement":
        self._check(other)
        d = dict(self._coeffs)
        for k, c in other._coeffs.items():
            _acc(d, k, c)
        return KMElement(self.p, d)

    def __neg__(self) -> "KMElement":
        return KMElement(self.p, {k: -c for k, c in self._coeffs.items()})

    def __sub__(self, other: "KMElement") -> "KMElement":
        return self + (-other)

    def scale(self, c: Coercible) -> "KMElement":
        c = LaurentPoly.coerce(c)
        return KMElement(self.p, {k: v * c for k, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def invert_t(self) -> "KMElement":
        return KMElement(self.p, {k: c.invert_t() for k, c in self._coeffs.items()})

    def to_freexy(self) -> FreeXY:
        """Expand the Chebyshev basis back into powers of ``x`` and ``y``."""
        total = FreeXY()
        for (k, n), c in self._coeffs.items():
            total = total + FreeXY.from_x(cheb_S(k)) * FreeXY.from_y(cheb_S(n)) * c
        return total

    def __eq__(self, other) -> bool:
        if not isinstance(other, KMElement):
            return NotImplemented
        return self.p == other.p and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.p, tuple(self._coeffs.items())))

    def to_json(self) -> list:
        return [[k, n, c.to_json()] for (k, n), c in self._coeffs.items()]

    @classmethod
    def from_json(cls, p, data) -> "KMElement":
        return cls(p, {(int(k), int(n)): LaurentPoly.from_json(c) for k, n, c in data})

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"KMElement(p={self.p}, 0)"
        body = " + ".join(f"({c})*S{k}(x)S{n}(y)" for (k, n), c in self._coeffs.items())
        return f"KMElement(p={self.p}, {body})"


def _mul_Sx(d: Mapping[tuple[int, int], LaurentPoly], a: int, out: dict, c: LaurentPoly) -> None:
    """``out += c * S_a(x) * d`` acting on the x slot."""
    for (k, n), v in d.items():
        w = v * c
        for kk in s_product(a, k):
            _acc(out, (kk, n), w)


@lru_cache(maxsize=None)
def _reduced_Sy(m: int, p: int) -> tuple[tuple[tuple[int, int], LaurentPoly], ...]:
    """Basis expansion of the single skein ``S_m(y)``."""
    if m < 0:
        raise ValueError("negative index; resolve with s_index first")
    if m <= p:
        return (((0, m), ONE),)
    d: dict = {}
    if m <= 2 * p + 1:
        i = m - p
        sign = -1 if i % 2 else 1
        _acc(d, (2 * i, p - 1), t_pow(2 * i + 2, sign))
        _acc(d, (2 * i, p), t_pow(2 * i, sign))
        low = s_index(p - i - 1)
        if low is not None:
            s, idx = low
            _acc(d, (0, idx), t_pow(4 * i + 2, -s))
    else:
        # S_m = y S_{m-1} - S_{m-2}, reduced recursively
        prev = _mul_y_dict(dict(_reduced_Sy(m - 1, p)), p)
        for key, v in prev.items():
            _acc(d, key, v)
        for key, v in _reduced_Sy(m - 2, p):
            _acc(d, key, -v)
    return tuple(sorted(d.items()))


def reduced_Sy(m: int, p) -> KMElement:
    p = _as_p(p)
    for k in range(2 * p + 2, m, 200):
        _reduced_Sy(k, p)
    return KMElement(p, dict(_reduced_Sy(m, p)))


def _mul_y_dict(d: Mapping[tuple[int, int], LaurentPoly], p: int) -> dict:
    out: dict = {}
    for (k, n), c in d.items():
        if n + 1 <= p:
            _acc(out, (k, n + 1), c)
        else:
            _mul_Sx(dict(_reduced_Sy(n + 1, p)), k, out, c)
        if n >= 1:
            _acc(out, (k, n - 1), c)
    return out


def km_mul_x(e: KMElement) -> KMElement:
    """``x * e``: ``S_k(x) -> S_{k+1}(x) + S_{k-1}(x)`` in the x slot."""
    out: dict = {}
    _mul_Sx(e.coeffs, 1, out, ONE)
    return KMElement(e.p, out)


def km_mul_y(e: KMElement) -> KMElement:
    """``y * e`` followed by reduction of any ``S_{p+1}(y)`` that appears."""
    return KMElement(e.p, _mul_y_dict(e.coeffs, e.p))


def y_action_defect(p) -> KMElement:
    """``S_{2p+1}(y)`` from the reduction relation minus ``y S_{2p}(y) - S_{2p-1}(y)`` via :func:`km_mul_y`.

    Nonzero: the relations are statements about single skeins, and adding a
    parallel ``y`` to a reduced form is not compatible with them.  Reductions
    of ``S_m(y)`` for ``m > 2p+1`` inherit this ambiguity.
    """
    p = _as_p(p)
    return reduced_Sy(2 * p + 1, p) - (km_mul_y(reduced_Sy(2 * p, p)) - reduced_Sy(2 * p - 1, p))


def km_reduce(f: FreeXY, p) -> KMElement:
    """Bring a polynomial in parallel copies of ``x`` and ``y`` to the basis."""
    p = _as_p(p)
    top = max((n for _, n in f.coeffs), default=0)
    if top > 2 * p + 1:
        reduced_Sy(top, p)
    out: dict = {}
    for (j, n), c in f.coeffs.items():
        for a, ca in power_to_s(j):
            for m, cm in power_to_s(n):
                _mul_Sx(dict(_reduced_Sy(m, p)), a, out, c * (ca * cm))
    return KMElement(p, out)


def km_const(c: Coercible, p) -> KMElement:
    return KMElement(p, {(0, 0): c})


# ---------------------------------------------------------------------------
# The skeins A(k, n)
# ---------------------------------------------------------------------------

_C = t_pow(2) - t_pow(-2)


@lru_cache(maxsize=None)
def _A(k: int, n: int) -> FreeXY:
    if k == 1:
        return FreeXY.mono(0, n + 1)
    if k == 2:
        return FreeXY({
            (0, n): -(t_pow(2) + t_pow(-2)),
            (0, n + 2): t_pow(-2),
            (2, n): t_pow(2),
            (2, n + 1): 1,
        })
    if k == 0:
        # k = 1 instance of the recurrence solved for A(0, n)
        rest = _A(1, n + 1) * t_pow(-2) + FreeXY({(2, n): _C, (2, n + 1): 1}) - _A(2, n)
        return rest * t_pow(4)
    # A(k, n) from A(k-1, n+1) and A(k-2, n)
    return (
        _A(k - 1, n + 1) * t_pow(-2)
        - _A(k - 2, n) * t_pow(-4)
        + FreeXY({(2, n): _C, (2, n + 1): 1})
    )


def skein_A_rec(k: int, n: int, p) -> FreeXY:
    """Unreduced polynomial for ``A(k, n)`` from the two-step recurrence.

    ``k = 0`` and ``k = 2p + 1`` are the formal extensions of the recurrence
    past its range; ``A(0, 0) = t^6 + t^2 - t^2 x^2``.
    """
    p = _as_p(p)
    if not 0 <= k <= 2 * p + 1:
        raise IndexOutOfRange(f"A(k, n) needs 0 <= k <= {2 * p + 1}, got k={k}")
    if n < 0:
        raise IndexOutOfRange(f"A(k, n) needs n >= 0, got n={n}")
    return _A(k, n)


def skein_A_closed(k: int, n: int, p) -> FreeXY:
    """Closed form for ``A(k, n)``, read with every ``S(d)`` as ``S(y)``."""
    p = _as_p(p)
    if not 1 <= k <= 2 * p:
        raise IndexOutOfRange(f"closed form needs 1 <= k <= {2 * p}, got k={k}")
    if n < 0:
        raise IndexOutOfRange(f"A(k, n) needs n >= 0, got n={n}")
    yn = FreeXY.mono(0, n)
    x2yn = FreeXY.mono(2, n)
    total = (
        yn * _y_S(k - 2) * t_pow(-2 * k + 6, -1)
        + x2yn * _y_S(k - 1) * t_pow(-2 * k + 4, -1)
        + yn * _y_S(k) * t_pow(-2 * k + 2)
        + x2yn * t_pow(2, -1)
    )
    for r in range(-1, k):
        total = total + x2yn * _y_S(r) * t_pow(2 - 2 * r, 2)
    return total


def closed_form_discrepancy(k: int, n: int, p) -> FreeXY:
    """``skein_A_rec - skein_A_closed``; zero when the closed form holds."""
    return skein_A_rec(k, n, p) - skein_A_closed(k, n, p)


def reduction_relation_sides(i: int, p) -> tuple[FreeXY, FreeXY]:
    """Both sides of the reduction relation for ``i`` as unreduced polynomials."""
    p = _as_p(p)
    lhs = _y_S(p + i) * t_pow(-2 * i - 1) + _y_S(p - i - 1) * t_pow(2 * i + 1)
    rhs = FreeXY.from_x(cheb_S(2 * i)) * _ypair_free(p) * (-1) ** (i % 2)
    return lhs, rhs


def _ypair_free(p: int) -> FreeXY:
    return _y_S(p - 1) * t_pow(1) + _y_S(p) * t_pow(-1)


# ---------------------------------------------------------------------------
# Peripheral map on (0, n)_T and (1, k)_T
# ---------------------------------------------------------------------------

def _x_poly_into(out: dict, poly: UniPoly, coeff: LaurentPoly) -> None:
    for k, c in s_basis_expand(poly).items():
        _acc(out, (k, 0), c * coeff)


def _add_S_times_ypair(out: dict, idx: int, coeff: LaurentPoly, p: int) -> None:
    """``out += coeff * S_idx(x) * (t S_{p-1}(y) + t^-1 S_p(y))``."""
    r = s_index(idx)
    if r is None:
        return
    s, k = r
    _acc(out, (k, p - 1), coeff.shift(1) * s)
    _acc(out, (k, p), coeff.shift(-1) * s)


def pi_0n(n: int, p) -> KMElement:
    """Image of ``(0, n)_T``: ``T_n(x)``."""
    p = _as_p(p)
    out: dict = {}
    _x_poly_into(out, cheb_T(n), ONE)
    return KMElement(p, out)


def pi_1k(k: int, p) -> KMElement:
    """Image of ``(1, k)_T`` in ``K_t(M_p)``, closed form valid for every integer ``k``."""
    p = _as_p(p)
    N = 4 * p + k + 2
    out: dict = {}
    _x_poly_into(out, cheb_T(N), t_pow(N))
    sgn = 1 if (p + 1) % 2 == 0 else -1
    _add_S_times_ypair(out, -2 * p - k, t_pow(2 * p + k - 1, sgn), p)
    _add_S_times_ypair(out, -2 * p - k - 4, t_pow(2 * p + k + 3, -sgn), p)
    return KMElement(p, out)


def pi_closed_even(p) -> KMElement:
    """Image of ``(1, -4p-2)_T`` as given by its own closed form."""
    p = _as_p(p)
    sgn = 1 if (p + 1) % 2 == 0 else -1
    out: dict = {(0, 0): LaurentPoly(2)}
    _add_S_times_ypair(out, 2 * p + 2, t_pow(-2 * p - 3, sgn), p)
    _add_S_times_ypair(out, 2 * p - 2, t_pow(-2 * p + 1, -sgn), p)
    return KMElement(p, out)


def pi_closed_odd(p) -> KMElement:
    """Image of ``(1, -4p-1)_T``; the leading term is ``t * x``."""
    p = _as_p(p)
    sgn = 1 if (p + 1) % 2 == 0 else -1
    out: dict = {(1, 0): t_pow(1)}
    _add_S_times_ypair(out, 2 * p + 1, t_pow(-2 * p - 2, sgn), p)
    _add_S_times_ypair(out, 2 * p - 3, t_pow(-2 * p + 2, -sgn), p)
    return KMElement(p, out)


def pi_element(s: TorusSkein, p) -> KMElement:
    """Linear extension of :func:`pi_0n` and :func:`pi_1k`."""
    p = _as_p(p)
    total = km_const(s.scalar, p)
    for (a, b), c in s.terms.items():
        if a == 0:
            total = total + pi_0n(b, p).scale(c)
        elif a == 1:
            total = total + pi_1k(b, p).scale(c)
        else:
            raise UnsupportedCurve(f"no peripheral image known for ({a},{b})_T")
    return total


def km_sum(items: Iterable[KMElement], p) -> KMElement:
    total = KMElement(p)
    for x in items:
        total = total + x
    return total
