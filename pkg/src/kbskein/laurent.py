"""Sparse Laurent polynomials in ``t`` with exact integer coefficients.

Values are immutable and kept in canonical form (exponents sorted, no zero
coefficients), so ``==`` and ``hash`` are structural.
"""
from __future__ import annotations

from typing import Iterable, Mapping, Union

from .errors import DivisionByZero, NonExactDivision

Coercible = Union["LaurentPoly", int]


def _canonical(terms: Mapping[int, int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((e, c) for e, c in terms.items() if c))


class LaurentPoly:
    """Laurent polynomial ``sum c_k t^k`` with ``c_k`` arbitrary-precision ints."""

    __slots__ = ("_terms", "_dict", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | int | None = None):
        if terms is None:
            d: dict[int, int] = {}
        elif isinstance(terms, int):
            d = {0: terms} if terms else {}
        elif isinstance(terms, Mapping):
            d = {int(e): int(c) for e, c in terms.items()}
        else:
            d = {}
            for e, c in terms:
                d[int(e)] = d.get(int(e), 0) + int(c)
        self._terms = _canonical(d)
        self._dict = dict(self._terms)
        self._hash = None

    @classmethod
    def _from_dict(cls, d: dict[int, int]) -> "LaurentPoly":
        # trusted fast path: caller guarantees int keys/values
        obj = cls.__new__(cls)
        obj._terms = _canonical(d)
        obj._dict = dict(obj._terms)
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "LaurentPoly":
        return cls._from_dict({exp: coeff})

    @classmethod
    def coerce(cls, x: Coercible) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, int):
            return cls._from_dict({0: x})
        raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")

    # -- inspection -------------------------------------------------------
    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def coeff(self, exp: int) -> int:
        return self._dict.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return self._terms[-1][0]

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("valuation of the zero polynomial")
        return self._terms[0][0]

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: Coercible) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly._from_dict({0: other})
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self._dict)
        for e, c in other._terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly._from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_dict({e: -c for e, c in self._terms})

    def __sub__(self, other: Coercible) -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly._from_dict({0: other})
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        d = dict(self._dict)
        for e, c in other._terms:
            d[e] = d.get(e, 0) - c
        return LaurentPoly._from_dict(d)

    def __rsub__(self, other: Coercible) -> "LaurentPoly":
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other: Coercible) -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return LaurentPoly._from_dict({e: c * other for e, c in self._terms})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        d: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                k = e1 + e2
                d[k] = d.get(k, 0) + c1 * c2
        return LaurentPoly._from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if not self.is_monomial() or abs(self._terms[0][1]) != 1:
                raise NonExactDivision(f"{self} is not a unit")
            (e, c), = self._terms
            return LaurentPoly.monomial(c ** (-n), e * n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t**k``."""
        if k == 0:
            return self
        return LaurentPoly._from_dict({e + k: c for e, c in self._terms})

    def exact_div(self, other: Coercible) -> "LaurentPoly":
        """Return ``q`` with ``q * other == self``.

        Uses descending-degree elimination; a remainder that cannot be cleared
        raises :class:`NonExactDivision` instead of being dropped.
        """
        b = LaurentPoly.coerce(other)
        if not b:
            raise DivisionByZero("division by the zero Laurent polynomial")
        if not self:
            return ZERO
        bdeg, blc = b._terms[-1]
        floor = self.valuation() - b.valuation()
        r = dict(self._dict)
        q: dict[int, int] = {}
        while r:
            rdeg = max(r)
            rlc = r[rdeg]
            shift = rdeg - bdeg
            if shift < floor:
                raise NonExactDivision(f"({self}) / ({b}) is not a Laurent polynomial")
            qc, rem = divmod(rlc, blc)
            if rem:
                raise NonExactDivision(f"({self}) / ({b}): coefficient {rlc} not divisible by {blc}")
            q[shift] = qc
            for e, c in b._terms:
                k = e + shift
                v = r.get(k, 0) - qc * c
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return LaurentPoly._from_dict(q)

    def invert_t(self) -> "LaurentPoly":
        """Substitute ``t -> t**-1``."""
        return LaurentPoly._from_dict({-e: c for e, c in self._terms})

    def subst_it(self) -> "GaussLaurent":
        """Substitute ``t -> i*t``; the powers of ``i`` land in Gaussian-integer coefficients."""
        d = {}
        for e, c in self._terms:
            r = e % 4
            d[e] = ((c, 0), (0, c), (-c, 0), (0, -c))[r]
        return GaussLaurent(d)

    def evaluate(self, value):
        """Evaluate at a number (exact for ``fractions.Fraction`` input)."""
        return sum(c * value ** e for e, c in self._terms)

    # -- comparison / display ---------------------------------------------
    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly._from_dict({0: other})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("LaurentPoly", self._terms))
        return self._hash

    def to_json(self) -> list[list[int]]:
        return [[e, c] for e, c in self._terms]

    @classmethod
    def from_json(cls, data) -> "LaurentPoly":
        return cls((int(e), int(c)) for e, c in data)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms:
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = LaurentPoly()
ONE = LaurentPoly(1)
T = LaurentPoly.monomial(1, 1)


def t_pow(k: int, coeff: int = 1) -> LaurentPoly:
    """``coeff * t**k``."""
    return LaurentPoly.monomial(coeff, k)


def lp_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def lp_exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return LaurentPoly.coerce(a).exact_div(b)


def lp_subst_it(a: LaurentPoly) -> "GaussLaurent":
    return a.subst_it()


def _gadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


class GaussLaurent:
    """Laurent polynomial in ``t`` with Gaussian-integer coefficients ``(re, im)``."""

    __slots__ = ("_terms", "_dict")

    def __init__(self, terms: Mapping[int, tuple[int, int]] | None = None):
        d = {}
        for e, (re, im) in (terms or {}).items():
            if re or im:
                d[int(e)] = (int(re), int(im))
        self._terms = tuple(sorted(d.items()))
        self._dict = dict(self._terms)

    @property
    def terms(self):
        return self._terms

    def coeff(self, exp: int) -> tuple[int, int]:
        return self._dict.get(exp, (0, 0))

    def __add__(self, other: "GaussLaurent") -> "GaussLaurent":
        d = dict(self._dict)
        for e, c in other._terms:
            d[e] = _gadd(d.get(e, (0, 0)), c)
        return GaussLaurent(d)

    def __neg__(self) -> "GaussLaurent":
        return GaussLaurent({e: (-a, -b) for e, (a, b) in self._terms})

    def __sub__(self, other: "GaussLaurent") -> "GaussLaurent":
        return self + (-other)

    def __mul__(self, other: "GaussLaurent") -> "GaussLaurent":
        d: dict[int, tuple[int, int]] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                k = e1 + e2
                d[k] = _gadd(d.get(k, (0, 0)), _gmul(c1, c2))
        return GaussLaurent(d)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(("GaussLaurent", self._terms))

    def to_json(self) -> list[list[int]]:
        return [[e, re, im] for e, (re, im) in self._terms]

    @classmethod
    def from_json(cls, data) -> "GaussLaurent":
        return cls({int(e): (int(re), int(im)) for e, re, im in data})

    def __repr__(self) -> str:
        return f"GaussLaurent({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, (re, im) in self._terms:
            if im == 0:
                c = str(re)
            elif re == 0:
                c = f"{im}i"
            else:
                c = f"({re}{im:+d}i)"
            out.append(c if e == 0 else f"{c}*t^{e}")
        return " + ".join(out)
