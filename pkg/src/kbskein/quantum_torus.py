"""The quantum torus ``C_t[l^{±1}, m^{±1}]`` with ``l m = t^2 m l``.

Elements are stored in normal order, every monomial written ``l^a m^b``.
Moving ``m^b`` past ``l^c`` costs ``t^{-2bc}``, so
``(l^a m^b)(l^c m^d) = t^{-2bc} l^{a+c} m^{b+d}``.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import ZERO, Coercible, LaurentPoly


class QTElement:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], Coercible] | None = None):
        d = {}
        for (a, b), c in (terms or {}).items():
            c = LaurentPoly.coerce(c)
            if c:
                d[(int(a), int(b))] = c
        self._terms = dict(sorted(d.items()))

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Coercible = 1) -> "QTElement":
        return cls({(a, b): coeff})

    @property
    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    def coeff(self, a: int, b: int) -> LaurentPoly:
        return self._terms.get((a, b), ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "QTElement") -> "QTElement":
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, ZERO) + c
        return QTElement(d)

    def __neg__(self) -> "QTElement":
        return QTElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "QTElement") -> "QTElement":
        return self + (-other)

    def scale(self, c: Coercible) -> "QTElement":
        c = LaurentPoly.coerce(c)
        return QTElement({k: v * c for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, QTElement):
            return NotImplemented
        d: dict[tuple[int, int], LaurentPoly] = {}
        for (a, b), c1 in self._terms.items():
            for (c, e), c2 in other._terms.items():
                key = (a + c, b + e)
                d[key] = d.get(key, ZERO) + (c1 * c2).shift(-2 * b * c)
        return QTElement(d)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def invert_t(self) -> "QTElement":
        return QTElement({k: c.invert_t() for k, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, QTElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def to_json(self) -> list:
        return [[a, b, c.to_json()] for (a, b), c in self._terms.items()]

    @classmethod
    def from_json(cls, data: Iterable) -> "QTElement":
        return cls({(int(a), int(b)): LaurentPoly.from_json(c) for a, b, c in data})

    def __repr__(self) -> str:
        return f"QTElement({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self._terms.items():
            mono = "".join(
                s for s in (
                    "" if a == 0 else ("l" if a == 1 else f"l^{a}"),
                    "" if b == 0 else ("m" if b == 1 else f"m^{b}"),
                )
            ) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)


IDENTITY = QTElement.monomial(0, 0)
L = QTElement.monomial(1, 0)
M = QTElement.monomial(0, 1)


def qt_mul(a: QTElement, b: QTElement) -> QTElement:
    return a * b


def qt_left_mul_monomial(a: int, b: int, x: QTElement) -> QTElement:
    """``l^a m^b * x``."""
    return QTElement.monomial(a, b) * x


def qt_is_polynomial(x: QTElement) -> bool:
    """True when ``x`` lies in the quantum plane ``C_t[l, m]``."""
    return all(a >= 0 and b >= 0 for a, b in x.terms)
