"""Kauffman bracket skein algebra of the thickened torus.

Basis elements ``(p, q)_T`` are stored under the normalized key with ``p > 0``
or ``p == 0, q > 0``; ``(p, q)_T`` and ``(-p, -q)_T`` are the same skein.
``(0, 0)_T`` is ``T_0`` of a curve, i.e. twice the empty link, and lives in the
``scalar`` slot.
"""
from __future__ import annotations

from typing import Iterable, Mapping

from .laurent import ZERO, Coercible, LaurentPoly, t_pow
from .quantum_torus import QTElement


def normalize(p: int, q: int) -> tuple[int, int]:
    if p < 0 or (p == 0 and q < 0):
        return -p, -q
    return p, q


def det(p: int, q: int, r: int, s: int) -> int:
    return p * s - q * r


class TorusSkein:
    __slots__ = ("_terms", "_scalar")

    def __init__(self, terms: Mapping[tuple[int, int], Coercible] | None = None,
                 scalar: Coercible = 0):
        d: dict[tuple[int, int], LaurentPoly] = {}
        sc = LaurentPoly.coerce(scalar)
        for (p, q), c in (terms or {}).items():
            c = LaurentPoly.coerce(c)
            key = normalize(p, q)
            if key == (0, 0):
                sc = sc + c * 2
                continue
            d[key] = d.get(key, ZERO) + c
        self._terms = {k: v for k, v in sorted(d.items()) if v}
        self._scalar = sc

    @classmethod
    def basis(cls, p: int, q: int, coeff: Coercible = 1) -> "TorusSkein":
        return cls({(p, q): coeff})

    @classmethod
    def const(cls, c: Coercible) -> "TorusSkein":
        return cls(scalar=c)

    @property
    def terms(self) -> dict[tuple[int, int], LaurentPoly]:
        return dict(self._terms)

    @property
    def scalar(self) -> LaurentPoly:
        return self._scalar

    def coeff(self, p: int, q: int) -> LaurentPoly:
        return self._terms.get(normalize(p, q), ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms) or bool(self._scalar)

    def __add__(self, other: "TorusSkein") -> "TorusSkein":
        d = dict(self._terms)
        for k, c in other._terms.items():
            d[k] = d.get(k, ZERO) + c
        return TorusSkein(d, self._scalar + other._scalar)

    def __neg__(self) -> "TorusSkein":
        return TorusSkein({k: -c for k, c in self._terms.items()}, -self._scalar)

    def __sub__(self, other: "TorusSkein") -> "TorusSkein":
        return self + (-other)

    def scale(self, c: Coercible) -> "TorusSkein":
        c = LaurentPoly.coerce(c)
        return TorusSkein({k: v * c for k, v in self._terms.items()}, self._scalar * c)

    def invert_t(self) -> "TorusSkein":
        """Apply ``t -> t^-1`` to every coefficient."""
        return TorusSkein({k: v.invert_t() for k, v in self._terms.items()}, self._scalar.invert_t())

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        if not isinstance(other, TorusSkein):
            return NotImplemented
        return ts_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly)):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, TorusSkein):
            return NotImplemented
        return self._terms == other._terms and self._scalar == other._scalar

    def __hash__(self):
        return hash((tuple(self._terms.items()), self._scalar))

    def to_json(self) -> dict:
        return {
            "terms": [[p, q, c.to_json()] for (p, q), c in self._terms.items()],
            "scalar": self._scalar.to_json(),
        }

    @classmethod
    def from_json(cls, data) -> "TorusSkein":
        terms = {(int(p), int(q)): LaurentPoly.from_json(c) for p, q, c in data["terms"]}
        return cls(terms, LaurentPoly.from_json(data.get("scalar", [])))

    def __repr__(self) -> str:
        parts = [f"({c})*({p},{q})_T" for (p, q), c in self._terms.items()]
        if self._scalar:
            parts.append(f"({self._scalar})*1")
        return "TorusSkein(" + (" + ".join(parts) or "0") + ")"


def _basis_product(p: int, q: int, r: int, s: int) -> TorusSkein:
    d = det(p, q, r, s)
    return TorusSkein({(p + r, q + s): t_pow(d), (p - r, q - s): t_pow(-d)})


def ts_mul(a: TorusSkein, b: TorusSkein) -> TorusSkein:
    """Product-to-sum rule ``(p,q)*(r,s) = t^D (p+r,q+s) + t^-D (p-r,q-s)``, ``D = ps - qr``."""
    out = TorusSkein(scalar=a.scalar * b.scalar)
    if a.scalar:
        out = out + TorusSkein(b.terms).scale(a.scalar)
    if b.scalar:
        out = out + TorusSkein(a.terms).scale(b.scalar)
    for (p, q), c1 in a.terms.items():
        for (r, s), c2 in b.terms.items():
            out = out + _basis_product(p, q, r, s).scale(c1 * c2)
    return out


def ts_embed(a: TorusSkein) -> QTElement:
    """Inclusion into the quantum torus: ``(p,q)_T -> t^{-pq}(l^p m^q + l^-p m^-q)``."""
    d: dict[tuple[int, int], LaurentPoly] = {}
    if a.scalar:
        d[(0, 0)] = a.scalar

    def put(key, val):
        d[key] = d.get(key, ZERO) + val

    for (p, q), c in a.terms.items():
        w = c.shift(-p * q)
        put((p, q), w)
        put((-p, -q), w)
    return QTElement(d)


def ts_sum(items: Iterable[TorusSkein]) -> TorusSkein:
    total = TorusSkein()
    for x in items:
        total = total + x
    return total
