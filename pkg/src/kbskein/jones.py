"""Colored Kauffman brackets of the (2, 2p+1)-torus knot from recursions.

Two recursions are available:

``"printed"``
    the five-term recursion with coefficients :func:`recursion_coeffs`,
    transcribed term by term, seeded with ``k_{-3} = -k_1, k_{-2} = -1,
    k_{-1} = 0, k_0 = 1``.  With these coefficients ``k_1`` is not a Laurent
    polynomial, so solving raises :class:`NonExactDivision`.

``"peripheral"``
    the three-term relation obtained by letting the peripheral element act on
    the colored core of the knot's tubular neighbourhood (orthogonality): the
    complement kills it, so ``sum_j d_j(n) k_j = 0`` for the coefficients
    ``d_j(n)`` of that action on ``S_n``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .aideal import peripheral_element
from .errors import NonExactDivision, UnsupportedCurve, ZeroLeadingCoefficient
from .knot_module import TorusKnotParam, _as_p
from .laurent import ONE, ZERO, GaussLaurent, LaurentPoly, t_pow
from .torus_skein import TorusSkein

RECURSIONS = ("printed", "peripheral")


def recursion_coeffs(n: int, p) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly, LaurentPoly]:
    """Coefficients of ``k_{n+1}, k_n, k_{n-1}, k_{n-2}, k_{n-3}`` in the printed five-term recursion."""
    p = _as_p(p)
    a = 4 * n * p

    def mono(*exps_and_signs):
        total = ZERO
        for sign, e in exps_and_signs:
            total = total + t_pow(e, sign)
        return total

    c1 = mono((-1, -a - 6 * n - 6 * p - 9), (1, -a + 2 * n - 6 * p - 5))
    c2 = mono((-1, a + 6 * n + 6 * p + 1), (-1, -a - 6 * n - 2 * p - 11),
              (1, a - 2 * n + 6 * p - 3), (1, -a + 2 * n - 2 * p + 1))
    c3 = mono((1, -a - 6 * n + 2 * p + 3), (-1, a + 6 * n + 6 * p + 9),
              (-1, -a + 2 * p + 2 * n - 9), (1, a - 2 * n + 2 * p - 11))
    c4 = mono((1, a + 6 * n - 2 * p - 11), (1, -a - 6 * n + 6 * p + 1),
              (-1, a - 2 * n - 2 * p + 1), (-1, -a + 2 * n + 6 * p - 3))
    c5 = mono((1, a + 6 * n - 2 * p - 3), (-1, a - 2 * n - 6 * p - 7))
    return c1, c2, c3, c4, c5


# -- solid-torus action ------------------------------------------------------

def twist_eigenvalue(n: int) -> LaurentPoly:
    """Framing change of an ``S_n``-colored curve: ``(-1)^n t^{n^2+2n}``."""
    return t_pow(n * n + 2 * n, -1 if n % 2 else 1)


def meridian_eigenvalue(n: int) -> LaurentPoly:
    """A meridian around an ``S_n``-colored strand: ``-t^{2n+2} - t^{-2n-2}``."""
    return t_pow(2 * n + 2, -1) + t_pow(-2 * n - 2, -1)


def _ratio_pow(c: int, n: int, k: int) -> LaurentPoly:
    # (theta_c / theta_n)^k is a signed monomial
    e = (c * c + 2 * c) - (n * n + 2 * n)
    sign = -1 if ((c - n) * k) % 2 else 1
    return t_pow(e * k, sign)


def solid_torus_action(s: TorusSkein, n: int) -> dict[int, LaurentPoly]:
    """Apply a boundary skein to ``S_n`` of the core of the knot's neighbourhood.

    ``(0, q)_T`` is ``T_q`` of the meridian, a scalar on ``S_n``.  ``(1, k)_T``
    is the core with framing ``k``; fusing it with ``S_n`` gives the channels
    ``S_{n+1}`` and ``S_{n-1}``, each twisted ``k`` times relative to ``S_n``.
    Returns ``{index: coefficient}`` (``S_{-1} = 0`` is dropped).
    """
    out: dict[int, LaurentPoly] = {}

    def put(j, c):
        if j < 0 or not c:
            return
        v = out.get(j, ZERO) + c
        if v:
            out[j] = v
        else:
            out.pop(j, None)

    put(n, s.scalar)
    for (a, b), c in s.terms.items():
        if a == 0:
            # T_b(-(u + 1/u)) = (-1)^b (u^b + u^-b), u = t^{2n+2}
            e = b * (2 * n + 2)
            put(n, (t_pow(e) + t_pow(-e)) * c * (-1) ** (b % 2))
        elif a == 1:
            for ch in (n + 1, n - 1):
                put(ch, _ratio_pow(ch, n, b) * c)
        else:
            raise UnsupportedCurve(f"solid-torus action of ({a},{b})_T is not implemented")
    return out


def peripheral_relation_coeffs(n: int, p) -> tuple[LaurentPoly, LaurentPoly, LaurentPoly]:
    """Coefficients of ``k_{n+1}, k_n, k_{n-1}`` annihilated by the peripheral element."""
    act = solid_torus_action(peripheral_element(p), n)
    return act.get(n + 1, ZERO), act.get(n, ZERO), act.get(n - 1, ZERO)


# -- tables ------------------------------------------------------------------

def kappa_at(values: Sequence[LaurentPoly], j: int) -> LaurentPoly:
    """``k_j`` for any ``j`` using ``k_{-1} = 0`` and ``k_{-j} = -k_{j-2}``."""
    if j >= 0:
        return values[j]
    if j == -1:
        return ZERO
    return -values[-j - 2]


@dataclass(frozen=True)
class KappaTable:
    p: TorusKnotParam
    values: tuple[LaurentPoly, ...]
    recursion: str = "printed"
    meta: dict = field(default_factory=dict, compare=False)

    def __getitem__(self, n: int) -> LaurentPoly:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def residuals(self) -> list[LaurentPoly]:
        fn = recursion_residual if self.recursion == "printed" else peripheral_residual
        return [fn(self.p, n, self.values) for n in range(len(self.values) - 1)]

    def to_json(self) -> list:
        return [v.to_json() for v in self.values]


def recursion_residual(p, n: int, values: Sequence[LaurentPoly]) -> LaurentPoly:
    """``c1 k_{n+1} + c2 k_n + c3 k_{n-1} + c4 k_{n-2} + c5 k_{n-3}``."""
    cs = recursion_coeffs(n, p)
    return sum((c * kappa_at(values, n + 1 - i) for i, c in enumerate(cs)), ZERO)


def peripheral_residual(p, n: int, values: Sequence[LaurentPoly]) -> LaurentPoly:
    up, mid, dn = peripheral_relation_coeffs(n, p)
    return up * kappa_at(values, n + 1) + mid * kappa_at(values, n) + dn * kappa_at(values, n - 1)


def _solve(num: LaurentPoly, den: LaurentPoly, what: str) -> LaurentPoly:
    if not den:
        raise ZeroLeadingCoefficient(f"{what}: leading coefficient vanishes")
    try:
        return num.exact_div(den)
    except NonExactDivision as exc:
        raise NonExactDivision(f"{what}: {exc}") from None


def kappa_table(p, N: int, recursion: str = "printed") -> KappaTable:
    """``k_0 .. k_N`` solved forward with exact division."""
    p = _as_p(p)
    if N < 0:
        raise ValueError("N must be >= 0")
    if recursion not in RECURSIONS:
        raise ValueError(f"unknown recursion {recursion!r}; choose from {RECURSIONS}")
    values: list[LaurentPoly] = [ONE]
    for n in range(N):
        if recursion == "printed":
            c1, c2, c3, c4, c5 = recursion_coeffs(n, p)
            if n == 0:
                # k_{-3} = -k_1 folds the c5 term onto the unknown
                num = c4 - c2
                values.append(_solve(num, c1 - c5, f"p={p}, k_1"))
                continue
            rest = (c2 * kappa_at(values, n) + c3 * kappa_at(values, n - 1)
                    + c4 * kappa_at(values, n - 2) + c5 * kappa_at(values, n - 3))
            values.append(_solve(-rest, c1, f"p={p}, k_{n + 1}"))
        else:
            up, mid, dn = peripheral_relation_coeffs(n, p)
            rest = mid * values[n] + dn * kappa_at(values, n - 1)
            values.append(_solve(-rest, up, f"p={p}, k_{n + 1}"))
    return KappaTable(TorusKnotParam(p), tuple(values), recursion,
                      {"framing": 0, "recursion": recursion})


def to_colored_jones(table: KappaTable | Sequence[LaurentPoly]) -> list[GaussLaurent]:
    values = table.values if isinstance(table, KappaTable) else table
    return [v.subst_it() for v in values]


def diagnose_printed_recursion(p) -> dict:
    """Report why the printed recursion cannot start: ``(c4 - c2) / (c1 - c5)`` at ``n = 0``."""
    c1, c2, c3, c4, c5 = recursion_coeffs(0, p)
    num, den = c4 - c2, c1 - c5
    try:
        k1 = num.exact_div(den)
        return {"exact": True, "kappa_1": k1}
    except NonExactDivision:
        return {"exact": False, "numerator": num, "denominator": den}
