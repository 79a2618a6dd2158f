"""Named verification suites; each returns a :class:`VerifyReport`."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import aideal as ai
from . import bracket_oracle as bo
from . import chebyshev as ch
from . import jones
from . import knot_module as km
from .errors import KBSkeinError, UnknownSuite
from .laurent import t_pow
from .torus_skein import TorusSkein, ts_embed, ts_mul


@dataclass
class Check:
    description: str
    passed: bool
    details: str = ""

    def to_json(self) -> dict:
        return {"description": self.description, "passed": self.passed, "details": self.details}


@dataclass
class VerifyReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, description: str, passed: bool, details: str = "") -> None:
        self.checks.append(Check(description, bool(passed), details))

    def extend(self, other: "VerifyReport") -> None:
        for c in other.checks:
            self.checks.append(Check(f"[{other.suite}] {c.description}", c.passed, c.details))

    def to_json(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}

    def render(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.description}")
            if c.details and not c.passed:
                lines.extend("      " + d for d in c.details.splitlines())
        return "\n".join(lines)


def _random_skein(rng: random.Random, bound: int = 5) -> TorusSkein:
    terms = {}
    for _ in range(rng.randint(1, 2)):
        key = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        terms[key] = t_pow(rng.randint(-3, 3), rng.choice([1, -1, 2]))
    return TorusSkein(terms, rng.choice([0, 0, 1]))


# -- suites ------------------------------------------------------------------

def suite_chebyshev(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("chebyshev-identities")
    bad = [n for n in range(-10, 31)
           if ch.cheb_S(n).mul_x() != ch.cheb_S(n + 1) + ch.cheb_S(n - 1)
           or ch.cheb_T(n).mul_x() != ch.cheb_T(n + 1) + ch.cheb_T(n - 1)]
    r.add("x f_n = f_{n+1} + f_{n-1} for S and T, -10 <= n <= 30", not bad, f"failing n: {bad}")
    bad = [n for n in range(-10, 31) if ch.cheb_T(n) != ch.cheb_S(n) - ch.cheb_S(n - 2)]
    r.add("T_n = S_n - S_{n-2}, -10 <= n <= 30", not bad, f"failing n: {bad}")
    bad = [n for n in range(0, 31) if ch.cheb_T(-n) != ch.cheb_T(n) or ch.cheb_S(-n) != -ch.cheb_S(n - 2)]
    r.add("T_{-n} = T_n and S_{-n} = -S_{n-2}, 0 <= n <= 30", not bad, f"failing n: {bad}")
    bad = [m for m in range(0, 21) if (lambda s: s[0] != s[1])(ch.alternating_even_sum_identity(m))]
    r.add("alternating even-index sum identity, 0 <= m <= 20", not bad, f"failing m: {bad}")
    bad = [p for p in range(2, 21) if (lambda s: s[0] != s[1])(ch.alternating_sum_quotient_identity(p))]
    r.add("S_1 * sum (-1)^k S_{2p-2k-2} = -S_{2p-3}, 2 <= p <= 20", not bad, f"failing p: {bad}")
    bad = [p for p in range(1, 21) if len(set(ch.x_times_even_T_identity(p))) != 1]
    r.add("x T_{2p} = T_{2p+1} + T_{2p-1} = S_{2p+1} - S_{2p-3}, 1 <= p <= 20", not bad, f"failing p: {bad}")
    rng = random.Random(seed)
    bad = 0
    for _ in range(50):
        poly = ch.UniPoly({k: t_pow(rng.randint(-4, 4), rng.randint(-3, 3))
                           for k in rng.sample(range(31), rng.randint(1, 6))})
        if ch.from_s_basis(ch.s_basis_expand(poly)) != poly:
            bad += 1
    r.add("power basis <-> S basis round trip on 50 random polynomials of degree <= 30", not bad)
    return r


def suite_product_to_sum(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("product-to-sum")
    rng = random.Random(seed)
    comm = assoc = 0
    for _ in range(100):
        a, b, c = (_random_skein(rng) for _ in range(3))
        comm += ts_mul(a, b) != ts_mul(b, a)
        assoc += ts_mul(ts_mul(a, b), c) != ts_mul(a, ts_mul(b, c))
    r.add("commutativity on 100 random triples, |p|,|q| <= 5", not comm, f"{comm} failures")
    r.add("associativity on 100 random triples, |p|,|q| <= 5", not assoc, f"{assoc} failures")
    rng = random.Random(seed)
    bad = 0
    for _ in range(100):
        a, b = _random_skein(rng), _random_skein(rng)
        bad += ts_mul(b, a) != ts_mul(a.invert_t(), b.invert_t()).invert_t()
    r.add("b*a equals a*b with the structure constants t -> t^-1, 100 random pairs", not bad, f"{bad} failures")
    bad = [k for k in range(-5, 6)
           if ts_mul(TorusSkein.basis(0, 1), TorusSkein.basis(1, k))
           != TorusSkein({(1, k + 1): t_pow(-1), (1, k - 1): t_pow(1)})]
    r.add("(0,1)*(1,k) = t^-1 (1,k+1) + t (1,k-1), -5 <= k <= 5", not bad, f"failing k: {bad}")
    gen = TorusSkein.basis(1, 0)
    bad = []
    for n in range(0, 13):
        acc = TorusSkein()
        power = TorusSkein.const(1)
        for j, c in ch.cheb_T(n).coeffs.items():
            while j > _deg(power):
                power = ts_mul(power, gen)
            acc = acc + power.scale(c)
        power = None
        if acc != TorusSkein.basis(n, 0):
            bad.append(n)
    r.add("T_n applied to (1,0)_T gives (n,0)_T, 0 <= n <= 12", not bad, f"failing n: {bad}")
    return r


def _deg(power: TorusSkein) -> int:
    # degree in (1,0)_T of a power built by repeated multiplication
    return max((p for p, _ in power.terms), default=0)


def suite_embedding(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("embedding")
    rng = random.Random(seed + 1)
    bad = 0
    for _ in range(100):
        a, b = _random_skein(rng), _random_skein(rng)
        bad += ts_embed(ts_mul(a, b)) != ts_embed(a) * ts_embed(b)
    r.add("embed(a*b) = embed(a) embed(b) on 100 random pairs", not bad, f"{bad} failures")
    return r


def suite_thm31(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("thm31")
    for p in p_range:
        bad = [i for i in range(1, p + 2)
               if km.km_reduce(km.skein_A_rec(p + i, 0, p), p) != km.km_reduce(km.skein_A_rec(p - i + 1, 0, p), p)]
        r.add(f"p={p}: A(p+i,0) = A(p-i+1,0) in K_t(M_p), 1 <= i <= p+1", not bad, f"failing i: {bad}")
        bad = [i for i in (-1, 0)
               if (lambda s: km.km_reduce(s[0], p) != km.km_reduce(s[1], p))(km.reduction_relation_sides(i, p))]
        r.add(f"p={p}: reduction relation at i = -1, 0 is an identity", not bad, f"failing i: {bad}")
        a00 = km.skein_A_rec(0, 0, p)
        expect = km.FreeXY({(0, 0): t_pow(6) + t_pow(2), (2, 0): t_pow(2, -1)})
        r.add(f"p={p}: A(0,0) = t^6 + t^2 - t^2 x^2", a00 == expect, repr(a00))
        diffs = []
        for k in range(1, 2 * p + 1):
            for n in range(0, 4):
                d = km.closed_form_discrepancy(k, n, p)
                if d:
                    diffs.append(f"A({k},{n}): recurrence - closed form = {d!r}")
        r.add(f"p={p}: closed form for A(k,n) matches the recurrence, 1 <= k <= 2p, 0 <= n <= 3",
              not diffs, "\n".join(diffs))
        f = km.FreeXY({(1, 2 * p + 3): 1, (2, 1): t_pow(3)})
        once = km.km_reduce(f, p)
        r.add(f"p={p}: km_reduce is idempotent on reduced elements", km.km_reduce(once.to_freexy(), p) == once)
    return r


def suite_prop44(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("prop44")
    for p in p_range:
        bad = [k for k in range(-4 * p - 4, 5)
               if km.pi_1k(k + 1, p) != km.km_mul_x(km.pi_1k(k, p)).scale(t_pow(1)) - km.pi_1k(k - 1, p).scale(t_pow(2))]
        r.add(f"p={p}: pi(1,k+1) = t x pi(1,k) - t^2 pi(1,k-1), {-4 * p - 4} <= k <= 4", not bad, f"failing k: {bad}")
        r.add(f"p={p}: closed form at k = -4p-2 matches pi(1,-4p-2)", km.pi_closed_even(p) == km.pi_1k(-4 * p - 2, p))
        r.add(f"p={p}: closed form at k = -4p-1 matches pi(1,-4p-1)", km.pi_closed_odd(p) == km.pi_1k(-4 * p - 1, p))
    return r


def suite_lemma51(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("lemma51")
    for p in p_range:
        img = km.pi_element(ai.peripheral_element(p), p)
        r.add(f"p={p}: pi(peripheral element) = 0", not img, repr(img))
    return r


def suite_prop52(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("prop52")
    for p in p_range:
        poly = ai.aideal_poly(p)
        r.add(f"p={p}: embedded peripheral element equals the eight-term display",
              ai.embedded_peripheral(p) == ai.embedded_peripheral_display(p))
        r.add(f"p={p}: contracted element equals the eight-term expansion", poly == ai.aideal_expanded_display(p),
              repr(poly))
        r.add(f"p={p}: contracted element equals the product of the two factors",
              poly == ai.aideal_factored_expand(p))
        r.add(f"p={p}: contracted element lies in C_t[l,m]", ai.qt_is_polynomial(poly))
        g = ai.degree2_coefficients(poly)
        r.add(f"p={p}: gamma_(2,0) = 1, gamma_(2,4) = -t^-12, no other l^2 terms",
              g == {0: t_pow(0), 4: t_pow(-12, -1)}, repr(g))
        bad = [n for n in range(51) if ai.degree2_expression(poly, n) != t_pow(0) - t_pow(8 * n - 4)]
        r.add(f"p={p}: degree-2 expression equals 1 - t^(8n-4), 0 <= n <= 50", not bad, f"failing n: {bad}")
        r.add(f"p={p}: degree-2 expression nonzero for 0 <= n <= 50", ai.check_degree2_condition(p, 50))
    return r


ORACLE_COLORS = {1: 3, 2: 2}


def suite_recursion_vs_oracle(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("recursion-vs-oracle")
    for p in p_range:
        top = ORACLE_COLORS.get(p, 2)
        oracle = [bo.colored_bracket(p, n) for n in range(top + 1)]
        for rec in jones.RECURSIONS:
            try:
                tb = jones.kappa_table(p, top, recursion=rec)
            except KBSkeinError as exc:
                r.add(f"p={p}: {rec} recursion k_1..k_{top} equal the TL oracle", False,
                      f"{type(exc).__name__}: {exc}")
                continue
            bad = [n for n in range(1, top + 1) if tb[n] != oracle[n]]
            r.add(f"p={p}: {rec} recursion k_1..k_{top} equal the TL oracle", not bad,
                  "\n".join(f"n={n}: recursion {tb[n]} vs oracle {oracle[n]}" for n in bad))
        for rec in jones.RECURSIONS:
            try:
                tb = jones.kappa_table(p, 25, recursion=rec)
            except KBSkeinError as exc:
                r.add(f"p={p}: {rec} recursion solves exactly to N=25 with zero residuals", False,
                      f"{type(exc).__name__}: {exc}")
                continue
            bad = [n for n, res in enumerate(tb.residuals()) if res]
            r.add(f"p={p}: {rec} recursion solves exactly to N=25 with zero residuals", not bad, f"nonzero at {bad}")
    return r


def suite_oracle_selfcheck(p_range: Iterable[int], seed: int) -> VerifyReport:
    r = VerifyReport("oracle-selfcheck")
    unknot = bo.braid_bracket(bo.BraidWord(1, ()))
    r.add("unknot = -t^2 - t^-2", unknot == bo.DELTA, str(unknot))
    kink = bo.braid_bracket(bo.BraidWord(2, (1,)))
    r.add("one positive kink multiplies by -t^3", kink == bo.DELTA * t_pow(3, -1), str(kink))
    rng = random.Random(seed + 2)
    bad_markov = bad_braid = bad_r2 = 0
    for _ in range(20):
        n = rng.randint(1, 4)
        w = bo.words_sample(n, rng.randint(0, 6), rng) if n > 1 else bo.BraidWord(1, ())
        base = bo.braid_bracket(w)
        for sgn in (1, -1):
            stab = bo.BraidWord(n + 1, w.letters + (sgn * n,))
            bad_markov += bo.braid_bracket(stab) != base * (t_pow(3 * sgn, -1))
        if n > 1:
            i = rng.randint(1, n - 1)
            r2 = bo.BraidWord(n, w.letters + (i, -i))
            bad_r2 += bo.braid_bracket(r2) != base
    for _ in range(20):
        n = rng.randint(3, 5)
        w = bo.words_sample(n, rng.randint(0, 5), rng)
        i = rng.randint(1, n - 2)
        left = bo.BraidWord(n, w.letters + (i, i + 1, i) + w.letters)
        right = bo.BraidWord(n, w.letters + (i + 1, i, i + 1) + w.letters)
        bad_braid += bo.braid_bracket(left) != bo.braid_bracket(right)
        if n >= 4:
            j = i + 2 if i + 2 <= n - 1 else i - 2
            if j >= 1:
                a = bo.BraidWord(n, w.letters + (i, j))
                b = bo.BraidWord(n, w.letters + (j, i))
                bad_braid += bo.braid_bracket(a) != bo.braid_bracket(b)
    r.add("stabilization w -> w sigma_n^{±1} multiplies by -t^{±3} on 20 sampled words", not bad_markov,
          f"{bad_markov} failures")
    r.add("braid relations leave the bracket unchanged on sampled words", not bad_braid, f"{bad_braid} failures")
    r.add("sigma_i sigma_i^-1 insertion leaves the bracket unchanged", not bad_r2, f"{bad_r2} failures")
    bad = [w for w in bo.corpus() if len(w) <= bo.MAX_NAIVE_CROSSINGS and bo.braid_bracket(w) != bo.naive_bracket(w)]
    count = sum(1 for w in bo.corpus() if len(w) <= bo.MAX_NAIVE_CROSSINGS)
    r.add(f"TL evaluation equals the 2^c state sum on {count} corpus words with c <= 14", not bad,
          "\n".join(repr(w) for w in bad))
    return r


SUITES: dict[str, Callable[[Iterable[int], int], VerifyReport]] = {
    "chebyshev-identities": suite_chebyshev,
    "product-to-sum": suite_product_to_sum,
    "embedding": suite_embedding,
    "thm31": suite_thm31,
    "prop44": suite_prop44,
    "lemma51": suite_lemma51,
    "prop52": suite_prop52,
    "recursion-vs-oracle": suite_recursion_vs_oracle,
    "oracle-selfcheck": suite_oracle_selfcheck,
}


def run_verify(suite: str, p_range: Iterable[int] = range(1, 4), seed: int = 0) -> VerifyReport:
    p_range = list(p_range)
    if any(p < 1 for p in p_range):
        raise ValueError("p_range must contain integers >= 1")
    if suite == "all":
        report = VerifyReport("all")
        for name, fn in SUITES.items():
            report.extend(fn(p_range, seed))
        return report
    if suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[suite](p_range, seed)
