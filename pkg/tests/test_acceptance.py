"""Acceptance criteria, one test each, with exact equality and runtime bounds.

Each test prints a single ``[criterion N] PASS|FAIL`` line to the terminal.
Criteria 2, 7 and 8 fail on a faithful build; see the decisions ledger.
"""
import random
import time

import pytest

from kbskein import aideal as ai
from kbskein import bracket_oracle as bo
from kbskein import chebyshev as ch
from kbskein import jones
from kbskein import knot_module as km
from kbskein.errors import KBSkeinError
from kbskein.laurent import ONE, t_pow
from kbskein.quantum_torus import qt_is_polynomial
from kbskein.torus_skein import TorusSkein, ts_embed, ts_mul


@pytest.fixture
def report(capsys):
    def emit(number, title, failures, elapsed, limit):
        ok = not failures and elapsed < limit
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f}s, limit {limit}s)")
            for f in failures[:10]:
                print(f"    {f}")
        assert not failures, "; ".join(failures[:5])
        assert elapsed < limit, f"runtime {elapsed:.2f}s exceeds {limit}s"
    return emit


def _random_skein(rng):
    terms = {}
    for _ in range(rng.randint(1, 2)):
        key = (rng.randint(-5, 5), rng.randint(-5, 5))
        terms[key] = t_pow(rng.randint(-3, 3), rng.choice([1, -1, 2]))
    return TorusSkein(terms, rng.choice([0, 0, 1]))


def test_criterion_1_chebyshev(report):
    start = time.perf_counter()
    fails = []
    for n in range(-10, 31):
        if ch.cheb_S(n).mul_x() != ch.cheb_S(n + 1) + ch.cheb_S(n - 1):
            fails.append(f"S recurrence n={n}")
        if ch.cheb_T(n).mul_x() != ch.cheb_T(n + 1) + ch.cheb_T(n - 1):
            fails.append(f"T recurrence n={n}")
        if ch.cheb_T(n) != ch.cheb_S(n) - ch.cheb_S(n - 2):
            fails.append(f"T_n = S_n - S_n-2 n={n}")
    for n in range(31):
        if ch.cheb_T(-n) != ch.cheb_T(n) or ch.cheb_S(-n) != -ch.cheb_S(n - 2):
            fails.append(f"negative index n={n}")
    for m in range(21):
        lhs, rhs = ch.alternating_even_sum_identity(m)
        if lhs != rhs:
            fails.append(f"summation identity m={m}")
    for p in range(2, 21):
        lhs, rhs = ch.alternating_sum_quotient_identity(p)
        if lhs != rhs:
            fails.append(f"product-form quotient identity p={p}")
    for p in range(1, 21):
        a, b, c = ch.x_times_even_T_identity(p)
        if not a == b == c:
            fails.append(f"x T_2p identity p={p}")
    report(1, "Chebyshev identities", fails, time.perf_counter() - start, 5)


def test_criterion_2_product_to_sum(report):
    start = time.perf_counter()
    fails = []
    rng = random.Random(2)
    comm = assoc = 0
    for _ in range(100):
        a, b, c = (_random_skein(rng) for _ in range(3))
        comm += ts_mul(a, b) != ts_mul(b, a)
        assoc += ts_mul(ts_mul(a, b), c) != ts_mul(a, ts_mul(b, c))
    if comm:
        fails.append(f"commutativity fails on {comm}/100 triples, e.g. (1,0)*(0,1) = "
                     f"{ts_mul(TorusSkein.basis(1, 0), TorusSkein.basis(0, 1))} but (0,1)*(1,0) = "
                     f"{ts_mul(TorusSkein.basis(0, 1), TorusSkein.basis(1, 0))}")
    if assoc:
        fails.append(f"associativity fails on {assoc}/100 triples")
    hom = 0
    for _ in range(100):
        a, b = _random_skein(rng), _random_skein(rng)
        hom += ts_embed(ts_mul(a, b)) != ts_embed(a) * ts_embed(b)
    if hom:
        fails.append(f"embedding homomorphism fails on {hom}/100 pairs")
    report(2, "product-to-sum and embedding", fails, time.perf_counter() - start, 10)


def test_criterion_3_theorem_coherence(report):
    start = time.perf_counter()
    fails = []
    boundary = km.FreeXY({(0, 0): t_pow(6) + t_pow(2), (2, 0): t_pow(2, -1)})
    for p in range(1, 5):
        if km.skein_A_rec(0, 0, p) != boundary:
            fails.append(f"p={p}: A(0,0) = {km.skein_A_rec(0, 0, p)}")
        if km.km_reduce(km.skein_A_rec(2 * p + 1, 0, p), p) != km.km_reduce(boundary, p):
            fails.append(f"p={p}: A(2p+1,0) differs from the boundary value in K_t(M_p)")
        for i in range(1, p + 2):
            lhs = km.km_reduce(km.skein_A_rec(p + i, 0, p), p)
            rhs = km.km_reduce(km.skein_A_rec(p - i + 1, 0, p), p)
            if lhs != rhs:
                fails.append(f"p={p}, i={i}: {lhs - rhs}")
        for k in range(1, 2 * p + 1):
            for n in range(4):
                d = km.closed_form_discrepancy(k, n, p)
                if d:
                    # a precise report is acceptable; record it as information, not failure
                    print(f"A({k},{n}) p={p}: recurrence - closed form = {d}")
    report(3, "reduction relations coherence", fails, time.perf_counter() - start, 30)


def test_criterion_4_peripheral_images(report):
    start = time.perf_counter()
    fails = []
    for p in range(1, 5):
        for k in range(-4 * p - 4, 5):
            rhs = km.km_mul_x(km.pi_1k(k, p)).scale(t_pow(1)) - km.pi_1k(k - 1, p).scale(t_pow(2))
            if km.pi_1k(k + 1, p) != rhs:
                fails.append(f"p={p}: three-term relation at k={k}")
        if km.pi_closed_even(p) != km.pi_1k(-4 * p - 2, p):
            fails.append(f"p={p}: k=-4p-2 closed form")
        if km.pi_closed_odd(p) != km.pi_1k(-4 * p - 1, p):
            fails.append(f"p={p}: k=-4p-1 closed form")
    report(4, "closed form for pi((1,k)_T)", fails, time.perf_counter() - start, 10)


def test_criterion_5_peripheral_element_vanishes(report):
    start = time.perf_counter()
    fails = []
    for p in range(1, 6):
        img = km.pi_element(ai.peripheral_element(p), p)
        if img:
            fails.append(f"p={p}: pi = {img}")
    report(5, "peripheral element maps to 0", fails, time.perf_counter() - start, 5)


def test_criterion_6_aideal_polynomial(report):
    start = time.perf_counter()
    fails = []
    for p in range(1, 6):
        poly = ai.aideal_poly(p)
        if poly != ai.aideal_expanded_display(p):
            fails.append(f"p={p}: differs from the eight-term expansion")
        if poly != ai.aideal_factored_expand(p):
            fails.append(f"p={p}: differs from the factored form")
        if not qt_is_polynomial(poly):
            fails.append(f"p={p}: not in the quantum plane")
        if ai.degree2_coefficients(poly) != {0: ONE, 4: t_pow(-12, -1)}:
            fails.append(f"p={p}: gamma_2 = {ai.degree2_coefficients(poly)}")
        for n in range(51):
            val = ai.degree2_expression(poly, n)
            if val != ONE - t_pow(8 * n - 4) or not val:
                fails.append(f"p={p}, n={n}: degree-2 expression {val}")
    report(6, "A-ideal polynomial", fails, time.perf_counter() - start, 5)


def test_criterion_7_recursion_vs_oracle(report):
    start = time.perf_counter()
    fails = []
    for p, top in ((1, 3), (2, 2)):
        oracle = [bo.colored_bracket(p, n) for n in range(top + 1)]
        try:
            table = jones.kappa_table(p, top)
        except KBSkeinError as exc:
            fails.append(f"p={p}: {type(exc).__name__}: {exc}")
            continue
        for n in range(1, top + 1):
            if table[n] != oracle[n]:
                fails.append(f"p={p}, n={n}: recursion {table[n]} vs oracle {oracle[n]}")
    report(7, "five-term recursion equals TL oracle", fails, time.perf_counter() - start, 120)


def test_criterion_8_recursion_consistency(report):
    start = time.perf_counter()
    fails = []
    for p in range(1, 4):
        try:
            table = jones.kappa_table(p, 25)
        except KBSkeinError as exc:
            fails.append(f"p={p}: {type(exc).__name__}: {exc}")
            continue
        bad = [n for n, r in enumerate(table.residuals()) if r]
        if bad:
            fails.append(f"p={p}: nonzero residuals at {bad}")
    report(8, "five-term recursion solves exactly to N=25", fails, time.perf_counter() - start, 10)


def test_criterion_9_oracle_selfchecks(report):
    start = time.perf_counter()
    fails = []
    if bo.braid_bracket(bo.BraidWord(1, ())) != t_pow(2, -1) + t_pow(-2, -1):
        fails.append("unknot")
    if bo.braid_bracket(bo.BraidWord(2, (1,))) != t_pow(3, -1) * bo.DELTA:
        fails.append("kink factor")
    rng = random.Random(9)
    for _ in range(30):
        n = rng.randint(3, 5)
        w = bo.words_sample(n, rng.randint(0, 6), rng)
        i = rng.randint(1, n - 2)
        a = bo.BraidWord(n, w.letters + (i, i + 1, i))
        b = bo.BraidWord(n, w.letters + (i + 1, i, i + 1))
        if bo.braid_bracket(a) != bo.braid_bracket(b):
            fails.append(f"braid relation on {w}")
        if n >= 4:
            a = bo.BraidWord(n, w.letters + (1, 3))
            b = bo.BraidWord(n, w.letters + (3, 1))
            if bo.braid_bracket(a) != bo.braid_bracket(b):
                fails.append(f"far commutation on {w}")
        j = rng.randint(1, n - 1)
        if bo.braid_bracket(bo.BraidWord(n, w.letters + (j, -j))) != bo.braid_bracket(w):
            fails.append(f"Reidemeister II on {w}")
    for w in bo.corpus():
        if len(w) <= 14 and bo.braid_bracket(w) != bo.naive_bracket(w):
            fails.append(f"TL vs state sum on {w}")
    report(9, "oracle self-checks", fails, time.perf_counter() - start, 60)


# -- supplementary: the same checks for the peripheral three-term recursion --

def test_supplementary_peripheral_recursion_vs_oracle(report):
    start = time.perf_counter()
    fails = []
    for p, top in ((1, 3), (2, 2)):
        table = jones.kappa_table(p, top, recursion="peripheral")
        for n in range(top + 1):
            if table[n] != bo.colored_bracket(p, n):
                fails.append(f"p={p}, n={n}")
    report("7*", "peripheral recursion equals TL oracle", fails, time.perf_counter() - start, 120)


def test_supplementary_peripheral_recursion_consistency(report):
    start = time.perf_counter()
    fails = []
    for p in range(1, 4):
        table = jones.kappa_table(p, 25, recursion="peripheral")
        bad = [n for n, r in enumerate(table.residuals()) if r]
        if bad:
            fails.append(f"p={p}: nonzero residuals at {bad}")
    report("8*", "peripheral recursion solves exactly to N=25", fails, time.perf_counter() - start, 10)
