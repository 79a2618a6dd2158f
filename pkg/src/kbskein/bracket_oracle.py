"""Kauffman bracket of braid closures, evaluated from first principles.

Two independent evaluators:

* :func:`braid_bracket` pushes a vector of Temperley-Lieb diagrams through
  the braid, one crossing at a time, then closes up;
* :func:`naive_bracket` sums over all ``2^c`` smoothings and counts loops
  with a union-find on strand segments.

Conventions: ``sigma_i -> t * id + t^-1 * e_i``, ``sigma_i^-1 -> t^-1 * id + t * e_i``,
loop value ``-t^2 - t^-2``, empty link ``1``.  A positive kink contributes ``-t^3``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .chebyshev import cheb_S
from .errors import SizeLimit
from .knot_module import _as_p
from .laurent import ONE, ZERO, LaurentPoly, t_pow

DELTA = t_pow(2, -1) + t_pow(-2, -1)

MAX_TL_STRANDS = 6
MAX_NAIVE_CROSSINGS = 14

# Chirality of sigma_1^{±(2p+1)} matching the recursion, fixed once at p = 1, n = 1
# by align_chirality() and frozen here.
CHIRALITY = -1

Matching = tuple[int, ...]


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 0:
            raise ValueError("strands must be >= 0")
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        for x in self.letters:
            if x == 0 or abs(x) > self.strands - 1:
                raise ValueError(f"generator {x} out of range for {self.strands} strands")

    @property
    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@lru_cache(maxsize=None)
def _delta_pow(k: int) -> LaurentPoly:
    return DELTA ** k


# -- Temperley-Lieb diagrams ---------------------------------------------------
#
# A diagram on n strands is a perfect matching of 2n boundary points: top
# points 0..n-1, bottom points n..2n-1, both read left to right.

def identity_matching(n: int) -> Matching:
    return tuple([n + i for i in range(n)] + list(range(n)))


def cupcap_matching(n: int, i: int) -> Matching:
    """``e_i`` joining strands ``i`` and ``i+1`` (1-based) at top and bottom."""
    m = list(identity_matching(n))
    a, b = i - 1, i
    m[a], m[b] = b, a
    m[n + a], m[n + b] = n + b, n + a
    return tuple(m)


def compose(upper: Matching, lower: Matching, n: int) -> tuple[Matching, int]:
    """Stack ``upper`` on ``lower``; return the resulting matching and closed loops."""
    res = [-1] * (2 * n)
    seen = [False] * n
    for start in range(2 * n):
        if res[start] != -1:
            continue
        side, pt = (0, start) if start < n else (1, start)
        while True:
            if side == 0:
                q = upper[pt]
                if q < n:
                    end = q
                    break
                seen[q - n] = True
                side, pt = 1, q - n
            else:
                q = lower[pt]
                if q >= n:
                    end = q
                    break
                seen[q] = True
                side, pt = 0, n + q
        res[start], res[end] = end, start
    loops = 0
    for s in range(n):
        if seen[s]:
            continue
        loops += 1
        cur = s
        while True:
            seen[cur] = True
            q = lower[cur]          # stays in the middle row
            seen[q] = True
            cur = upper[n + q] - n
            if cur == s:
                break
    return tuple(res), loops


def is_planar(m: Matching, n: int) -> bool:
    # unfold boundary points around a circle: top left->right, bottom right->left
    pos = list(range(n)) + [2 * n - 1 - j for j in range(n)]
    chords = [(pos[a], pos[b]) for a, b in enumerate(m) if a < b]
    chords = [(min(a, b), max(a, b)) for a, b in chords]
    for a, b in chords:
        for c, d in chords:
            if a < c < b < d:
                return False
    return True


def closure_loops(m: Matching, n: int) -> int:
    """Loops in the trace closure (top ``i`` joined to bottom ``i``)."""
    seen = [False] * (2 * n)
    loops = 0
    for s in range(2 * n):
        if seen[s]:
            continue
        loops += 1
        cur = s
        while not seen[cur]:
            seen[cur] = True
            other = m[cur]
            seen[other] = True
            cur = other + n if other < n else other - n
    return loops


@lru_cache(maxsize=None)
def _times_generator(m: Matching, n: int, i: int) -> tuple[Matching, int]:
    return compose(m, cupcap_matching(n, i), n)


class TLElement:
    """Linear combination of planar matchings on ``strands`` strands."""

    __slots__ = ("strands", "_terms")

    def __init__(self, strands: int, terms: dict[Matching, LaurentPoly] | None = None):
        self.strands = strands
        self._terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def identity(cls, strands: int) -> "TLElement":
        return cls(strands, {identity_matching(strands): ONE})

    @property
    def terms(self) -> dict[Matching, LaurentPoly]:
        return dict(self._terms)

    def times_crossing(self, letter: int) -> "TLElement":
        """Right-multiply by ``sigma_{|letter|}^{sign(letter)}`` resolved in TL."""
        n = self.strands
        i = abs(letter)
        keep, cup = (1, -1) if letter > 0 else (-1, 1)
        out: dict[Matching, LaurentPoly] = {}
        for m, c in self._terms.items():
            v = out.get(m, ZERO) + c.shift(keep)
            out[m] = v
            m2, loops = _times_generator(m, n, i)
            w = c.shift(cup)
            if loops:
                w = w * _delta_pow(loops)
            out[m2] = out.get(m2, ZERO) + w
        return TLElement(n, out)

    def trace(self) -> LaurentPoly:
        total = ZERO
        for m, c in self._terms.items():
            total = total + c * _delta_pow(closure_loops(m, self.strands))
        return total


def braid_bracket(w: BraidWord, max_strands: int | None = None) -> LaurentPoly:
    """Bracket of the closure of ``w`` with blackboard framing."""
    limit = MAX_TL_STRANDS if max_strands is None else max_strands
    if w.strands > limit:
        raise SizeLimit(f"{w.strands} strands exceeds the TL limit {limit}")
    if w.strands == 0:
        return ONE
    v = TLElement.identity(w.strands)
    for x in w.letters:
        v = v.times_crossing(x)
    return v.trace()


def naive_bracket(w: BraidWord, max_crossings: int | None = None) -> LaurentPoly:
    """Bracket of the closure by summing over every smoothing of every crossing."""
    limit = MAX_NAIVE_CROSSINGS if max_crossings is None else max_crossings
    c = len(w.letters)
    if c > limit:
        raise SizeLimit(f"{c} crossings exceeds the state-sum limit {limit}")
    n = w.strands
    if n == 0:
        return ONE
    levels = c + 1
    total = ZERO
    for state in range(1 << c):
        parent = list(range(levels * n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        def union(a, b):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb

        exp = 0
        for r, x in enumerate(w.letters):
            i = abs(x) - 1
            cup = (state >> r) & 1
            for j in range(n):
                if cup and j in (i, i + 1):
                    continue
                union(r * n + j, (r + 1) * n + j)
            if cup:
                union(r * n + i, r * n + i + 1)
                union((r + 1) * n + i, (r + 1) * n + i + 1)
            # identity smoothing weighs t for sigma, t^-1 for sigma^-1
            exp += (-1 if cup else 1) * (1 if x > 0 else -1)
        for j in range(n):
            union(c * n + j, j)
        loops = len({find(a) for a in range(levels * n)})
        total = total + t_pow(exp) * _delta_pow(loops)
    return total


# -- cabling and colors --------------------------------------------------------

def _block(i: int, j: int) -> list[int]:
    # j-cable of sigma_i: every strand of block i crosses every strand of block i+1
    o = (i - 1) * j
    return [o + r + s for r in range(j) for s in range(j, 0, -1)]


def cable(w: BraidWord, j: int) -> BraidWord:
    """The ``j``-parallel blackboard cable of ``w``."""
    if j < 0:
        raise ValueError("cable multiplicity must be >= 0")
    if j == 0:
        return BraidWord(0, ())
    letters: list[int] = []
    for x in w.letters:
        blk = _block(abs(x), j)
        letters.extend(blk if x > 0 else [-y for y in reversed(blk)])
    return BraidWord(w.strands * j, tuple(letters))


def torus_knot_word(p: int, chirality: int = CHIRALITY) -> BraidWord:
    return BraidWord(2, (chirality,) * (2 * p + 1))


def colored_bracket_of(w: BraidWord, n: int, max_strands: int | None = None) -> LaurentPoly:
    """0-framed bracket of the closure of ``w`` (a knot) colored by ``S_n``."""
    if n < 0:
        raise ValueError("color must be >= 0")
    limit = MAX_TL_STRANDS if max_strands is None else max_strands
    top = cheb_S(n).degree()
    if w.strands * top > limit:
        raise SizeLimit(f"coloring {n} needs {w.strands * top} strands; limit {limit}")
    total = ZERO
    for j, c in cheb_S(n).coeffs.items():
        total = total + c * braid_bracket(cable(w, j), max_strands=limit)
    # undo the blackboard framing: twist eigenvalue (-1)^n t^{n^2+2n} per unit
    wr = w.writhe
    sign = -1 if (n * wr) % 2 else 1
    return total * t_pow(-(n * n + 2 * n) * wr, sign)


def colored_bracket(p, n: int, chirality: int = CHIRALITY, max_strands: int | None = None) -> LaurentPoly:
    """0-framed ``n``-th colored Kauffman bracket of the (2, 2p+1)-torus knot."""
    p = _as_p(p)
    return colored_bracket_of(torus_knot_word(p, chirality), n, max_strands)


def align_chirality(reference: LaurentPoly) -> int:
    """The crossing sign whose ``p = 1, n = 1`` bracket equals ``reference``."""
    hits = [c for c in (1, -1) if colored_bracket(1, 1, chirality=c) == reference]
    if len(hits) != 1:
        raise ValueError(f"no unique chirality reproduces {reference}")
    return hits[0]


def words_sample(strands: int, length: int, rng) -> BraidWord:
    letters = [rng.choice([1, -1]) * rng.randint(1, strands - 1) for _ in range(length)]
    return BraidWord(strands, tuple(letters))


def corpus() -> list[BraidWord]:
    """Small fixed set of braid words used by the oracle self-checks."""
    words = [
        BraidWord(1, ()),
        BraidWord(2, (1,)),
        BraidWord(2, (-1,)),
        BraidWord(2, (1, 1)),
        BraidWord(2, (1, 1, 1)),
        BraidWord(2, (-1, -1, -1)),
        BraidWord(2, (1,) * 5),
        BraidWord(2, (1,) * 7),
        BraidWord(3, (1, -2, 1, -2)),
        BraidWord(3, (1, 2, 1, 2)),
        BraidWord(3, (1, 1, 1, 2, -1, 2)),
        BraidWord(4, (1, 2, 3, -1, -2, 3)),
        BraidWord(4, (1, -2, 3, 1, -2, 3, 2)),
        BraidWord(5, (1, 2, 3, 4, -1, -2)),
    ]
    words.append(cable(BraidWord(2, (1,)), 2))
    words.append(cable(BraidWord(2, (1, 1, 1)), 2))
    words.append(cable(BraidWord(2, (-1, -1, -1)), 2))
    words.append(cable(BraidWord(3, (1, -2)), 2))
    return words


def parse_braid(text: str, strands: int | None = None) -> BraidWord:
    letters = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    return BraidWord(strands, letters)

