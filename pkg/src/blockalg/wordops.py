"""Word-level operations: shuffle, primitivity, the linearized Ihara
action by recursion, weight-1 deconcatenation, and the formal coaction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import blocks
from .blocks import framed_block_degree, validate_word
from .cpoly import CPoly
from .ncpoly import NCPoly, commutator, cross_coshuffle


# -- shuffle algebra ---------------------------------------------------------


@lru_cache(maxsize=None)
def _shuffle_words(u: str, v: str) -> tuple[tuple[str, int], ...]:
    if not u:
        return ((v, 1),)
    if not v:
        return ((u, 1),)
    out: dict[str, int] = {}
    for w, c in _shuffle_words(u[1:], v):
        out[u[0] + w] = out.get(u[0] + w, 0) + c
    for w, c in _shuffle_words(u, v[1:]):
        out[v[0] + w] = out.get(v[0] + w, 0) + c
    return tuple(sorted(out.items()))


def shuffle(u: str, v: str) -> NCPoly:
    """Shuffle product of two words, multiplicities counted."""
    validate_word(u)
    validate_word(v)
    return NCPoly({w: Fraction(c) for w, c in _shuffle_words(u, v)})


def star(p: NCPoly) -> NCPoly:
    """Signed reversal (a1..an) -> (-1)^n an..a1, extended linearly."""
    return p.star()


def is_lie_element(p: NCPoly) -> bool:
    """Primitivity for the coproduct in which each letter is primitive.

    Requires weight-homogeneous input.  For a true Lie element p the
    identity p + star(p) = 0 also holds (necessary, not sufficient).
    """
    if p.is_zero():
        return True
    if p.weight() is None:
        raise ValueError("input must be homogeneous in weight")
    cross = cross_coshuffle({w: c for w, c in p.terms()})
    return not cross


# -- linearized Ihara action -------------------------------------------------


def ihara_word(sigma: NCPoly, g: NCPoly | str) -> NCPoly:
    """Linearized Ihara action of a Lie element on word series.

    Frame the acted word u as 0 u 1 and insert at every gap whose two
    framing letters differ: sigma at the (0,1) gaps and -sigma* at the
    (1,0) gaps (for a Lie element these insertions coincide, since
    sigma* = -sigma).  Equal-letter gaps contribute nothing, which is the
    word-level vanishing rule of the infinitesimal coaction; consequently
    the action is exactly graded for framed block degree.  Unwinding the
    gaps left to right recovers the peeling recursion

        sigma o (0^n 1 u) = 0^n sigma 1 u - 0^n 1 sigma* u + 0^n 1 (sigma o u)

    restricted to the unequal gaps, with terminal case
    sigma o 0^n = 0^n sigma.  Bilinear in both slots.
    """
    if not is_lie_element(sigma):
        raise ValueError("sigma must be a Lie element")
    if isinstance(g, str):
        g = NCPoly.word(validate_word(g))
    minus_star = -sigma.star()
    cache: dict[str, NCPoly] = {}

    def act(u: str) -> NCPoly:
        hit = cache.get(u)
        if hit is not None:
            return hit
        framed = "0" + u + "1"
        res = NCPoly.zero()
        for gap in range(len(u) + 1):
            x, y = framed[gap], framed[gap + 1]
            if x == y:
                continue
            insert = sigma if x == "0" else minus_star
            res = res + NCPoly.word(u[:gap]) * insert * NCPoly.word(u[gap:])
        cache[u] = res
        return res

    total = NCPoly.zero()
    for w, c in g.terms():
        total = total + act(w).scale(c)
    return total


def ihara_bracket_word(f: NCPoly, g: NCPoly) -> NCPoly:
    """Antisymmetrization of the linearized action on two Lie elements.

    Exactly graded for framed block degree, like the action itself.  Note
    that the output is generally not primitive: the graded action drops
    the lower-order terms that would restore primitivity, so closure and
    the Jacobi identity only survive at the level of the block-graded
    polynomial bracket.
    """
    if not is_lie_element(f) or not is_lie_element(g):
        raise ValueError("both arguments must be Lie elements")
    return ihara_word(f, g) - ihara_word(g, f)


# -- weight-1 deconcatenation ------------------------------------------------


def delta1(w: str) -> list[tuple[str, str]]:
    """All (letter, word with that position removed) pairs, in position order."""
    validate_word(w)
    if not w:
        raise ValueError("word must be nonempty")
    return [(w[i], w[:i] + w[i + 1 :]) for i in range(len(w))]


def graded_delta1(p: NCPoly) -> dict[str, NCPoly]:
    """Top block-graded part of the weight-1 deconcatenation.

    Input must be homogeneous of some framed block degree n; only the
    pairs whose right factor has framed degree exactly n - 1 survive.
    Vanishes on word expansions of block-graded Lie elements.
    """
    if p.is_zero():
        return {"0": NCPoly.zero(), "1": NCPoly.zero()}
    degrees = {framed_block_degree(w) for w, _ in p.terms()}
    if len(degrees) != 1:
        raise ValueError("input mixes framed block degrees")
    n = degrees.pop()
    buckets = {"0": NCPoly.zero(), "1": NCPoly.zero()}
    for w, c in p.terms():
        for letter, rest in delta1(w):
            if framed_block_degree(rest) == n - 1:
                buckets[letter] = buckets[letter] + NCPoly.word(rest, c)
    return buckets


# -- formal iterated-integral symbols and the infinitesimal coaction ---------


@dataclass(frozen=True)
class FormalII:
    """Formal symbol I(lower; body; upper) over the alphabet {0,1}.

    No relations are imposed beyond the single vanishing rule used by the
    coaction: symbols whose two outer entries coincide are zero.
    """

    lower: str
    body: str
    upper: str

    def __post_init__(self):
        for letter in (self.lower, self.upper):
            if letter not in ("0", "1"):
                raise ValueError("bounds must be '0' or '1'")
        validate_word(self.body)

    @property
    def weight(self) -> int:
        return len(self.body)

    def full_word(self) -> str:
        """All entries, bounds included, read as a plain word."""
        return self.lower + self.body + self.upper

    def __str__(self) -> str:
        if self.body:
            return f"I({self.lower};{self.body};{self.upper})"
        return f"I({self.lower};{self.upper})"


@dataclass(frozen=True)
class TensorTerm:
    left: FormalII
    right: FormalII
    coeff: Fraction

    def __post_init__(self):
        if not self.coeff:
            raise ValueError("coefficient must be nonzero")

    def __str__(self) -> str:
        c = "" if self.coeff == 1 else f"{self.coeff}*"
        return f"{c}{self.left} (x) {self.right}"


def infinitesimal_coaction(r: int, s: FormalII) -> list[TensorTerm]:
    """Weight-(2r+1) infinitesimal coaction of a formal symbol.

    Extracts every consecutive subword of length 2r+1 as a left factor,
    discarding the terms whose left factor has equal outer entries.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    n = s.weight
    if 2 * r + 1 > n:
        raise ValueError(f"weight {n} too small for r={r}")
    seq = s.full_word()  # a_0 .. a_{N+1}
    out: list[TensorTerm] = []
    for p in range(0, n - 2 * r):
        x = seq[p]
        y = seq[p + 2 * r + 2]
        if x == y:
            continue
        left = FormalII(x, seq[p + 1 : p + 2 * r + 2], y)
        right_body = seq[1 : p + 1] + seq[p + 2 * r + 2 : n + 1]
        right = FormalII(s.lower, right_body, s.upper)
        out.append(TensorTerm(left, right, Fraction(1)))
    return out


# -- block grading helpers ---------------------------------------------------


def framed_components(p: NCPoly) -> dict[int, NCPoly]:
    """Split a word series by framed block degree."""
    out: dict[int, dict[str, Fraction]] = {}
    for w, c in p.terms():
        out.setdefault(framed_block_degree(w), {})[w] = c
    return {d: NCPoly(t) for d, t in sorted(out.items())}


def pi_bl_ncpoly(p: NCPoly) -> CPoly:
    """Monomial encoding of a series homogeneous in framed block degree."""
    if p.is_zero():
        raise ValueError("cannot encode the zero series without a degree")
    degrees = {framed_block_degree(w) for w, _ in p.terms()}
    if len(degrees) != 1:
        raise ValueError("input mixes framed block degrees")
    nvars = degrees.pop() + 1
    total = CPoly.zero(nvars)
    for w, c in p.terms():
        total = total + blocks.pi_bl(w).scale(c)
    return total


# -- Lyndon machinery (word-level Lie bases for tests and suites) ------------


def lyndon_words_binary(n: int) -> list[str]:
    """All Lyndon words of length n over '0' < '1', lexicographically (Duval)."""
    if n < 1:
        return []
    out: list[str] = []
    w = [0]
    while True:
        if len(w) == n:
            out.append("".join(str(c) for c in w))
        t = [w[i % len(w)] for i in range(n)]
        while t and t[-1] == 1:
            t.pop()
        if not t:
            break
        t[-1] += 1
        w = t
    return out


def standard_bracketing(w: str) -> NCPoly:
    """Right-standard bracketing of a Lyndon word; gives a Lie basis element."""
    validate_word(w)
    if len(w) == 1:
        return NCPoly.word(w)
    # standard factorization: v is the longest proper Lyndon suffix
    for i in range(1, len(w)):
        if _is_lyndon(w[i:]):
            u, v = w[:i], w[i:]
            return commutator(standard_bracketing(u), standard_bracketing(v))
    raise ValueError(f"{w!r} is not a Lyndon word")


def _is_lyndon(w: str) -> bool:
    return bool(w) and all(w < w[i:] + w[:i] for i in range(1, len(w)))


def lie_basis(weight: int) -> list[NCPoly]:
    """Bracketed Lyndon basis of the free Lie algebra in one weight."""
    return [standard_bracketing(w) for w in lyndon_words_binary(weight)]


def nested_commutator(outer: str, weight: int) -> NCPoly:
    """[a,[a,...,[a,b]...]] with weight-1 copies of the outer letter."""
    if outer not in ("0", "1"):
        raise ValueError("outer letter must be '0' or '1'")
    inner = "1" if outer == "0" else "0"
    acc = NCPoly.word(inner)
    for _ in range(weight - 1):
        acc = commutator(NCPoly.word(outer), acc)
    return acc


def mirror_lie_element(weight: int) -> NCPoly:
    """Deterministic odd-weight Lie test element.

    The difference of the two nested commutator towers; at weight 3 its
    framed-degree-1 part encodes exactly the canonical two-variable
    generator polynomial.
    """
    if weight < 3 or weight % 2 == 0:
        raise ValueError("weight must be odd and >= 3")
    return nested_commutator("1", weight) - nested_commutator("0", weight)
