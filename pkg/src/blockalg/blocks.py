"""Block decomposition of binary words and the monomial encoding.

Words are plain strings over the alphabet ``'0'``/``'1'`` (``'0'`` standing
for the letter e0, ``'1'`` for e1).  The weight of a word is its length and
the depth is its number of ``'1'`` letters.

A word factors uniquely into maximal alternating pieces ("blocks") such
that consecutive pieces share their boundary letter; the block degree is
one less than the number of pieces, equivalently the number of equal
adjacent letter pairs.  Encoding the block lengths of the framed word
``0 w 1`` as exponents identifies words with monomials, which is how the
polynomial layer represents everything.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .cpoly import CPoly

ALPHABET = "01"


class InvalidMonomial(ValueError):
    """Monomial is not the encoding of any framed word ``0 w 1``."""


def validate_word(w: str) -> str:
    """Check a word over {0,1}; errors name the first invalid position."""
    if not isinstance(w, str):
        raise ValueError("word must be a string over '0'/'1'")
    for i, ch in enumerate(w):
        if ch not in ALPHABET:
            raise ValueError(
                f"invalid character {ch!r} at position {i + 1}; expected '0' or '1'"
            )
    return w


def _require_nonempty(w: str) -> str:
    validate_word(w)
    if not w:
        raise ValueError("word must be nonempty")
    return w


def weight(w: str) -> int:
    return len(w)


def depth(w: str) -> int:
    return w.count("1")


def block_decompose(w: str) -> list[str]:
    """Split a word at each equal adjacent pair.

    The pieces are alternating, concatenate to ``w``, and the last letter
    of each piece equals the first letter of the next; this is the unique
    minimal such factorization.
    """
    _require_nonempty(w)
    blocks: list[str] = []
    start = 0
    for i in range(1, len(w)):
        if w[i] == w[i - 1]:
            blocks.append(w[start:i])
            start = i
    blocks.append(w[start:])
    return blocks


def block_degree(w: str) -> int:
    """Number of equal adjacent pairs; one less than the block count."""
    _require_nonempty(w)
    return sum(1 for i in range(1, len(w)) if w[i] == w[i - 1])


def framed_block_degree(w: str) -> int:
    """Block degree of ``0 w 1``; defined for the empty word as well."""
    validate_word(w)
    return block_degree("0" + w + "1")


@dataclass(frozen=True)
class BlockTuple:
    """First letter plus the block lengths of a word."""

    epsilon: int
    lengths: tuple[int, ...]

    def __post_init__(self):
        if self.epsilon not in (0, 1):
            raise ValueError("epsilon must be 0 or 1")
        if not self.lengths:
            raise ValueError("lengths must be nonempty")
        if any(l < 1 for l in self.lengths):
            raise ValueError("block lengths must be >= 1")

    def __str__(self) -> str:
        return f"({self.epsilon}; {','.join(str(l) for l in self.lengths)})"


def bl(w: str) -> BlockTuple:
    blocks = block_decompose(w)
    return BlockTuple(int(w[0]), tuple(len(b) for b in blocks))


def _alternating(first: int, length: int) -> str:
    return "".join(str((first + i) % 2) for i in range(length))


def bl_inverse(t: BlockTuple) -> str:
    """Rebuild the word: each block starts with the previous block's last letter."""
    out: list[str] = []
    cur = t.epsilon
    for length in t.lengths:
        out.append(_alternating(cur, length))
        # last letter of an alternating block of this length
        cur = cur if length % 2 == 1 else 1 - cur
    return "".join(out)


def duality(w: str) -> str:
    """Reverse the word and flip every letter; preserves block degree."""
    validate_word(w)
    return "".join("1" if ch == "0" else "0" for ch in reversed(w))


def pi_bl(w: str) -> CPoly:
    """Monomial encoding: block lengths of ``0 w 1`` become exponents.

    The result is a single monomial of degree ``len(w) + 2`` in
    ``framed_block_degree(w) + 1`` variables.
    """
    _require_nonempty(w)
    t = bl("0" + w + "1")
    return CPoly.monomial(t.lengths, Fraction(1))


def word_from_exponents(exps: tuple[int, ...]) -> str:
    """Inverse of the monomial encoding, or raise :class:`InvalidMonomial`."""
    if not exps:
        raise InvalidMonomial("empty exponent vector")
    if any(e < 1 for e in exps):
        raise InvalidMonomial(f"exponents must all be >= 1, got {exps}")
    framed = bl_inverse(BlockTuple(0, tuple(exps)))
    if len(framed) < 3:
        raise InvalidMonomial("total degree must be at least 3")
    if framed[-1] != "1":
        raise InvalidMonomial(
            f"block lengths {exps} force the final letter to '0'; "
            "monomial is outside the encoding's image"
        )
    return framed[1:-1]


def _single_exponents(m: CPoly) -> tuple[int, ...]:
    terms = list(m.terms())
    if len(terms) != 1:
        raise InvalidMonomial("expected a single monomial")
    return terms[0][0]


def pi_bl_inverse(m: CPoly) -> str:
    """Recover the word whose encoding is the given monomial."""
    return word_from_exponents(_single_exponents(m))


def depth_of_monomial(m: CPoly | tuple[int, ...]) -> int:
    """Depth of the word encoded by a monomial (coefficient ignored)."""
    exps = m if isinstance(m, tuple) else _single_exponents(m)
    return depth(word_from_exponents(exps))


def depth_sign_transform(f: CPoly, weight: int) -> CPoly:
    """Polynomial form of the letter flip e1 -> -e1.

    Negates the odd-indexed variables (x1, x3, ...) and multiplies by
    (-1)^ceil(weight/2); defined on homogeneous polynomials of degree
    ``weight + 2``.  The transform is an involution.
    """
    if not f.is_zero() and f.homogeneous_degree() != weight + 2:
        raise ValueError(
            f"expected a homogeneous polynomial of degree {weight + 2}"
        )
    sign = -1 if -(-weight // 2) % 2 else 1
    slots = [((-1) ** j, j) for j in range(1, f.nvars + 1)]
    return f.substitute(slots).scale(sign)


@lru_cache(maxsize=None)
def hoffman_count(n: int, m: int) -> int:
    """Number of sequences over {2,3} with sum ``n`` and exactly ``m`` threes."""
    if n < 0 or m < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    return hoffman_count(n - 2, m) + hoffman_count(n - 3, m - 1)
