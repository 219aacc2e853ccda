"""Finite rational linear combinations of binary words.

An :class:`NCPoly` maps words (strings over '0'/'1', the empty word being
the unit) to nonzero Fraction coefficients.  Multiplication is
concatenation, extended bilinearly.  These carry Lie elements, shuffle
products and word-level Ihara computations.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

from .blocks import validate_word
from .cpoly import Scalar, _as_fraction


class NCPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[str, Scalar] | Iterable[tuple[str, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[str, Fraction] = {}
        for w, coeff in items:
            validate_word(w)
            c = clean.get(w, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("NCPoly is immutable")

    @classmethod
    def zero(cls) -> "NCPoly":
        return cls(())

    @classmethod
    def word(cls, w: str, coeff: Scalar = 1) -> "NCPoly":
        return cls({w: coeff})

    def terms(self) -> Iterator[tuple[str, Fraction]]:
        for w in sorted(self._terms, key=lambda s: (len(s), s)):
            yield w, self._terms[w]

    def coeff(self, w: str) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def support(self) -> list[str]:
        return sorted(self._terms, key=lambda s: (len(s), s))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w, Fraction(0)) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NCPoly(out)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly({w: -c for w, c in self._terms.items()})

    def __mul__(self, other: Union["NCPoly", Scalar]) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, NCPoly):
            return NotImplemented
        out: dict[str, Fraction] = {}
        for u, cu in self._terms.items():
            for v, cv in other._terms.items():
                w = u + v
                s = out.get(w, Fraction(0)) + cu * cv
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NCPoly(out)

    def __rmul__(self, other: Scalar) -> "NCPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "NCPoly":
        c = _as_fraction(c)
        if not c:
            return NCPoly.zero()
        return NCPoly({w: c * v for w, v in self._terms.items()})

    def star(self) -> "NCPoly":
        """Reverse every word with sign (-1)^length; an involution."""
        return NCPoly({w[::-1]: c * (-1) ** len(w) for w, c in self._terms.items()})

    def weight(self) -> int | None:
        """Common word length, or None if mixed or zero."""
        lengths = {len(w) for w in self._terms}
        if len(lengths) == 1:
            return lengths.pop()
        return None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for w, c in self.terms():
            name = w if w else "(empty)"
            mag = abs(c)
            body = name if mag == 1 else (
                f"{mag}*{name}" if mag.denominator == 1 else f"({mag})*{name}"
            )
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"NCPoly({self})"


def commutator(a: NCPoly, b: NCPoly) -> NCPoly:
    return a * b - b * a


def cross_coshuffle(terms: Mapping[Sequence, Fraction]) -> dict[tuple, Fraction]:
    """Cross part of the unshuffle coproduct on generic words.

    Every letter is primitive; for each word all (proper, nonempty)
    complementary subsequence pairs are collected.  An element is
    primitive exactly when this vanishes.
    """
    cross: dict[tuple, Fraction] = {}
    for word, coeff in terms.items():
        n = len(word)
        for mask in range(1, (1 << n) - 1):
            left = tuple(word[i] for i in range(n) if mask >> i & 1)
            right = tuple(word[i] for i in range(n) if not mask >> i & 1)
            key = (left, right)
            v = cross.get(key, Fraction(0)) + coeff
            if v:
                cross[key] = v
            else:
                cross.pop(key, None)
    return cross
