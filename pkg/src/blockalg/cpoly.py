"""Sparse commutative polynomials over Q with exact rational arithmetic.

A :class:`CPoly` is a polynomial in variables ``x1 .. xn`` stored as a map
from exponent vectors (tuples of naturals of length ``nvars``) to nonzero
:class:`~fractions.Fraction` coefficients.  All arithmetic is exact; no
floating point is ever involved.  Instances are immutable by convention:
every operation returns a fresh polynomial.

Exponent tuples compare lexicographically (x1 most significant), which is
the monomial order used by exact division.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


class InexactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


def _as_fraction(x: Scalar) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an integer or Fraction, got {type(x).__name__}")


class CPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(
        self,
        nvars: int,
        terms: Mapping[Exponents, Scalar] | Iterable[tuple[Exponents, Scalar]] = (),
    ):
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponents, Fraction] = {}
        for exps, coeff in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have length {nvars}")
            if any(e < 0 or not isinstance(e, int) for e in exps):
                raise ValueError(f"exponents must be naturals, got {exps}")
            c = clean.get(exps, Fraction(0)) + _as_fraction(coeff)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("CPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "CPoly":
        return cls(nvars, ())

    @classmethod
    def one(cls, nvars: int) -> "CPoly":
        return cls(nvars, {(0,) * nvars: Fraction(1)})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: Scalar = 1, nvars: int | None = None) -> "CPoly":
        exps = tuple(exps)
        n = len(exps) if nvars is None else nvars
        return cls(n, {exps: coeff})

    @classmethod
    def variable(cls, j: int, nvars: int) -> "CPoly":
        """The polynomial ``xj`` (1-based) in ``nvars`` variables."""
        if not 1 <= j <= nvars:
            raise ValueError(f"variable index {j} out of range 1..{nvars}")
        exps = tuple(1 if i == j - 1 else 0 for i in range(nvars))
        return cls(nvars, {exps: Fraction(1)})

    # -- inspection ----------------------------------------------------

    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Terms sorted lexicographically by exponent vector."""
        for exps in sorted(self._terms):
            yield exps, self._terms[exps]

    def coeff(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree of all terms, or None if mixed or zero."""
        degs = {sum(e) for e in self._terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    # -- equality ------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "CPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} != {other.nvars}")

    def __add__(self, other: "CPoly") -> "CPoly":
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check_compatible(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, Fraction(0)) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return CPoly(self.nvars, out)

    def __sub__(self, other: "CPoly") -> "CPoly":
        if not isinstance(other, CPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "CPoly":
        return CPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __mul__(self, other: Union["CPoly", Scalar]) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check_compatible(other)
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(key, Fraction(0)) + c1 * c2
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return CPoly(self.nvars, out)

    def __rmul__(self, other: Scalar) -> "CPoly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "CPoly":
        c = _as_fraction(c)
        if not c:
            return CPoly.zero(self.nvars)
        return CPoly(self.nvars, {e: c * v for e, v in self._terms.items()})

    # -- structural operations ------------------------------------------

    def embed(self, nvars: int) -> "CPoly":
        """Reinterpret in a larger variable ring by zero-padding exponents."""
        if nvars < self.nvars:
            raise ValueError("cannot embed into fewer variables")
        pad = (0,) * (nvars - self.nvars)
        return CPoly(nvars, {e + pad: c for e, c in self._terms.items()})

    def substitute(self, slots: Sequence[tuple[int, int]]) -> "CPoly":
        """Replace each variable by a signed variable.

        ``slots[j] = (sign, source)`` sends the (j+1)-th variable of self to
        ``sign * x_source`` (1-based source indices).  Sources may repeat
        (collapsing variables) and the result lives in ``max(source)``
        variables.
        """
        slots = list(slots)
        if len(slots) != self.nvars:
            raise ValueError(f"expected {self.nvars} slots, got {len(slots)}")
        for sign, src in slots:
            if sign not in (1, -1):
                raise ValueError(f"slot sign must be +1 or -1, got {sign}")
            if not isinstance(src, int) or src < 1:
                raise ValueError(f"slot source must be a positive index, got {src}")
        out_nvars = max((src for _, src in slots), default=0)
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            new = [0] * out_nvars
            c = coeff
            for e, (sign, src) in zip(exps, slots):
                new[src - 1] += e
                if sign < 0 and e % 2:
                    c = -c
            key = tuple(new)
            v = out.get(key, Fraction(0)) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return CPoly(out_nvars, out)

    def map_slots(
        self,
        images: Sequence[tuple[Scalar, int] | None],
        out_nvars: int,
    ) -> "CPoly":
        """General monomial substitution.

        ``images[j]`` is either ``(coeff, target)`` sending the (j+1)-th
        variable to ``coeff * x_target``, or None sending it to 0.
        """
        images = list(images)
        if len(images) != self.nvars:
            raise ValueError(f"expected {self.nvars} images, got {len(images)}")
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            new = [0] * out_nvars
            c = coeff
            dead = False
            for e, img in zip(exps, images):
                if e == 0:
                    continue
                if img is None:
                    dead = True
                    break
                scalar, target = img
                new[target - 1] += e
                c = c * _as_fraction(scalar) ** e
            if dead or not c:
                continue
            key = tuple(new)
            v = out.get(key, Fraction(0)) + c
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return CPoly(out_nvars, out)

    def diff(self, j: int) -> "CPoly":
        """Partial derivative with respect to the 1-based variable ``xj``."""
        if not 1 <= j <= self.nvars:
            raise ValueError(f"variable index {j} out of range 1..{self.nvars}")
        out: dict[Exponents, Fraction] = {}
        for exps, coeff in self._terms.items():
            e = exps[j - 1]
            if e == 0:
                continue
            key = exps[: j - 1] + (e - 1,) + exps[j:]
            v = out.get(key, Fraction(0)) + coeff * e
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return CPoly(self.nvars, out)

    def divide_exact(self, den: "CPoly") -> "CPoly":
        """Exact quotient ``q`` with ``q * den == self``.

        Division is leading-term elimination under the lexicographic
        monomial order and must terminate with remainder zero; anything
        else raises :class:`InexactDivision` loudly.
        """
        if not isinstance(den, CPoly):
            raise TypeError("denominator must be a CPoly")
        self._check_compatible(den)
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lt_d = max(den._terms)
        cd = den._terms[lt_d]
        rem = dict(self._terms)
        quot: dict[Exponents, Fraction] = {}
        while rem:
            lt_r = max(rem)
            diff = tuple(a - b for a, b in zip(lt_r, lt_d))
            if any(e < 0 for e in diff):
                raise InexactDivision(
                    f"leading term x^{lt_r} is not divisible by x^{lt_d}"
                )
            c = rem[lt_r] / cd
            quot[diff] = quot.get(diff, Fraction(0)) + c
            for de, dc in den._terms.items():
                key = tuple(a + b for a, b in zip(diff, de))
                v = rem.get(key, Fraction(0)) - c * dc
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return CPoly(self.nvars, quot)

    # -- serialization ---------------------------------------------------

    def to_dict(self) -> dict:
        """Wire format: exact fraction strings, terms sorted lexicographically."""
        return {
            "vars": self.nvars,
            "terms": [
                {"coeff": str(c), "exps": list(e)} for e, c in self.terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "CPoly":
        nvars = int(data["vars"])
        terms = {}
        for t in data["terms"]:
            exps = tuple(int(e) for e in t["exps"])
            terms[exps] = Fraction(t["coeff"])
        return cls(nvars, terms)

    # -- rendering ---------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts: list[str] = []
        for exps, coeff in self.terms():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps)
                if e
            )
            mag = abs(coeff)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            elif mag.denominator == 1:
                body = f"{mag}*{mono}"
            else:
                body = f"({mag})*{mono}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"CPoly({self.nvars}, {self})"


_MONOMIAL_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> CPoly:
    """Parse a monomial like ``x1^3*x2^2`` into a coefficient-1 CPoly.

    Raises ValueError naming the first invalid position (1-based characters).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty monomial at position 1")
    exps: dict[int, int] = {}
    pos = 1
    for factor in s.split("*"):
        m = _MONOMIAL_FACTOR.match(factor.strip())
        if not m:
            raise ValueError(
                f"invalid monomial factor {factor.strip()!r} at position {pos}; "
                "expected the form xN or xN^E"
            )
        j = int(m.group(1))
        e = int(m.group(2)) if m.group(2) else 1
        if j < 1:
            raise ValueError(f"variable index must be >= 1 at position {pos}")
        exps[j] = exps.get(j, 0) + e
        pos += len(factor) + 1
    nvars = max(exps)
    vec = tuple(exps.get(j, 0) for j in range(1, nvars + 1))
    return CPoly(nvars, {vec: Fraction(1)})
