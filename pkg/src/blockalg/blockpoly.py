"""Block-graded polynomials: canonical generators, the polynomial Ihara
action in both conventions, reduced polynomials and their dihedral
bracket, shuffle and cyclic sums, the sign-pattern differential, the
z-alphabet Hopf structure, and free Lie algebra dimension counts.

A block-graded element of weight N and block degree n-1 is a homogeneous
polynomial f(x1..xn) of degree N+2, divisible by x1...xn(x1-xn); its
reduced form r = f / (x1...xn(x1-xn)) carries the dihedral symmetry.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Iterator

from .cpoly import CPoly
from .ncpoly import cross_coshuffle


# -- canonical generators -----------------------------------------------------


def half_generator(k: int) -> CPoly:
    """One-sided generator component of odd weight 2k+1, in two variables.

    The coefficients on x1^(2i+1) x2^(2k+2-2i) for i = 1..k come from the
    binomial combination C(2k,2i) - (1 - 2^(-2k)) C(2k,2k+1-2i); the i = 0
    coefficient is pinned by the weight-1 shuffle regularization
    constraint c0 + 2*sum(ci) = 0.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    terms: dict[tuple[int, int], Fraction] = {}
    total = Fraction(0)
    for i in range(1, k + 1):
        c = Fraction(comb(2 * k, 2 * i)) - (1 - Fraction(1, 4**k)) * comb(
            2 * k, 2 * k + 1 - 2 * i
        )
        terms[(2 * i + 1, 2 * k + 2 - 2 * i)] = c
        total += c
    terms[(1, 2 * k + 2)] = -2 * total
    return CPoly(2, terms)


def generator_closed_form(k: int) -> CPoly:
    """Closed form of the weight-(2k+1) generator:

        x1 x2 (x1-x2) * [(1 - 2^(2k+1))(x1+x2)^(2k) - (x1-x2)^(2k)] / 2^(2k)
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    a = 1 - 2 ** (2 * k + 1)
    core: dict[tuple[int, int], Fraction] = {}
    for j in range(2 * k + 1):
        c = (Fraction(a) * comb(2 * k, j) - comb(2 * k, j) * (-1) ** j) / 4**k
        if c:
            core[(j, 2 * k - j)] = c
    reduced = CPoly(2, core)
    prefactor = CPoly(2, {(2, 1): Fraction(1), (1, 2): Fraction(-1)})
    return prefactor * reduced


def generator_normalization(k: int) -> Fraction:
    """Scalar relating the antisymmetrized one-sided form to the closed form."""
    q = half_generator(k)
    anti = q - q.substitute([(1, 2), (1, 1)])
    ref = (1, 2 * k + 2)
    denom = anti.coeff(ref)
    if not denom:
        raise ArithmeticError("cannot normalize: reference coefficient vanished")
    return generator_closed_form(k).coeff(ref) / denom


def generator_poly(k: int) -> CPoly:
    """Canonical block-degree-1 generator of weight 2k+1.

    Built as the normalized antisymmetrization of :func:`half_generator`,
    so that the one-sided coefficients are the single upstream source of
    the generator data; equals :func:`generator_closed_form` exactly.
    """
    q = half_generator(k)
    anti = q - q.substitute([(1, 2), (1, 1)])
    return anti.scale(generator_normalization(k))


def reduced_generator(k: int) -> CPoly:
    return reduce_block_poly(generator_poly(k))


def generator_solution_space(k: int) -> tuple[int, list[CPoly]]:
    """Solve the linear constraints characterizing the generators.

    Unknowns are the coefficients of a homogeneous degree-(2k+3) polynomial
    p(x1,x2) and of a degree-2k polynomial r(x1,x2), subject to:
    p(x1,0) = p(0,x2) = p + swap = 0; x1 x2 (x1-x2) r = p;
    r(0,x) = 2 r(x,-x); and d1^2 r = d2^2 r.  Returns the solution
    dimension and a basis of the p-part (expected: dimension one, spanned
    by the canonical generator up to scale).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    dp = 2 * k + 3
    dr = 2 * k
    p_mons = [(a, dp - a) for a in range(dp + 1)]
    r_mons = [(a, dr - a) for a in range(dr + 1)]
    p_index = {m: i for i, m in enumerate(p_mons)}
    r_index = {m: len(p_mons) + i for i, m in enumerate(r_mons)}
    ncols = len(p_mons) + len(r_mons)
    rows: list[list[Fraction]] = []

    def new_row() -> list[Fraction]:
        return [Fraction(0)] * ncols

    # p(x1,0) = 0 and p(0,x2) = 0
    for mon in ((dp, 0), (0, dp)):
        row = new_row()
        row[p_index[mon]] = Fraction(1)
        rows.append(row)
    # antisymmetry p(x1,x2) + p(x2,x1) = 0
    for a, b in p_mons:
        if a < b:
            continue
        row = new_row()
        row[p_index[(a, b)]] += 1
        row[p_index[(b, a)]] += 1
        rows.append(row)
    # x1 x2 (x1 - x2) r - p = 0, matched coefficientwise
    for a, b in p_mons:
        row = new_row()
        row[p_index[(a, b)]] = Fraction(-1)
        if a >= 2 and b >= 1 and (a - 2, b - 1) in r_index:
            row[r_index[(a - 2, b - 1)]] += 1
        if a >= 1 and b >= 2 and (a - 1, b - 2) in r_index:
            row[r_index[(a - 1, b - 2)]] -= 1
        rows.append(row)
    # r(0,x) = 2 r(x,-x)
    row = new_row()
    row[r_index[(0, dr)]] += 1
    for a, b in r_mons:
        row[r_index[(a, b)]] -= 2 * Fraction((-1) ** b)
    rows.append(row)
    # d1^2 r = d2^2 r
    for a in range(dr - 1):
        b = dr - 2 - a
        row = new_row()
        if (a + 2, b) in r_index:
            row[r_index[(a + 2, b)]] += (a + 2) * (a + 1)
        if (a, b + 2) in r_index:
            row[r_index[(a, b + 2)]] -= (b + 2) * (b + 1)
        rows.append(row)

    from .linalg import nullspace

    basis_vecs = nullspace(rows, ncols)
    basis = []
    for vec in basis_vecs:
        terms = {m: vec[p_index[m]] for m in p_mons if vec[p_index[m]]}
        basis.append(CPoly(2, terms))
    return len(basis_vecs), basis


# -- polynomial Ihara action ---------------------------------------------------


def _slice_vars(f: CPoly, start: int, nvars: int) -> CPoly:
    """f evaluated at the consecutive variables x_start .. x_{start+m-1}."""
    return f.substitute([(1, start + j) for j in range(f.nvars)]).embed(nvars)


def ihara_action(f: CPoly, g: CPoly) -> CPoly:
    """Polynomial Ihara action in the depth-signed convention.

    Both arguments must satisfy the block-graded divisibility shape (each
    divisible by all of its variables, f also by x1 - xm); every division
    is exact and failure raises :class:`InexactDivision`.
    """
    m, n = f.nvars, g.nvars
    nv = m + n - 1
    total = CPoly.zero(nv)
    for i in range(1, n + 1):
        a, b = i, i + m - 1
        xa = CPoly.variable(a, nv)
        xb = CPoly.variable(b, nv)
        f_slice = _slice_vars(f, i, nv)
        fd = f_slice.divide_exact(xa - xb)
        before = list(range(1, i))
        after = list(range(i + m, nv + 1))
        g_a = g.substitute([(1, s) for s in before + [a] + after]).embed(nv)
        g_b = g.substitute([(1, s) for s in before + [b] + after]).embed(nv)
        total = total + fd * (g_a.divide_exact(xa) - g_b.divide_exact(xb))
    sign = (-1) ** ((m + 1) * (n + 1))
    return total.scale(sign)


def ihara_bracket(f: CPoly, g: CPoly) -> CPoly:
    """Antisymmetrized polynomial Ihara action."""
    return ihara_action(f, g) - ihara_action(g, f)


def ihara_action_unsigned(f: CPoly, g: CPoly) -> CPoly:
    """Polynomial Ihara action in the raw (unsigned) word convention.

    f is the encoding of the block-degree-(m-1) part of a Lie element in m
    variables; g is the encoding of a word series (every exponent >= 1).
    The i-th summand, the insertion into the i-th block, is an exact
    quotient by x_i x_{i+m-1} (x_i^2 - x_{i+m-1}^2).
    """
    m, n = f.nvars, g.nvars
    nv = m + n - 1
    s = (-1) ** (m + 1)
    total = CPoly.zero(nv)
    for i in range(1, n + 1):
        a, b = i, i + m - 1
        xa = CPoly.variable(a, nv)
        xb = CPoly.variable(b, nv)
        f_slice = _slice_vars(f, i, nv)
        before = [(s, j) for j in range(1, i)]
        after = [(1, j) for j in range(i + m, nv + 1)]
        g_a = g.substitute(before + [(s, a)] + after).embed(nv)
        g_b = g.substitute(before + [(1, b)] + after).embed(nv)
        numerator = f_slice * (
            (xa + xb.scale(s)) * xb * g_a - (xb + xa.scale(s)) * xa * g_b
        )
        denominator = xa * xb * (xa * xa - xb * xb)
        term = numerator.divide_exact(denominator)
        total = total + term.scale(s ** (i - 1))
    return total


# -- reduced polynomials and the dihedral bracket ------------------------------


def _reduction_denominator(n: int) -> CPoly:
    prod = CPoly.one(n)
    for j in range(1, n + 1):
        prod = prod * CPoly.variable(j, n)
    return prod * (CPoly.variable(1, n) - CPoly.variable(n, n))


def reduce_block_poly(f: CPoly) -> CPoly:
    """Exact quotient by x1 ... xn (x1 - xn)."""
    if f.nvars < 2:
        raise ValueError("reduction needs at least two variables")
    return f.divide_exact(_reduction_denominator(f.nvars))


def unreduce_block_poly(r: CPoly) -> CPoly:
    """Multiply a reduced polynomial back to its block-graded form."""
    if r.nvars < 2:
        raise ValueError("unreduction needs at least two variables")
    return r * _reduction_denominator(r.nvars)


def reduced_bracket(r: CPoly, q: CPoly) -> CPoly:
    """Dihedral-form Lie bracket on reduced block polynomials.

    A cyclic sum over the output slots: each term evaluates r on m
    consecutive slots and multiplies the difference of q on the two
    complementary slot windows, indices modulo m+n-1.  Inputs are
    expected cyclic-invariant (as every reduced block polynomial is),
    which makes the windows canonical.  The overall sign is chosen so
    the result equals the exact quotient of :func:`ihara_bracket`
    applied to the unreduced forms.
    """
    m, n = r.nvars, q.nvars
    nv = m + n - 1

    def idx(t: int) -> int:
        return (t - 1) % nv + 1

    total = CPoly.zero(nv)
    if m == 2:
        for i in range(1, nv + 1):
            rf = r.substitute([(1, idx(i)), (1, idx(i + 1))]).embed(nv)
            keep_a = [j for j in range(1, nv + 1) if j != idx(i + 1)]
            keep_b = [j for j in range(1, nv + 1) if j != idx(i)]
            q_a = q.substitute([(1, j) for j in keep_a]).embed(nv)
            q_b = q.substitute([(1, j) for j in keep_b]).embed(nv)
            total = total + rf * (q_a - q_b)
    else:
        for i in range(1, nv + 1):
            rf = r.substitute([(1, idx(i + j)) for j in range(m)]).embed(nv)
            q_a = q.substitute([(1, idx(i + m + j)) for j in range(n)]).embed(nv)
            q_b = q.substitute([(1, idx(i + m - 1 + j)) for j in range(n)]).embed(nv)
            total = total + rf * (q_a - q_b)
    return total.scale((-1) ** ((m + 1) * (n + 1)))


def left_nested_reduced(weights: Iterable[int]) -> CPoly:
    """Left-nested reduced bracket of generators of the given odd weights."""
    ws = list(weights)
    if not ws:
        raise ValueError("need at least one generator weight")
    for w in ws:
        if w < 3 or w % 2 == 0:
            raise ValueError(f"generator weights must be odd and >= 3, got {w}")
    acc = reduced_generator((ws[0] - 1) // 2)
    for w in ws[1:]:
        acc = reduced_bracket(acc, reduced_generator((w - 1) // 2))
    return acc


def left_nested_bg(weights: Iterable[int]) -> CPoly:
    """Left-nested bracket in block-graded (unreduced) form."""
    ws = list(weights)
    r = left_nested_reduced(ws)
    if r.is_zero():
        return CPoly.zero(len(ws) + 1)
    return unreduce_block_poly(r)


# -- shuffle and cyclic sums ----------------------------------------------------


def shuffle_permutations(n: int, r: int) -> Iterator[tuple[int, ...]]:
    """The (r, n-r) shuffle permutations as value tuples (sigma(1)..sigma(n)).

    sigma places values 1..r and r+1..n each in increasing position order;
    there are C(n, r) of them, enumerated by ascending position subsets.
    """
    if not 1 <= r <= n:
        raise ValueError("need 1 <= r <= n")
    for positions in itertools.combinations(range(n), r):
        sigma = [0] * n
        rest = [j for j in range(n) if j not in positions]
        for value, pos in enumerate(positions, start=1):
            sigma[pos] = value
        for value, pos in enumerate(rest, start=r + 1):
            sigma[pos] = value
        yield tuple(sigma)


def block_shuffle_sum(f: CPoly, r: int) -> CPoly:
    """Sum of f over the (r, n-r) shuffle permutations of its variable slots."""
    n = f.nvars
    if not 1 <= r < n:
        raise ValueError(f"split point r={r} out of range 1..{n - 1}")
    total = CPoly.zero(n)
    for sigma in shuffle_permutations(n, r):
        total = total + f.substitute([(1, s) for s in sigma])
    return total


def cyclic_sum(f: CPoly) -> CPoly:
    """Sum of f over the cyclic rotations of its variable slots."""
    n = f.nvars
    if n < 1:
        raise ValueError("need at least one variable")
    total = CPoly.zero(n)
    for t in range(n):
        total = total + f.substitute([(1, (j + t) % n + 1) for j in range(n)])
    return total


# -- differential relation -------------------------------------------------------


def sign_vectors(n: int) -> list[tuple[int, ...]]:
    """All sign patterns of length n with leading entry +1 (2^(n-1) of them)."""
    if n < 1:
        raise ValueError("need n >= 1")
    return [(1,) + rest for rest in itertools.product((1, -1), repeat=n - 1)]


def directional_derivative(f: CPoly, v: Iterable[int]) -> CPoly:
    """The first-order operator sum_j v_j d/dx_j applied to f."""
    total = CPoly.zero(f.nvars)
    for j, s in enumerate(v, start=1):
        if s == 1:
            total = total + f.diff(j)
        elif s == -1:
            total = total - f.diff(j)
        else:
            raise ValueError("sign entries must be +1 or -1")
    return total


def block_differential(r: CPoly) -> CPoly:
    """Compose the 2^(n-1) signed directional derivatives (they commute)."""
    out = r
    for v in sign_vectors(r.nvars):
        out = directional_derivative(out, v)
    return out


# -- z-alphabet -------------------------------------------------------------------


ZPoly = dict[tuple[int, ...], Fraction]


def to_zword(f: CPoly) -> ZPoly:
    """Transcribe monomials with all-positive exponents into letter words."""
    out: ZPoly = {}
    for exps, coeff in f.terms():
        if any(e < 1 for e in exps):
            raise ValueError(f"monomial with a zero exponent: {exps}")
        out[exps] = coeff
    return out


def zword_str(w: tuple[int, ...]) -> str:
    return " ".join(f"z{i}" for i in w)


def z_is_primitive(zp: ZPoly) -> bool:
    """Primitivity for the coproduct with every z-letter primitive."""
    return not cross_coshuffle(zp)


def z_cyclic(zp: ZPoly) -> ZPoly:
    """Sum of all cyclic rotations of each word."""
    out: ZPoly = {}
    for w, c in zp.items():
        for t in range(len(w)):
            rot = w[t:] + w[:t]
            v = out.get(rot, Fraction(0)) + c
            if v:
                out[rot] = v
            else:
                out.pop(rot, None)
    return out


def z_antipode(zp: ZPoly) -> ZPoly:
    """Antipode: the reversing antihomomorphism z_i -> -z_i."""
    out: ZPoly = {}
    for w, c in zp.items():
        key = w[::-1]
        v = out.get(key, Fraction(0)) + c * (-1) ** len(w)
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


# -- free Lie algebra dimensions ----------------------------------------------------


def _mobius(n: int) -> int:
    if n == 1:
        return 1
    result = 1
    d = 2
    m = n
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def _lyndon_content_count(multiplicities: tuple[int, ...]) -> int:
    """Number of Lyndon words with the given letter multiplicities (Witt)."""
    n = sum(multiplicities)
    g = 0
    for m in multiplicities:
        g = gcd(g, m)
    total = 0
    d = 1
    while d <= g:
        if g % d == 0:
            mult = 1
            rem = n // d
            for m in multiplicities:
                mult *= comb(rem, m // d)
                rem -= m // d
            total += _mobius(d) * mult
        d += 1
    return total // n


def _generator_contents(weight: int, count: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing tuples of odd generator weights >= 3 with the given sum."""
    def rec(remaining: int, slots: int, minimum: int):
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        w = minimum
        while w * slots <= remaining:
            for rest in rec(remaining - w, slots - 1, w):
                yield (w,) + rest
            w += 2
    yield from rec(weight, count, 3)


def lyndon_dim(weight: int, block_degree: int) -> int:
    """Dimension of one bigraded piece of the free Lie algebra on
    generators of odd weights 3, 5, 7, ...

    Graded so the block degree counts generators and the weight sums their
    weights; computed by the Witt/necklace formula over generator contents.
    """
    if block_degree < 1 or weight < 3:
        return 0
    total = 0
    for content in _generator_contents(weight, block_degree):
        mults: dict[int, int] = {}
        for w in content:
            mults[w] = mults.get(w, 0) + 1
        total += _lyndon_content_count(tuple(mults[w] for w in sorted(mults)))
    return total


def span_weight_tuples(weight: int, block_degree: int) -> list[tuple[int, ...]]:
    """All ordered generator-weight tuples for one bigraded piece, lex order."""
    out = set()
    for content in _generator_contents(weight, block_degree):
        out.update(itertools.permutations(content))
    return sorted(out)


def bracket_span(weight: int, block_degree: int) -> list[CPoly]:
    """Reduced left-nested brackets spanning one bigraded piece."""
    return [left_nested_reduced(ws) for ws in span_weight_tuples(weight, block_degree)]
