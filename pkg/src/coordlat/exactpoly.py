"""Exact dense polynomial arithmetic over arbitrary-precision rationals.

Coefficients are `fractions.Fraction` values stored low degree first, so
index k holds the coefficient of x^k.  The zero polynomial is the empty
tuple; any other coefficient tuple ends in a nonzero entry.  Everything
here is immutable and pure, so values are safe to share across threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Polynomial",
    "ZERO",
    "ONE",
    "X",
    "poly",
    "arith",
    "power",
    "eval_at",
    "derivative",
    "squarefree_part",
    "squarefree_decomposition",
    "series_expand",
    "legendre",
    "binom",
    "double_factorial",
    "combinatorial",
]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 outside the range 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def double_factorial(m: int) -> int:
    """m!! = m(m-2)(m-4)...; the empty products 0!! and (-1)!! are both 1."""
    if m < -1:
        raise ValueError(f"double factorial needs m >= -1, got {m}")
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def combinatorial(kind: str, *args: int) -> int:
    """Dispatch by name: combinatorial('binom', n, k) or ('double_factorial', m)."""
    if kind == "binom":
        return binom(*args)
    if kind == "double_factorial":
        return double_factorial(*args)
    raise ValueError(f"unknown combinatorial kind {kind!r}")


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coeffs[k] is the coefficient of x^k."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        cs = [Fraction(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(tuple(out))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        # schoolbook is fine at the degrees used here
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Polynomial(tuple(out))

    def __pow__(self, k: int) -> "Polynomial":
        return power(self, k)

    def scale(self, s: Scalar) -> "Polynomial":
        return Polynomial(tuple(c * Fraction(s) for c in self.coeffs))

    def eval(self, r: Scalar) -> Fraction:
        return eval_at(self, r)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*x" if c != 1 else "x")
            else:
                parts.append(f"{c}*x^{k}" if c != 1 else f"x^{k}")
        return " + ".join(parts)


ZERO = Polynomial(())
ONE = Polynomial((Fraction(1),))
X = Polynomial((Fraction(0), Fraction(1)))


def poly(coeffs: Iterable[Scalar]) -> Polynomial:
    """Build a Polynomial from any iterable of ints or Fractions."""
    return Polynomial(tuple(Fraction(c) for c in coeffs))


def arith(p: Polynomial, q: Polynomial, kind: str) -> Polynomial:
    """Exact add/sub/mul selected by name."""
    if kind == "add":
        return p + q
    if kind == "sub":
        return p - q
    if kind == "mul":
        return p * q
    raise ValueError(f"unknown arith kind {kind!r}")


def power(p: Polynomial, k: int) -> Polynomial:
    """p^k by repeated squaring; p^0 is the constant 1."""
    if k < 0:
        raise ValueError(f"power needs k >= 0, got {k}")
    result = ONE
    base = p
    while k:
        if k & 1:
            result = result * base
        base = base * base if k > 1 else base
        k >>= 1
    return result


def eval_at(p: Polynomial, r: Scalar) -> Fraction:
    """Exact value p(r) by Horner's rule."""
    r = Fraction(r)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * r + c
    return acc


def derivative(p: Polynomial) -> Polynomial:
    """Exact formal derivative."""
    return Polynomial(tuple(k * c for k, c in enumerate(p.coeffs) if k > 0))


# ---------------------------------------------------------------------------
# integer-coefficient helpers
#
# Squarefree decomposition and gcds run over primitive integer coefficient
# lists: a common positive rational factor never changes roots, and integer
# arithmetic with content stripping keeps coefficient growth tame.
# ---------------------------------------------------------------------------


def primitive_integer_coeffs(p: Polynomial) -> tuple[int, ...]:
    """Scale p by a positive rational to primitive integer coefficients.

    The sign of the leading coefficient is preserved.
    """
    if p.is_zero:
        return ()
    den = 1
    for c in p.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return tuple(v // g for v in ints)


def _int_derivative(c: list[int]) -> list[int]:
    return [k * c[k] for k in range(1, len(c))]


def _int_primitive(c: list[int]) -> list[int]:
    g = 0
    for v in c:
        g = math.gcd(g, v)
        if g == 1:
            return c
    return [v // g for v in c] if g > 1 else c


def _int_prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b, scaled to a positive multiple of rem(a, b)."""
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    negate = False
    while len(r) - 1 >= db:
        lr = r.pop()
        r = [lb * c for c in r]
        shift = len(r) - db
        for i, c in enumerate(b[:-1]):
            r[shift + i] -= lr * c
        while r and r[-1] == 0:
            r.pop()
        if lb < 0:
            negate = not negate
        if not r:
            break
    return [-x for x in r] if negate else r


def _int_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd of integer polynomials, positive leading coefficient."""
    a = _int_primitive(list(a))
    b = _int_primitive(list(b))
    while b:
        r = _int_prem(a, b)
        a, b = b, _int_primitive(r)
    if a and a[-1] < 0:
        a = [-x for x in a]
    return a


def _int_exact_div(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient a / b of integer polynomials; b must divide a."""
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    out = [0] * (len(a) - len(b) + 1)
    r = list(a)
    lb = b[-1]
    for k in range(len(out) - 1, -1, -1):
        if len(r) - 1 < len(b) - 1 + k:
            continue
        q, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("division is not exact")
        out[k] = q
        for i, c in enumerate(b):
            r[k + i] -= q * c
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ArithmeticError("division is not exact")
    return out


def squarefree_decomposition(p: Polynomial) -> tuple[tuple[Polynomial, int], ...]:
    """Yun decomposition: pairwise-coprime squarefree factors with multiplicities.

    Returns ((g_1, m_1), ...) where p is a positive rational times the
    product of g_i^{m_i}, each g_i is primitive with positive leading
    coefficient, and the m_i are distinct.  Ordered by multiplicity.
    """
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree decomposition")
    c = list(primitive_integer_coeffs(p))
    if c[-1] < 0:
        c = [-x for x in c]
    if len(c) == 1:
        return ()
    g = _int_gcd(c, _int_derivative(c))
    if len(g) == 1:
        return ((poly(c), 1),)
    factors: list[tuple[Polynomial, int]] = []
    w = _int_exact_div(c, g)
    y = _int_exact_div(_int_derivative(c), g)
    m = 1
    while len(w) > 1:
        dw = _int_derivative(w)
        z = [
            (y[i] if i < len(y) else 0) - (dw[i] if i < len(dw) else 0)
            for i in range(max(len(y), len(dw)))
        ]
        while z and z[-1] == 0:
            z.pop()
        gi = _int_gcd(w, z)
        if len(gi) > 1:
            factors.append((poly(gi), m))
        w = _int_exact_div(w, gi)
        y = _int_exact_div(z, gi) if z else []
        m += 1
    return tuple(factors)


def squarefree_part(
    p: Polynomial,
) -> tuple[Polynomial, tuple[tuple[int, int], ...]]:
    """Squarefree part of p plus its multiplicity profile.

    The part is p / gcd(p, p'), primitive with positive leading
    coefficient.  The profile lists (degree sum, multiplicity) pairs for
    the squarefree factors, highest multiplicity first.
    """
    factors = squarefree_decomposition(p)
    sf = ONE
    for f, _ in factors:
        sf = sf * f
    profile = tuple(
        (f.degree, m) for f, m in sorted(factors, key=lambda fm: -fm[1])
    )
    return sf, profile


def series_expand(h: Polynomial, d: int, K: int) -> tuple[Fraction, ...]:
    """First K+1 coefficients of the power series h(x) / (1-x)^d.

    Coefficient k is sum_j h_j * binom(d-1+k-j, d-1).
    """
    if d < 1:
        raise ValueError(f"series_expand needs d >= 1, got {d}")
    if K < 0:
        raise ValueError(f"series_expand needs K >= 0, got {K}")
    out = []
    for k in range(K + 1):
        acc = Fraction(0)
        for j, hj in enumerate(h.coeffs):
            if j > k:
                break
            acc += hj * binom(d - 1 + k - j, d - 1)
        out.append(acc)
    return tuple(out)


def legendre(n: int) -> Polynomial:
    """Legendre polynomial of degree n with exact rational coefficients.

    Three-term recurrence (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1},
    normalized so every P_n(1) = 1.
    """
    if n < 0:
        raise ValueError(f"legendre needs n >= 0, got {n}")
    if n == 0:
        return ONE
    prev, cur = ONE, X
    for k in range(1, n):
        nxt = (X * cur).scale(Fraction(2 * k + 1, k + 1)) - prev.scale(
            Fraction(k, k + 1)
        )
        prev, cur = cur, nxt
    return cur
