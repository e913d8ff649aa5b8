"""Bivariate polynomials of bounded total degree.

Coefficients are stored in graded-lexicographic order with x before y:
``1, x, y, x^2, xy, y^2, x^3, ...``.  The monomial ``x^(d-j) y^j`` sits at
index ``d*(d+1)/2 + j``, so truncating to a smaller degree bound is a prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import lcm
from typing import Mapping

from .errors import DegreeOverflow
from .geometry import Line, Point, as_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


def dimension(n: int) -> int:
    """Number of monomials of total degree at most ``n``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return (n + 1) * (n + 2) // 2


@lru_cache(maxsize=None)
def monomials(n: int) -> tuple[tuple[int, int], ...]:
    """Exponent pairs (i, j) for x^i y^j in graded-lex order."""
    return tuple((d - j, j) for d in range(n + 1) for j in range(d + 1))


def monomial_index(i: int, j: int) -> int:
    d = i + j
    return d * (d + 1) // 2 + j


@dataclass(frozen=True)
class Poly2:
    bound: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_scalar(c) for c in self.coeffs)
        if len(coeffs) != dimension(self.bound):
            raise ValueError(
                f"degree bound {self.bound} needs {dimension(self.bound)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, bound: int) -> "Poly2":
        return cls(bound, (ZERO,) * dimension(bound))

    @classmethod
    def constant(cls, value, bound: int = 0) -> "Poly2":
        return cls(bound, (as_scalar(value),) + (ZERO,) * (dimension(bound) - 1))

    @classmethod
    def from_terms(cls, bound: int, terms: Mapping[tuple[int, int], object]) -> "Poly2":
        """Build from ``{(i, j): coefficient}`` meaning ``coef * x^i * y^j``."""
        coeffs = [ZERO] * dimension(bound)
        for (i, j), c in terms.items():
            if i + j > bound:
                raise DegreeOverflow(f"monomial x^{i} y^{j} exceeds degree bound {bound}")
            coeffs[monomial_index(i, j)] += as_scalar(c)
        return cls(bound, tuple(coeffs))

    @classmethod
    def from_line(cls, line: Line) -> "Poly2":
        return cls(1, (Fraction(line.c), Fraction(line.a), Fraction(line.b)))

    @cached_property
    def denominator(self) -> int:
        return lcm(*(c.denominator for c in self.coeffs))

    @cached_property
    def integer_coeffs(self) -> tuple[int, ...]:
        """Coefficients scaled by :attr:`denominator`."""
        den = self.denominator
        return tuple(c.numerator * (den // c.denominator) for c in self.coeffs)

    def terms(self) -> dict[tuple[int, int], Fraction]:
        return {m: c for m, c in zip(monomials(self.bound), self.coeffs) if c != 0}

    @property
    def degree(self) -> int:
        """Effective total degree; -1 for the zero polynomial."""
        for idx in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[idx] != 0:
                i, j = monomials(self.bound)[idx]
                return i + j
        return -1

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def with_bound(self, bound: int) -> "Poly2":
        """Same polynomial, re-expressed with another degree bound."""
        if bound >= self.bound:
            return Poly2(bound, self.coeffs + (ZERO,) * (dimension(bound) - len(self.coeffs)))
        if self.degree > bound:
            raise DegreeOverflow(f"degree {self.degree} does not fit bound {bound}")
        return Poly2(bound, self.coeffs[: dimension(bound)])

    def homogeneous(self, d: int) -> list[Fraction]:
        """Coefficients of x^d, x^(d-1) y, ..., y^d."""
        start = d * (d + 1) // 2
        return list(self.coeffs[start : start + d + 1])

    def __call__(self, pt: Point) -> Fraction:
        return evaluate(self, pt)

    def __add__(self, other: "Poly2") -> "Poly2":
        n = max(self.bound, other.bound)
        a, b = self.with_bound(n), other.with_bound(n)
        return Poly2(n, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "Poly2":
        return Poly2(self.bound, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "Poly2") -> "Poly2":
        return self + (-other)

    def scale(self, factor) -> "Poly2":
        factor = as_scalar(factor)
        return Poly2(self.bound, tuple(c * factor for c in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, Poly2):
            return self.scale(other)
        n = self.bound + other.bound
        coeffs = [ZERO] * dimension(n)
        for (i1, j1), c1 in self.terms().items():
            for (i2, j2), c2 in other.terms().items():
                coeffs[monomial_index(i1 + i2, j1 + j2)] += c1 * c2
        return Poly2(n, tuple(coeffs))

    __rmul__ = scale

    def __str__(self):
        parts = []
        for (i, j), c in self.terms().items():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("x", i), ("y", j)) if e
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class Poly1:
    """Univariate polynomial in a line parameter t, ascending powers."""

    bound: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.bound + 1:
            raise ValueError("Poly1 needs bound + 1 coefficients")

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __call__(self, t) -> Fraction:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def evaluate(p: Poly2, pt: Point) -> Fraction:
    x, y = pt.x, pt.y
    total = ZERO
    # Horner over degrees would save little at these sizes; powers are cached.
    xs = [ONE]
    ys = [ONE]
    for _ in range(p.bound):
        xs.append(xs[-1] * x)
        ys.append(ys[-1] * y)
    for (i, j), c in zip(monomials(p.bound), p.coeffs):
        if c:
            total += c * xs[i] * ys[j]
    return total


def multiply_linear(p: Poly2, line: Line, bound: int | None = None) -> Poly2:
    """Product ``line * p`` with degree bound ``bound`` (default p.bound + 1)."""
    n = p.bound + 1 if bound is None else bound
    if p.degree > n - 1:
        raise DegreeOverflow(f"degree {p.degree} times a line exceeds bound {n}")
    coeffs = [ZERO] * dimension(n)
    for (i, j), c in p.terms().items():
        coeffs[monomial_index(i, j)] += line.c * c
        coeffs[monomial_index(i + 1, j)] += line.a * c
        coeffs[monomial_index(i, j + 1)] += line.b * c
    return Poly2(n, tuple(coeffs))


def _restriction_integers(p: Poly2, line: Line) -> tuple[list[int], int]:
    """Integer numerators and common denominator of ``restrict_to_line(p, line)``.

    With b != 0 the parametrization is x = b t, y = -c/b - a t, so
    b^n * p(x, y) = sum P_ij (b t)^i (-c - a b t)^j b^(n-j) over integers,
    where P = D * p has integer coefficients.  The vertical case is analogous
    with a x = -c and y = t.
    """
    n = p.bound
    den = p.denominator
    ints = p.integer_coeffs
    a, b, c = line.a, line.b, line.c
    out = [0] * (n + 1)
    if b != 0:
        s = b
        ypow = [[1]]
        step = (-c, -a * b)
        for _ in range(n):
            prev = ypow[-1]
            nxt = [0] * (len(prev) + 1)
            for k, v in enumerate(prev):
                nxt[k] += v * step[0]
                nxt[k + 1] += v * step[1]
            ypow.append(nxt)
        spow = [s**k for k in range(2 * n + 1)]
        for (i, j), coef in zip(monomials(n), ints):
            if not coef:
                continue
            # b^n x^i y^j = (b t)^i (b y)^j b^(n-j) = b^(n-j+i) t^i (b y)^j
            factor = coef * spow[n - j + i]
            for k, v in enumerate(ypow[j]):
                out[i + k] += factor * v
    else:
        s = a
        xpow = [(-c) ** k for k in range(n + 1)]
        spow = [s**k for k in range(n + 1)]
        for (i, j), coef in zip(monomials(n), ints):
            if coef:
                # (a x)^i * a^(n-i) * t^j
                out[j] += coef * xpow[i] * spow[n - i]
    return out, den * s**n


def restrict_to_line(p: Poly2, line: Line) -> Poly1:
    """The univariate polynomial ``t -> p(P0 + t*D)``.

    P0 and D are the standard parametrization of ``line``
    (see :func:`geometry.point_on_line`).
    """
    nums, den = _restriction_integers(p, line)
    return Poly1(p.bound, tuple(Fraction(v, den) for v in nums))


def vanishes_on_line(p: Poly2, line: Line) -> bool:
    nums, _ = _restriction_integers(p, line)
    return not any(nums)


def divide_by_line(p: Poly2, line: Line) -> Poly2 | None:
    """Exact quotient of ``p`` by the linear form of ``line``, or None.

    The quotient has degree bound ``p.bound - 1``. Divisibility is decided by
    the restriction to the line vanishing identically; the quotient itself is
    obtained by peeling homogeneous components from the top degree down.
    """
    if p.bound == 0:
        return Poly2.zero(0) if p.is_zero() else None
    if not vanishes_on_line(p, line):
        return None
    a, b, c = line.a, line.b, line.c
    n = p.bound
    q = [ZERO] * dimension(n - 1)
    # carry holds p_d - c*q_d for the degree currently being peeled
    carry = p.homogeneous(n)
    for d in range(n, 0, -1):
        # carry = (a x + b y) * q_{d-1}; solve for q_{d-1} coefficientwise
        qd = [ZERO] * d
        if a != 0:
            for j in range(d):
                prev = qd[j - 1] if j else ZERO
                qd[j] = (carry[j] - b * prev) / a
        else:
            for j in range(d):
                qd[j] = carry[j + 1] / b
        start = (d - 1) * d // 2
        q[start : start + d] = qd
        lower = p.homogeneous(d - 1)
        carry = [lower[j] - c * qd[j] for j in range(d)]
    quotient = Poly2(n - 1, tuple(q))
    # residual check guards the restriction-based decision
    if multiply_linear(quotient, line, n) != p:
        return None
    return quotient
