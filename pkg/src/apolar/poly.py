"""Sparse multivariate polynomials with rational coefficients.

Terms are keyed by exponent tuples. The same class models both the ring
``R`` and the apolarity module ``S``; :func:`diff` is the pairing between
them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterator, Mapping, Sequence

from .errors import AmbientMismatch, NotHomogeneous, ParseError

Exponent = tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(n: int, k: int) -> tuple[Exponent, ...]:
    """Exponent vectors of degree ``k`` in ``n`` variables, graded-lex descending.

    ``x1^k`` comes first and ``xn^k`` last.
    """
    if n == 0:
        return ((),) if k == 0 else ()
    if n == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        out.extend((first,) + rest for rest in monomials(n - 1, k - first))
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n: int, k: int) -> dict[Exponent, int]:
    return {b: i for i, b in enumerate(monomials(n, k))}


def multinomial(b: Sequence[int]) -> int:
    """``|b|! / (b_1! ... b_n!)``."""
    return factorial(sum(b)) // prod(factorial(x) for x in b)


def exp_factorial(b: Sequence[int]) -> int:
    return prod(factorial(x) for x in b)


def power_product(a: Sequence[Fraction], b: Sequence[int]) -> Fraction:
    """``a^b = a_1^b_1 ... a_n^b_n``."""
    out = Fraction(1)
    for x, e in zip(a, b):
        if e:
            out *= x ** e
    return out


def permute_exponent(perm: Sequence[int], b: Exponent) -> Exponent:
    """Exponent of ``sigma(x^b)`` where ``sigma`` sends variable ``i`` to ``perm[i]``."""
    out = [0] * len(b)
    for i, e in enumerate(b):
        out[perm[i]] = e
    return tuple(out)


@dataclass(frozen=True)
class Poly:
    n: int
    terms: Mapping[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for b, c in self.terms.items():
            b = tuple(b)
            if len(b) != self.n:
                raise AmbientMismatch(f"exponent {b} in a ring with {self.n} variables")
            c = Fraction(c)
            if c:
                clean[b] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def variable(cls, n: int, i: int) -> Poly:
        """The variable ``x_{i+1}`` (0-indexed ``i``)."""
        return cls(n, {tuple(int(j == i) for j in range(n)): 1})

    @classmethod
    def monomial(cls, b: Sequence[int], coeff=1) -> Poly:
        return cls(len(b), {tuple(b): coeff})

    @classmethod
    def constant(cls, n: int, c=1) -> Poly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def linear_form(cls, a: Sequence) -> Poly:
        n = len(a)
        return cls(n, {tuple(int(j == i) for j in range(n)): x for i, x in enumerate(a)})

    @classmethod
    def linear_power(cls, a: Sequence, d: int) -> Poly:
        """``(a_1 x_1 + ... + a_n x_n)^d`` by the multinomial theorem."""
        a = [Fraction(x) for x in a]
        return cls(len(a), {b: multinomial(b) * power_product(a, b) for b in monomials(len(a), d)})

    def __iter__(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def _check(self, other: Poly):
        if self.n != other.n:
            raise AmbientMismatch(f"{self.n} vs {other.n} variables")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out.get(b, 0) + c
        return Poly(self.n, out)

    def __neg__(self) -> Poly:
        return Poly(self.n, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, s) -> Poly:
        s = Fraction(s)
        return Poly(self.n, {b: s * c for b, c in self.terms.items()})

    def __mul__(self, other: Poly) -> Poly:
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        out: dict[Exponent, Fraction] = {}
        for b, c in self.terms.items():
            for e, f in other.terms.items():
                key = tuple(x + y for x, y in zip(b, e))
                out[key] = out.get(key, 0) + c * f
        return Poly(self.n, out)

    def __rmul__(self, scalar) -> Poly:
        return self.scale(scalar)

    def __pow__(self, k: int) -> Poly:
        out = Poly.constant(self.n)
        for _ in range(k):
            out = out * self
        return out

    def degrees(self) -> set[int]:
        return {sum(b) for b in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return max(self.degrees(), default=-1)

    def homogeneous_degree(self) -> int:
        ds = self.degrees()
        if len(ds) > 1:
            raise NotHomogeneous(f"polynomial has terms in degrees {sorted(ds)}")
        return ds.pop() if ds else 0

    def coefficient(self, b: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(b), Fraction(0))

    def coefficient_vector(self, k: int) -> tuple[Fraction, ...]:
        """Coefficients against :func:`monomials` ``(n, k)``."""
        return tuple(self.coefficient(b) for b in monomials(self.n, k))

    @classmethod
    def from_vector(cls, n: int, k: int, vec: Sequence) -> Poly:
        return cls(n, dict(zip(monomials(n, k), vec)))

    def permute(self, perm: Sequence[int]) -> Poly:
        """``sigma f`` for ``sigma`` given as an image tuple on variable indices."""
        return Poly(self.n, {permute_exponent(perm, b): c for b, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> Fraction:
        point = [Fraction(x) for x in point]
        return sum((c * power_product(point, b) for b, c in self.terms.items()), Fraction(0))

    def __str__(self) -> str:
        return format_poly(self)


def diff(f: Poly, g: Poly) -> Poly:
    """Differentiate ``g`` by ``f``: ``x^b`` acts on ``x^c`` as ``c!/(c-b)! x^(c-b)``."""
    if f.n != g.n:
        raise AmbientMismatch(f"{f.n} vs {g.n} variables")
    out: dict[Exponent, Fraction] = {}
    for b, cf in f.terms.items():
        for c, cg in g.terms.items():
            if all(ci >= bi for bi, ci in zip(b, c)):
                e = tuple(ci - bi for bi, ci in zip(b, c))
                scale = exp_factorial(c) // exp_factorial(e)
                out[e] = out.get(e, 0) + cf * cg * scale
    return Poly(f.n, out)


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(f: Poly) -> str:
    """Render as ``3*x1^2*x2 + 1/2*x3`` (graded-lex descending)."""
    if not f.terms:
        return "0"
    keys = sorted(f.terms, key=lambda b: (-sum(b), [-x for x in b]))
    parts = []
    for b in keys:
        c = f.terms[b]
        mono = "*".join(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(b) if e)
        mag = abs(c)
        if not mono:
            body = _format_coeff(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_format_coeff(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM = re.compile(r"^(?:(\d+(?:/\d+)?)(?:\*|$))?(.*)$")
_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_poly(text: str, n: int | None = None) -> Poly:
    """Parse the ``3*x1^2*x2 + 1/2*x3`` format.

    ``n`` defaults to the largest variable index that occurs.
    """
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty polynomial")
    chunks = re.findall(r"[+-]?[^+-]+", src)
    if "".join(chunks) != src:
        raise ParseError(f"cannot parse polynomial {text!r}")
    parsed = []
    top = 0
    for chunk in chunks:
        sign = -1 if chunk[0] == "-" else 1
        body = chunk.lstrip("+-")
        m = _TERM.match(body)
        coeff = Fraction(m.group(1)) if m.group(1) else Fraction(1)
        rest = m.group(2)
        exps: dict[int, int] = {}
        if rest:
            for factor in rest.split("*"):
                fm = _FACTOR.match(factor)
                if not fm or int(fm.group(1)) < 1:
                    raise ParseError(f"bad factor {factor!r} in {text!r}")
                i = int(fm.group(1))
                exps[i] = exps.get(i, 0) + int(fm.group(2) or 1)
                top = max(top, i)
        elif not m.group(1):
            raise ParseError(f"bad term {chunk!r} in {text!r}")
        parsed.append((sign * coeff, exps))
    if n is None:
        n = top
    elif top > n:
        raise ParseError(f"variable x{top} exceeds n = {n}")
    out = Poly(n)
    for c, exps in parsed:
        out = out + Poly(n, {tuple(exps.get(i + 1, 0) for i in range(n)): c})
    return out
