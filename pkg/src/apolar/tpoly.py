"""Univariate integer polynomials in ``t``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class TPoly:
    """Coefficients indexed by the power of ``t``; trailing zeros are trimmed."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_powers(cls, powers: Mapping[int, int]) -> TPoly:
        if not powers:
            return cls()
        c = [0] * (max(powers) + 1)
        for k, v in powers.items():
            c[k] += v
        return cls(tuple(c))

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> TPoly:
        return cls((0,) * k + (coeff,))

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for zero."""
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: TPoly) -> TPoly:
        m = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple(self.coeff(k) + other.coeff(k) for k in range(m)))

    def __sub__(self, other: TPoly) -> TPoly:
        m = max(len(self.coeffs), len(other.coeffs))
        return TPoly(tuple(self.coeff(k) - other.coeff(k) for k in range(m)))

    def scale(self, s: int) -> TPoly:
        return TPoly(tuple(s * x for x in self.coeffs))

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                body = str(abs(c))
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(("+ " if c > 0 else "- ") + body)
        return " ".join(terms)
