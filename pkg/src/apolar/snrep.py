"""Characters of the symmetric group.

Irreducible characters are evaluated with the Murnaghan-Nakayama rule on
beta-sets (removing a border strip of length ``r`` is moving one bead ``r``
steps down an abacus), and class functions are decomposed with the usual
inner product.
"""

from __future__ import annotations

import bisect
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Mapping

from .errors import DimensionMismatch, SizeMismatch
from .partitions import Partition, format_partition, partitions_of, syt_count
from .tpoly import TPoly


def z_rho(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type ``rho``."""
    return prod(j ** m * factorial(m) for j, m in Counter(rho).items())


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // z_rho(rho)


def class_representative(rho: Partition) -> tuple[int, ...]:
    """A permutation of cycle type ``rho`` as a 0-indexed image tuple.

    Cycles occupy consecutive blocks: ``(0 1 ... rho_1-1)(rho_1 ...)``.
    """
    perm = []
    start = 0
    for r in rho:
        perm.extend(start + (i + 1) % r for i in range(r))
        start += r
    return tuple(perm)


def cycle_type(perm: Iterable[int]) -> Partition:
    perm = list(perm)
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if not seen[i]:
            j, c = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                c += 1
            lengths.append(c)
    return tuple(sorted(lengths, reverse=True))


def _beta(lam: Partition) -> tuple[int, ...]:
    k = len(lam)
    return tuple(sorted(lam[i] + k - 1 - i for i in range(k)))


def _from_beta(beta: list[int]) -> Partition:
    k = len(beta)
    parts = [b - i for i, b in enumerate(sorted(beta))]
    return tuple(p for p in reversed(parts) if p > 0) if k else ()


@lru_cache(maxsize=None)
def _mn(lam: Partition, rho: Partition) -> int:
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    beta = _beta(lam)
    members = set(beta)
    total = 0
    for b in beta:
        t = b - r
        if t < 0 or t in members:
            continue
        # beads strictly between t and b give the leg length of the strip
        height = bisect.bisect_left(beta, b) - bisect.bisect_right(beta, t)
        new = sorted((members - {b}) | {t})
        total += (-1) ** height * _mn(_from_beta(new), rest)
    return total


def irr_char_value(lam: Partition, rho: Partition) -> int:
    """Value of the irreducible character indexed by ``lam`` on cycle type ``rho``."""
    if sum(lam) != sum(rho):
        raise SizeMismatch(f"|{lam}| != |{rho}|")
    return _mn(tuple(lam), tuple(sorted(rho, reverse=True)))


@lru_cache(maxsize=None)
def character_table(n: int) -> dict[Partition, dict[Partition, int]]:
    """``table[lam][rho]`` for all partitions of ``n``."""
    parts = partitions_of(n)
    return {lam: {rho: irr_char_value(lam, rho) for rho in parts} for lam in parts}


@dataclass(frozen=True)
class ClassFunction:
    n: int
    values: Mapping[Partition, Fraction]

    def __post_init__(self):
        if set(self.values) != set(partitions_of(self.n)):
            raise DimensionMismatch(f"class function keys must be the partitions of {self.n}")

    @classmethod
    def from_multiplicities(cls, n: int, mult: Mapping[Partition, int | Fraction]) -> ClassFunction:
        table = character_table(n)
        values = {rho: sum((Fraction(m) * table[lam][rho] for lam, m in mult.items()), Fraction(0))
                  for rho in partitions_of(n)}
        return cls(n, values)

    @classmethod
    def irreducible(cls, lam: Partition) -> ClassFunction:
        return cls.from_multiplicities(sum(lam), {tuple(lam): 1})

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return ClassFunction(self.n, {r: self.values[r] - other.values[r] for r in self.values})

    def dimension(self) -> Fraction:
        return self.values[(1,) * self.n]


def decompose(f: ClassFunction) -> dict[Partition, Fraction]:
    """Multiplicity of each irreducible in ``f``, as exact rationals."""
    table = character_table(f.n)
    nfact = factorial(f.n)
    out = {}
    for lam, row in table.items():
        s = sum((class_size(rho) * f.values[rho] * row[rho] for rho in row), Fraction(0))
        out[lam] = s / nfact
    return out


@dataclass(frozen=True)
class GradedCharacter:
    """Multiplicity generating functions in ``t``, one per irreducible.

    ``mult[lam].coeff(k)`` is the multiplicity of the irreducible of type
    ``lam`` in degree ``k``. Zero entries are dropped.
    """

    n: int
    mult: Mapping[Partition, TPoly] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "mult", {lam: p for lam, p in self.mult.items() if p})

    @classmethod
    def from_degrees(cls, n: int, degrees: Iterable[Mapping[Partition, int]]) -> GradedCharacter:
        powers: dict[Partition, dict[int, int]] = {}
        for k, comp in enumerate(degrees):
            for lam, m in comp.items():
                if m:
                    powers.setdefault(tuple(lam), {})[k] = int(m)
        return cls(n, {lam: TPoly.from_powers(p) for lam, p in powers.items()})

    @property
    def top_degree(self) -> int:
        return max((p.degree for p in self.mult.values()), default=-1)

    def component(self, k: int) -> dict[Partition, int]:
        """Degree-``k`` multiplicities, keyed in reverse-lexicographic order."""
        return {lam: self.mult[lam].coeff(k) for lam in partitions_of(self.n)
                if lam in self.mult and self.mult[lam].coeff(k)}

    def components(self, top: int | None = None) -> list[dict[Partition, int]]:
        top = self.top_degree if top is None else top
        return [self.component(k) for k in range(top + 1)]

    def hilbert(self) -> TPoly:
        """Replace each irreducible by its dimension."""
        acc = TPoly()
        for lam, p in self.mult.items():
            acc = acc + p.scale(syt_count(lam))
        return acc

    def to_json(self) -> dict[str, list[int]]:
        return {format_partition(lam): list(self.mult[lam].coeffs)
                for lam in partitions_of(self.n) if lam in self.mult}

    @classmethod
    def from_json(cls, n: int, data: Mapping[str, list[int]]) -> GradedCharacter:
        from .partitions import parse
        return cls(n, {parse(k): TPoly(tuple(v)) for k, v in data.items()})


def format_component(comp: Mapping[Partition, int]) -> str:
    """Plain ASCII rendering such as ``X[4] + 2*X[3,1]``."""
    if not comp:
        return "0"
    return " + ".join(f"X[{format_partition(lam)}]" if m == 1 else f"{m}*X[{format_partition(lam)}]"
                      for lam, m in comp.items())
