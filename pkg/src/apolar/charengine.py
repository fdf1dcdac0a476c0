"""Graded character and Hilbert series of ``M = <F>`` from ``(mu, d)`` alone.

The character of ``M_k`` for ``k <= d/2`` is the character of ``(R_mu)_{<=k}``,
obtained by cumulative summation of the graded character of ``R_mu``; the
upper half is the mirror image. :func:`verify` runs this formula against the
brute-force oracle in :mod:`apolar.apolarity`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .apolarity import CoeffTuple, graded_character_bruteforce
from .errors import DegenerateDegree, LimitExceeded
from .partitions import Partition, format_partition, n_stat, orbit_size, partitions_of, validate
from .snrep import GradedCharacter
from .tableaux import r_mu_character
from .tpoly import TPoly

MAX_DEGREE = 64
MAX_FORMULA_N = 12
MAX_ORACLE_N = 6


def _check_degree(d: int):
    if d < 0:
        raise DegenerateDegree(f"degree must be nonnegative, got {d}")
    if d > MAX_DEGREE:
        raise LimitExceeded(f"degree {d} exceeds the limit {MAX_DEGREE}")


def graded_character_formula(mu: Partition, d: int) -> GradedCharacter:
    mu = validate(mu)
    n = sum(mu)
    _check_degree(d)
    if n > MAX_FORMULA_N:
        raise LimitExceeded(f"n = {n} exceeds the formula-path limit {MAX_FORMULA_N}")
    if d == 0:
        return GradedCharacter.from_degrees(n, [{(n,): 1}])
    r_mu = r_mu_character(mu)
    half = d // 2
    lower: list[dict[Partition, int]] = []
    running: dict[Partition, int] = {}
    for k in range(half + 1):
        for lam, m in r_mu.component(k).items():
            running[lam] = running.get(lam, 0) + m
        lower.append(dict(running))
    degrees = []
    for k in range(d + 1):
        degrees.append(lower[k] if k <= half else lower[d - k])
    return GradedCharacter.from_degrees(n, degrees)


def hilbert_series_formula(mu: Partition, d: int) -> TPoly:
    return graded_character_formula(mu, d).hilbert()


def waring_certificate(mu: Partition, d: int) -> int | None:
    """Certified Waring rank ``ell`` when ``d >= 2 n(mu)``, else ``None``."""
    mu = validate(mu)
    return orbit_size(mu) if d >= 2 * n_stat(mu) else None


@dataclass(frozen=True)
class CharacterReport:
    mu: Partition
    d: int
    character: GradedCharacter
    hilbert: TPoly
    ell: int
    n_mu: int
    waring_rank_known: int | None

    def to_json(self) -> dict[str, Any]:
        return {
            "mu": format_partition(self.mu),
            "d": self.d,
            "ell": self.ell,
            "n_mu": self.n_mu,
            "waring_rank_known": self.waring_rank_known,
            "hilbert": [self.hilbert.coeff(k) for k in range(self.d + 1)],
            "character": self.character.to_json(),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=False)


def character_report(mu: Partition, d: int) -> CharacterReport:
    mu = validate(mu)
    char = graded_character_formula(mu, d)
    return CharacterReport(
        mu=mu,
        d=d,
        character=char,
        hilbert=char.hilbert(),
        ell=orbit_size(mu),
        n_mu=n_stat(mu),
        waring_rank_known=waring_certificate(mu, d),
    )


@dataclass(frozen=True)
class CharDiff:
    lam: Partition
    formula: int
    oracle: int

    def to_json(self) -> dict[str, Any]:
        return {"lambda": format_partition(self.lam), "formula": self.formula, "oracle": self.oracle}


@dataclass(frozen=True)
class DegreeComparison:
    k: int
    hilbert_formula: int
    hilbert_oracle: int
    char_diffs: tuple[CharDiff, ...] = ()

    @property
    def agree(self) -> bool:
        return self.hilbert_formula == self.hilbert_oracle and not self.char_diffs

    def to_json(self) -> dict[str, Any]:
        return {
            "k": self.k,
            "hilbert_formula": self.hilbert_formula,
            "hilbert_oracle": self.hilbert_oracle,
            "char_diffs": [c.to_json() for c in self.char_diffs],
        }


@dataclass(frozen=True)
class VerificationReport:
    a: tuple
    mu: Partition
    d: int
    per_degree: tuple[DegreeComparison, ...] = field(default_factory=tuple)
    formula: GradedCharacter | None = None
    oracle: GradedCharacter | None = None

    @property
    def agree(self) -> bool:
        return all(c.agree for c in self.per_degree)

    def to_json(self) -> dict[str, Any]:
        return {
            "mu": format_partition(self.mu),
            "d": self.d,
            "agree": self.agree,
            "per_degree": [c.to_json() for c in self.per_degree],
        }


def compare(formula: GradedCharacter, oracle: GradedCharacter, d: int) -> list[DegreeComparison]:
    hf, ho = formula.hilbert(), oracle.hilbert()
    out = []
    for k in range(d + 1):
        fk, ok = formula.component(k), oracle.component(k)
        diffs = tuple(CharDiff(lam, fk.get(lam, 0), ok.get(lam, 0))
                      for lam in partitions_of(formula.n)
                      if fk.get(lam, 0) != ok.get(lam, 0))
        out.append(DegreeComparison(k, hf.coeff(k), ho.coeff(k), diffs))
    return out


def verify(a, d: int) -> VerificationReport:
    """Compare the formula for ``mu_of(a)`` with the oracle run on ``a`` itself."""
    a = a if isinstance(a, CoeffTuple) else CoeffTuple(tuple(a))
    a.require_nonzero_sum()
    _check_degree(d)
    if a.n > MAX_ORACLE_N:
        raise LimitExceeded(f"n = {a.n} exceeds the oracle-path limit {MAX_ORACLE_N}")
    formula = graded_character_formula(a.mu, d)
    oracle = graded_character_bruteforce(a, d)
    return VerificationReport(a.a, a.mu, d, tuple(compare(formula, oracle, d)), formula, oracle)
