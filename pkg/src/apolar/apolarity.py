"""Brute-force apolarity computations for orbit sums of powers of linear forms.

Given ``a = (a_1, ..., a_n)`` and ``L = a_1 x_1 + ... + a_n x_n``, the socle
generator is ``F = sum of sigma_i L^d`` over the distinct permutations
``sigma_i a`` of ``a``. Everything here is computed directly from
catalecticant matrices and explicit traces, with no appeal to the character
formula, so it serves as an independent oracle for :mod:`apolar.charengine`.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from functools import lru_cache
from math import factorial, lcm, prod
from typing import Sequence

from ._concurrency import parallel_map
from .errors import (
    DegreeOutOfRange,
    NonIntegralMultiplicity,
    NotHomogeneous,
    NotSymmetric,
    TheoremHypothesisViolated,
)
from .exactlinalg import Matrix, SpanSolver, column_space_basis, rank
from .partitions import Partition, conjugate, mu_of, orbit_size, partitions_of
from .poly import Poly, diff, exp_factorial, monomial_index, monomials, multinomial, power_product
from .snrep import (
    ClassFunction,
    GradedCharacter,
    class_representative,
    cycle_type,
    decompose,
    irr_char_value,
)
from .tpoly import TPoly

log = logging.getLogger(__name__)


def distinct_permutations(values: Sequence) -> list[tuple]:
    """Distinct rearrangements of ``values`` in lexicographic order of positions
    in ``sorted(set(values))``."""
    keys = sorted(set(values))
    counts = [sum(1 for v in values if v == k) for k in keys]
    n = len(values)
    out: list[tuple] = []
    cur: list = []

    def rec():
        if len(cur) == n:
            out.append(tuple(cur))
            return
        for i, k in enumerate(keys):
            if counts[i]:
                counts[i] -= 1
                cur.append(k)
                rec()
                cur.pop()
                counts[i] += 1

    rec()
    return out


@dataclass(frozen=True)
class CoeffTuple:
    """Coefficients of the linear form ``L`` together with their shape."""

    a: tuple[Fraction, ...]
    mu: Partition = field(init=False)
    ell: int = field(init=False)

    def __post_init__(self):
        a = tuple(Fraction(x) for x in self.a)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "mu", mu_of(a))
        object.__setattr__(self, "ell", orbit_size(self.mu))

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def total(self) -> Fraction:
        return sum(self.a, Fraction(0))

    def require_nonzero_sum(self) -> CoeffTuple:
        if self.total == 0:
            raise TheoremHypothesisViolated(
                f"coefficients {format_tuple(self.a)} sum to zero; "
                f"the character formula requires '{TheoremHypothesisViolated.hypothesis}'"
            )
        return self

    def orbit(self) -> list[tuple[Fraction, ...]]:
        """The ``ell`` tuples ``sigma_i a``; these index the orbit basis of ``V``."""
        return distinct_permutations(self.a)


def format_tuple(a: Sequence[Fraction]) -> str:
    return ",".join(str(x) for x in a)


def _as_tuple(a) -> CoeffTuple:
    return a if isinstance(a, CoeffTuple) else CoeffTuple(tuple(a))


def orbit_sum(a, d: int) -> Poly:
    """``F = sum_i (sigma_i L)^d`` over the distinct permutations of ``a``."""
    a = _as_tuple(a)
    n = a.n
    out: dict = {}
    for b in monomials(n, d):
        m = multinomial(b)
        s = sum((power_product(p, b) for p in a.orbit()), Fraction(0))
        if s:
            out[b] = m * s
    return Poly(n, out)


def projective_orbit_size(a) -> int:
    """Number of distinct points ``[sigma a]`` in projective space."""
    a = _as_tuple(a)
    points = set()
    for p in a.orbit():
        lead = next((x for x in p if x), None)
        if lead is None:
            points.add(p)
        else:
            points.add(tuple(x / lead for x in p))
    return len(points)


def catalecticant_matrix(F: Poly, k: int) -> Matrix:
    """Matrix of ``f -> diff(f, F)`` from ``R_{d-k}`` (columns) to ``S_k`` (rows)."""
    if not F.is_homogeneous():
        raise NotHomogeneous("catalecticant needs a homogeneous form")
    d = F.homogeneous_degree()
    if not 0 <= k <= d:
        raise DegreeOutOfRange(f"k = {k} outside 0..{d}")
    n = F.n
    cols = [diff(Poly.monomial(b), F).coefficient_vector(k) for b in monomials(n, d - k)]
    return Matrix.from_columns(cols, rows=len(monomials(n, k)))


def hilbert_function_bruteforce(F: Poly) -> TPoly:
    """Ranks of all catalecticant matrices of ``F``."""
    if not F:
        raise DegreeOutOfRange("F must be nonzero")
    d = F.homogeneous_degree()
    return TPoly(tuple(parallel_map(lambda k: rank(catalecticant_matrix(F, k)), range(d + 1))))


def phi_matrix(a, k: int) -> Matrix:
    """``(dim S_k) x ell``; column ``i`` holds the coefficients of ``sigma_i L^k``."""
    a = _as_tuple(a)
    mons = monomials(a.n, k)
    cols = [[multinomial(b) * power_product(p, b) for b in mons] for p in a.orbit()]
    return Matrix.from_columns(cols, rows=len(mons))


def psi_matrix(a, k: int) -> Matrix:
    """``ell x (dim R_k)`` with entry ``(i, b) = binom(k, b) (sigma_i a)^b``."""
    a = _as_tuple(a)
    mons = monomials(a.n, k)
    return Matrix.from_rows([[multinomial(b) * power_product(p, b) for b in mons]
                             for p in a.orbit()], cols=len(mons))


def nu_matrix(n: int, k: int) -> Matrix:
    """Diagonal scaling ``x^b -> (b! / k!) x^b`` on ``R_k``."""
    return Matrix.diagonal([Fraction(exp_factorial(b), factorial(k)) for b in monomials(n, k)])


def theta_factored(a, d: int, k: int) -> Matrix:
    """``(d!/k!) phi_k psi_{d-k} nu_{d-k}``, the factored catalecticant."""
    a = _as_tuple(a)
    return (phi_matrix(a, k) @ psi_matrix(a, d - k) @ nu_matrix(a.n, d - k)) * Fraction(
        factorial(d), factorial(k))


def _permutation_index_map(n: int, k: int, perm: Sequence[int]) -> list[int]:
    """``out[i]`` is the position of ``sigma(b_i)`` in the degree-``k`` basis."""
    idx = monomial_index(n, k)
    out = []
    for b in monomials(n, k):
        img = [0] * n
        for i, e in enumerate(b):
            img[perm[i]] = e
        out.append(idx[tuple(img)])
    return out


def _permuted(v: Sequence[Fraction], where: Sequence[int]) -> list[Fraction]:
    moved = [Fraction(0)] * len(v)
    for i, x in enumerate(v):
        if x:
            moved[where[i]] = x
    return moved


def _generators(n: int) -> list[tuple[int, ...]]:
    """A transposition and an ``n``-cycle; together they generate ``S_n``."""
    if n < 2:
        return []
    swap = (1, 0) + tuple(range(2, n))
    cycle = tuple((i + 1) % n for i in range(n))
    return [swap] if n == 2 else [swap, cycle]


def span_character(basis: Matrix, n: int, k: int, stable: bool = False) -> ClassFunction:
    """Character of the ``S_n``-stable subspace of ``S_k`` spanned by the columns of ``basis``.

    Unless the caller has already certified that the span is stable
    (``stable=True``), stability is verified exactly under a generating set of
    ``S_n`` and :class:`NotInSpan` is raised if it fails. Then for each cycle
    type one representative permutation is applied to every basis vector and
    the diagonal coordinate is read off, which gives the trace.
    """
    if basis.cols == 0:
        return ClassFunction(n, {rho: Fraction(0) for rho in partitions_of(n)})
    solver = SpanSolver(basis)
    cols = basis.to_columns()
    if not stable:
        for g in _generators(n):
            where = _permutation_index_map(n, k, g)
            for v in cols:
                solver.coordinates(_permuted(v, where))
    values = {}
    for rho in partitions_of(n):
        where = _permutation_index_map(n, k, class_representative(rho))
        values[rho] = sum((solver.coordinate(_permuted(v, where), j) for j, v in enumerate(cols)),
                          Fraction(0))
    return ClassFunction(n, values)


def integral_decomposition(f: ClassFunction) -> dict[Partition, int]:
    """Decompose ``f``; raise if any multiplicity is not a nonnegative integer."""
    out = {}
    for lam, m in decompose(f).items():
        if m.denominator != 1 or m < 0:
            raise NonIntegralMultiplicity(f"multiplicity {m} for {lam}")
        if m:
            out[lam] = int(m)
    return out


def is_symmetric(F: Poly) -> bool:
    return all(F.permute(g) == F for g in _generators(F.n))


def graded_character_of_form(F: Poly) -> GradedCharacter:
    """Graded character of ``M = <F>`` for an arbitrary symmetric form ``F``.

    Differentiation commutes with permuting variables, so every ``M_k`` is
    stable once ``F`` is symmetric; that is checked once here instead of per
    basis vector.
    """
    d = F.homogeneous_degree()
    n = F.n
    if not is_symmetric(F):
        raise NotSymmetric("F is not a symmetric polynomial")

    def piece(k: int) -> dict[Partition, int]:
        basis = column_space_basis(catalecticant_matrix(F, k))
        return integral_decomposition(span_character(basis, n, k, stable=True))

    return GradedCharacter.from_degrees(n, parallel_map(piece, range(d + 1)))


def graded_character_bruteforce(a, d: int) -> GradedCharacter:
    """Graded character of ``M_k = image(theta_{F,k})``, ``k = 0..d``, by traces."""
    a = _as_tuple(a)
    if d < 0:
        raise DegreeOutOfRange("d must be nonnegative")
    if d == 0:
        return GradedCharacter.from_degrees(a.n, [{(a.n,): 1}])
    if a.total == 0:
        log.warning("coefficients sum to zero; embedding dimension may drop below n")
    return graded_character_of_form(orbit_sum(a, d))


def gram_matrix(a, k: int) -> Matrix:
    """``ell x ell`` matrix with entries ``<sigma_i a, sigma_j a>^k``.

    Up to the factor ``k!`` this is the apolar pairing of ``sigma_i L^k`` with
    ``sigma_j L^k``. That pairing is positive definite on real forms, so for
    any matrix ``P`` the rank of ``P^T G P`` equals the rank of ``phi_k P``.
    """
    a = _as_tuple(a)
    orbit = a.orbit()
    return Matrix.from_rows([[sum((x * y for x, y in zip(p, q)), Fraction(0)) ** k for q in orbit]
                             for p in orbit])


def _orbit_action(a: CoeffTuple, perm: Sequence[int]) -> list[int]:
    """Index permutation of the orbit induced by ``x_i -> x_{perm[i]}``."""
    orbit = a.orbit()
    where = {p: i for i, p in enumerate(orbit)}
    out = []
    for p in orbit:
        img = [None] * len(p)
        for i, x in enumerate(p):
            img[perm[i]] = x
        out.append(where[tuple(img)])
    return out


def _sign(perm: Sequence[int]) -> int:
    return -1 if (len(perm) - len(cycle_type(perm))) % 2 else 1


def young_subgroup(nu: Partition) -> list[tuple[int, ...]]:
    """All elements of ``S_nu1 x S_nu2 x ...`` acting on consecutive blocks."""
    blocks, start = [], 0
    for part in nu:
        blocks.append(list(permutations(range(start, start + part))))
        start += part
    return [tuple(i for block in choice for i in block) for choice in product(*blocks)]


def _invariant_vectors(a: CoeffTuple, group, twist: bool) -> list[dict[int, int]]:
    """A spanning set of the ``group``-invariants (sign-twisted if asked) of ``V``."""
    actions = [(_orbit_action(a, h), _sign(h) if twist else 1) for h in group]
    seen, out = set(), []
    for i in range(a.ell):
        v: dict[int, int] = {}
        for where, s in actions:
            v[where[i]] = v.get(where[i], 0) + s
        v = {j: c for j, c in v.items() if c}
        if not v:
            continue
        lead = v[min(v)]
        key = tuple(sorted((j, c * lead) for j, c in v.items()))
        if key not in seen:
            seen.add(key)
            out.append(v)
    return out


def _equations(n: int):
    """One (subgroup, twist, target) per irreducible, preferring large subgroups.

    Each ``lam`` is detected either by the trivial invariants of ``S_lam`` or
    the sign-twisted invariants of ``S_lam'``, whichever subgroup is bigger.
    """
    out = []
    for lam in partitions_of(n):
        conj = conjugate(lam)
        size = prod(factorial(x) for x in lam)
        if size >= prod(factorial(x) for x in conj):
            out.append((lam, False))
        else:
            out.append((conj, True))
    return out


@lru_cache(maxsize=32)
def _invariant_setup(a: CoeffTuple):
    """Degree-independent data: invariant spanning sets and reciprocity rows."""
    lams = partitions_of(a.n)
    blocks = []
    for nu, twist in _equations(a.n):
        group = young_subgroup(nu)
        types: dict[tuple[Partition, int], int] = {}
        for h in group:
            key = (cycle_type(h), _sign(h) if twist else 1)
            types[key] = types.get(key, 0) + 1
        # Frobenius reciprocity: multiplicity of chi^lam (times sign) in 1 induced from the subgroup
        row = [Fraction(sum(c * s * irr_char_value(lam, rho) for (rho, s), c in types.items()),
                        len(group)) for lam in lams]
        blocks.append((_invariant_vectors(a, group, twist), row))
    solver = SpanSolver(Matrix.from_rows([row for _, row in blocks], cols=len(lams)))
    return lams, [v for v, _ in blocks], solver


def _invariant_character(a: CoeffTuple, k: int) -> ClassFunction:
    lams, blocks, solver = _invariant_setup(a)
    # rescaling a to integers multiplies every sigma_i L^k by the same constant
    den = lcm(*(x.denominator for x in a.a))
    orbit = [tuple(int(x * den) for x in p) for p in a.orbit()]
    gram = [[sum(x * y for x, y in zip(p, q)) ** k for q in orbit] for p in orbit]
    dims = []
    for vecs in blocks:
        restricted = [[sum(cv * cw * gram[p][q] for p, cv in v.items() for q, cw in w.items())
                       for w in vecs] for v in vecs]
        dims.append(rank(Matrix.from_rows(restricted, cols=len(vecs))) if vecs else 0)
    mult = solver.coordinates(dims)
    return ClassFunction.from_multiplicities(a.n, dict(zip(lams, mult)))


def orbit_power_character(a, k: int, method: str = "invariants") -> ClassFunction:
    """Character of ``N_k``, the span of the ``sigma_i L^k``.

    ``method="direct"`` takes traces inside ``S_k`` on a basis of ``N_k``.
    ``"invariants"`` never builds that basis: ``N_k`` is the image of the
    permutation module ``V`` under ``phi_k``, so its invariants (plain or
    sign-twisted) under a Young subgroup are the image of those of ``V``.
    Their dimensions are ranks of small restricted Gram matrices, and the
    multiplicities follow from one square linear system.
    """
    a = _as_tuple(a).require_nonzero_sum()
    if method == "invariants":
        return _invariant_character(a, k)
    if method != "direct":
        raise ValueError(f"unknown method {method!r}")
    basis = column_space_basis(phi_matrix(a, k))
    # the columns of phi_k are the orbit vectors, which S_n permutes among themselves
    return span_character(basis, a.n, k, stable=True)


def orbit_power_graded_character(a, top: int, method: str = "invariants") -> GradedCharacter:
    """First differences ``chi(N_k) - chi(N_{k-1})`` for ``k = 0..top``."""
    a = _as_tuple(a).require_nonzero_sum()
    chars = parallel_map(lambda k: orbit_power_character(a, k, method), range(top + 1))
    comps = [integral_decomposition(chars[0])]
    for k in range(1, top + 1):
        comps.append(integral_decomposition(chars[k] - chars[k - 1]))
    return GradedCharacter.from_degrees(a.n, comps)
