from functools import lru_cache
from itertools import permutations

import pytest

from apolar.errors import NonPartitionContent, ShapeContentMismatch
from apolar.partitions import dominates, n_stat, orbit_size, partitions_of, syt_count
from apolar.tableaux import (
    SSYT,
    charge,
    kostka_foulkes,
    kostka_number,
    r_mu_character,
    ssyt_enumerate,
)
from apolar.tpoly import TPoly


def compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def kostant_t(gamma):
    """t-analogue of the Kostant partition function for type A, as {power: count}.

    Counts multisets of positive roots e_i - e_j (i < j) summing to gamma,
    each weighted by t^(multiset size).
    """
    if not gamma:
        return {0: 1}
    head, rest = gamma[0], list(gamma[1:])
    if head < 0:
        return {}
    if not rest:
        return {0: 1} if head == 0 else {}
    out = {}
    for split in compositions(head, len(rest)):
        sub = tuple(x + c for x, c in zip(rest, split))
        for p, c in kostant_t(sub).items():
            out[p + head] = out.get(p + head, 0) + c
    return out


def sign(w):
    s = 1
    for i in range(len(w)):
        for j in range(i + 1, len(w)):
            if w[i] > w[j]:
                s = -s
    return s


def lusztig_kostka(lam, mu):
    """Alternating sum over S_r of the t-Kostant function; independent of tableaux."""
    r = len(mu)
    if len(lam) > r:
        return TPoly()
    lam = tuple(lam) + (0,) * (r - len(lam))
    rho = tuple(range(r - 1, -1, -1))
    shifted = [x + y for x, y in zip(lam, rho)]
    total = {}
    for w in permutations(range(r)):
        gamma = tuple(shifted[w[i]] - (mu[i] + rho[i]) for i in range(r))
        for p, c in kostant_t(gamma).items():
            total[p] = total.get(p, 0) + sign(w) * c
    return TPoly.from_powers(total)


def test_examples():
    assert kostka_foulkes((2, 1), (1, 1, 1)) == TPoly((0, 1, 1))
    assert kostka_foulkes((3, 1), (1, 1, 1, 1)) == TPoly((0, 0, 0, 1, 1, 1))
    assert kostka_foulkes((2, 2), (2, 1, 1)) == TPoly((0, 1))
    assert kostka_foulkes((2, 1, 1), (2, 1, 1)) == TPoly((1,))
    assert kostka_foulkes((2, 2), (3, 1)) == TPoly()


@pytest.mark.parametrize("mu", [m for n in range(1, 6) for m in partitions_of(n)])
def test_charge_matches_kostant_oracle(mu):
    for lam in partitions_of(sum(mu)):
        assert kostka_foulkes(lam, mu) == lusztig_kostka(lam, mu), (lam, mu)


def brute_ssyt_count(lam, mu):
    """Fill the shape with the multiset of letters in every order and keep the SSYT."""
    letters = [i + 1 for i, m in enumerate(mu) for _ in range(m)]
    seen = set()
    for p in set(permutations(letters)):
        rows, pos = [], 0
        for length in lam:
            rows.append(p[pos:pos + length])
            pos += length
        t = SSYT(tuple(lam), tuple(rows))
        if t.is_semistandard():
            seen.add(t.rows)
    return len(seen)


@pytest.mark.parametrize("mu", [m for n in range(1, 7) for m in partitions_of(n)])
def test_enumeration_vs_brute_force(mu):
    for lam in partitions_of(sum(mu)):
        tabs = ssyt_enumerate(lam, mu)
        assert all(t.is_semistandard() and t.content == mu for t in tabs)
        assert len(set(tabs)) == len(tabs)
        if sum(mu) <= 5:
            assert len(tabs) == brute_ssyt_count(lam, mu)


@pytest.mark.parametrize("mu", [m for n in range(1, 8) for m in partitions_of(n)])
def test_kostka_sanity(mu):
    n = sum(mu)
    assert sum(syt_count(lam) * kostka_foulkes(lam, mu)(1) for lam in partitions_of(n)) == orbit_size(mu)
    assert kostka_foulkes((n,), mu) == TPoly.monomial(n_stat(mu))
    for lam in partitions_of(n):
        k = kostka_foulkes(lam, mu)
        assert k(1) == kostka_number(lam, mu)
        # nonzero exactly on the dominance interval, degree at most n(mu)
        assert bool(k) == dominates(lam, mu)
        if k:
            assert k.degree <= n_stat(mu)
            assert (k.degree == n_stat(mu)) == (lam == (n,))


def test_charge_of_single_tableaux():
    t = SSYT((2, 1), ((1, 2), (3,)))
    assert t.reading_word() == [2, 1, 3]
    assert charge(t) == 2
    assert charge(SSYT((2, 1), ((1, 3), (2,)))) == 1
    assert charge(SSYT((3,), ((1, 2, 3),))) == 3
    with pytest.raises(NonPartitionContent):
        charge(SSYT((2,), ((1, 3),)))


def test_errors():
    with pytest.raises(ShapeContentMismatch):
        kostka_foulkes((2, 1), (2, 2))


def test_r_mu_examples():
    g = r_mu_character((2, 1, 1))
    assert g.hilbert() == TPoly((1, 3, 5, 3))
    assert g.component(0) == {(4,): 1}
    assert g.component(1) == {(3, 1): 1}
    assert g.component(2) == {(3, 1): 1, (2, 2): 1}
    assert g.component(3) == {(2, 1, 1): 1}
    assert r_mu_character((3,)).components() == [{(3,): 1}]


@pytest.mark.parametrize("mu", [m for n in range(1, 8) for m in partitions_of(n)])
def test_r_mu_total_dimension_and_socle(mu):
    g = r_mu_character(mu)
    assert g.hilbert()(1) == orbit_size(mu)
    assert g.top_degree == n_stat(mu)
    assert g.component(n_stat(mu)) == {tuple(mu): 1}
