import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from apolar.apolarity import graded_character_bruteforce
from apolar.charengine import (
    character_report,
    graded_character_formula,
    hilbert_series_formula,
    verify,
    waring_certificate,
)
from apolar.errors import DegenerateDegree, InvalidPartition, LimitExceeded, TheoremHypothesisViolated
from apolar.partitions import mu_of, n_stat, orbit_size, partitions_of
from apolar.tpoly import TPoly
from golden import GOLDEN_CHARACTER, GOLDEN_DEGREE, GOLDEN_HILBERT, GOLDEN_TUPLE


def test_golden_formula():
    char = graded_character_formula((2, 1, 1), GOLDEN_DEGREE)
    assert char.components(GOLDEN_DEGREE) == GOLDEN_CHARACTER
    assert hilbert_series_formula((2, 1, 1), GOLDEN_DEGREE) == TPoly(GOLDEN_HILBERT)


def test_single_orbit_point():
    # all coordinates equal: F is a multiple of L^d and every piece is trivial
    char = graded_character_formula((3,), 2)
    assert char.components() == [{(3,): 1}] * 3


def test_degree_zero():
    assert graded_character_formula((2, 1), 0).components() == [{(3,): 1}]


def test_guards():
    with pytest.raises(DegenerateDegree):
        graded_character_formula((2, 1), -1)
    with pytest.raises(LimitExceeded):
        graded_character_formula((2, 1), 65)
    with pytest.raises(LimitExceeded):
        graded_character_formula((1,) * 13, 2)
    with pytest.raises(InvalidPartition):
        graded_character_formula((1, 2), 2)


def test_waring_certificate():
    assert waring_certificate((2, 1, 1), 7) == 12
    assert waring_certificate((2, 1, 1), 6) == 12
    assert waring_certificate((2, 1, 1), 5) is None
    assert waring_certificate((4,), 1) == 1


def test_report_json():
    rep = character_report((2, 1, 1), 7)
    data = json.loads(rep.dumps())
    assert data["mu"] == "2,1,1"
    assert data["hilbert"] == list(GOLDEN_HILBERT)
    assert data["ell"] == 12 and data["n_mu"] == 3 and data["waring_rank_known"] == 12
    assert data["character"]["4"] == [1] * 8
    assert data["character"]["2,1,1"] == [0, 0, 0, 1, 1]


def test_verify_golden():
    rep = verify(GOLDEN_TUPLE, GOLDEN_DEGREE)
    assert rep.agree
    assert rep.oracle.components(GOLDEN_DEGREE) == GOLDEN_CHARACTER
    assert rep.to_json()["agree"] is True


def test_verify_requires_nonzero_sum():
    with pytest.raises(TheoremHypothesisViolated) as info:
        verify((1, -1), 3)
    assert "a1 + ... + an != 0" in str(info.value)


def test_verify_oracle_limit():
    with pytest.raises(LimitExceeded):
        verify(tuple(range(1, 8)), 2)


def test_coefficients_do_not_matter():
    d = 4
    chars = [graded_character_bruteforce(a, d) for a in [(1, 2, 2), (5, 7, 7), (Fraction(-3, 2), 4, 4)]]
    assert chars[0] == chars[1] == chars[2]
    assert verify((5, 7, 7), d).formula == verify((1, 2, 2), d).formula


@pytest.mark.parametrize("mu", [m for n in range(1, 8) for m in partitions_of(n)])
def test_formula_structure(mu):
    ell, top = orbit_size(mu), n_stat(mu)
    for d in (2 * top, 2 * top + 1, 2 * top + 3):
        vals = [hilbert_series_formula(mu, d).coeff(k) for k in range(d + 1)]
        assert vals == vals[::-1]
        assert vals[top:d - top + 1] == [ell] * (d - 2 * top + 1)
        assert all(vals[k] < vals[k + 1] for k in range(top))


@st.composite
def rational_tuples(draw):
    n = draw(st.integers(2, 4))
    a = draw(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=n, max_size=n))
    return a


@given(rational_tuples(), st.integers(1, 5))
@settings(max_examples=25, deadline=None)
def test_random_tuples_agree(a, d):
    if sum(a) == 0:
        return
    rep = verify(a, d)
    assert rep.agree, rep.to_json()
    assert rep.mu == mu_of(a)


@pytest.mark.slow
def test_formula_path_at_twelve_variables():
    rep = character_report((1,) * 12, 8)
    assert rep.hilbert.coeff(1) == 12
    assert rep.character.component(1) == {(12,): 1, (11, 1): 1}
