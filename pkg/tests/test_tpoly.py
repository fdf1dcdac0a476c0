import pytest

from apolar._concurrency import parallel_map, worker_count
from apolar.tpoly import TPoly


def test_trim_and_degree():
    assert TPoly((1, 2, 0, 0)).coeffs == (1, 2)
    assert TPoly().degree == -1
    assert not TPoly((0, 0))
    assert TPoly((0, 0, 3)).degree == 2


def test_arithmetic():
    p, q = TPoly((1, 1)), TPoly((0, 1, 1))
    assert p + q == TPoly((1, 2, 1))
    assert q - q == TPoly()
    assert p.scale(3) == TPoly((3, 3))
    assert q(2) == 6
    assert TPoly.from_powers({3: 1, 0: 2}) == TPoly((2, 0, 0, 1))
    assert TPoly.monomial(2, 5).coeff(2) == 5 and TPoly.monomial(2).coeff(7) == 0


@pytest.mark.parametrize("coeffs,text", [
    ((), "0"),
    ((1,), "1"),
    ((0, 1, 1), "t + t^2"),
    ((0, 2), "2*t"),
    ((1, 4, 9), "1 + 4*t + 9*t^2"),
])
def test_str(coeffs, text):
    assert str(TPoly(coeffs)) == text


@pytest.mark.parametrize("raw,expected", [("", 1), ("3", 3), ("junk", 1)])
def test_worker_count(monkeypatch, raw, expected):
    monkeypatch.setenv("APOLAR_THREADS", raw)
    assert worker_count() == expected


def test_worker_count_auto(monkeypatch):
    monkeypatch.setenv("APOLAR_THREADS", "0")
    assert worker_count() >= 1


def test_parallel_map_keeps_order(monkeypatch):
    monkeypatch.setenv("APOLAR_THREADS", "4")
    assert parallel_map(lambda x: x * x, range(10)) == [x * x for x in range(10)]
