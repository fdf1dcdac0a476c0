"""Integer partitions and the statistics attached to them.

A partition is a plain tuple of weakly decreasing positive integers, e.g.
``(2, 1, 1)``. All enumerations use reverse-lexicographic order.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import InvalidPartition, LimitExceeded, ParseError

Partition = tuple[int, ...]

MAX_N = 64


def validate(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a partition tuple, raising if it is not one."""
    p = tuple(int(x) for x in parts)
    if any(x < 1 for x in p):
        raise InvalidPartition(f"parts must be positive: {p}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise InvalidPartition(f"parts must be weakly decreasing: {p}")
    if sum(p) > MAX_N:
        raise LimitExceeded(f"partitions of n > {MAX_N} are not supported")
    return p


def parse(text: str) -> Partition:
    """Parse the ``"2,1,1"`` syntax. The empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise ParseError(f"not a partition: {text!r}") from None
    return validate(parts)


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p)


def mu_of(a: Sequence) -> Partition:
    """Multiplicities of the distinct entries of ``a``, sorted decreasingly."""
    if not a:
        raise InvalidPartition("coefficient tuple must be nonempty")
    return tuple(sorted(Counter(a).values(), reverse=True))


def orbit_size(mu: Partition) -> int:
    """Multinomial coefficient ``n! / (mu_1! ... mu_r!)``."""
    return factorial(sum(mu)) // prod(factorial(m) for m in mu)


def n_stat(mu: Partition) -> int:
    """``mu_2 + 2 mu_3 + ... + (r-1) mu_r``."""
    return sum(i * m for i, m in enumerate(mu))


def conjugate(p: Partition) -> Partition:
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def hook_lengths(p: Partition) -> list[int]:
    pc = conjugate(p)
    return [p[i] - j + pc[j] - i - 1 for i in range(len(p)) for j in range(p[i])]


@lru_cache(maxsize=None)
def syt_count(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam`` (hook-length formula)."""
    return factorial(sum(lam)) // prod(hook_lengths(lam))


@lru_cache(maxsize=None)
def _partitions(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise InvalidPartition("n must be nonnegative")
    if n > MAX_N:
        raise LimitExceeded(f"partitions of n > {MAX_N} are not supported")
    return list(_partitions(n, n))


def dominates(lam: Partition, mu: Partition) -> bool:
    """Dominance order: every partial sum of ``lam`` is at least that of ``mu``."""
    s = t = 0
    for i in range(max(len(lam), len(mu))):
        s += lam[i] if i < len(lam) else 0
        t += mu[i] if i < len(mu) else 0
        if s < t:
            return False
    return True
