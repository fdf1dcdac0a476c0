"""Semistandard tableaux, charge, and Kostka-Foulkes polynomials.

``K_{lam,mu}(t)`` is the charge generating function over SSYT of shape ``lam``
and content ``mu``. The graded character of ``R_mu`` is read off with the
exponents of ``t`` counting degrees down from the socle at ``n(mu)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonPartitionContent, ShapeContentMismatch
from .partitions import Partition, n_stat, partitions_of
from .snrep import GradedCharacter
from .tpoly import TPoly


@dataclass(frozen=True)
class SSYT:
    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def content(self) -> tuple[int, ...]:
        top = max((x for r in self.rows for x in r), default=0)
        c = [0] * top
        for r in self.rows:
            for x in r:
                c[x - 1] += 1
        return tuple(c)

    def reading_word(self) -> list[int]:
        """Rows read right to left, starting with the top row."""
        return [x for r in self.rows for x in reversed(r)]

    def is_semistandard(self) -> bool:
        for i, r in enumerate(self.rows):
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
            if i and any(self.rows[i - 1][j] >= r[j] for j in range(len(r))):
                return False
        return True

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def ssyt_enumerate(lam: Partition, mu_content: Partition) -> list[SSYT]:
    """All SSYT of shape ``lam`` and content ``mu_content``.

    Cells are filled in row-major order with the smallest admissible letter
    first, so the output is sorted lexicographically by row reading.
    """
    lam, mu = tuple(lam), tuple(mu_content)
    if sum(lam) != sum(mu):
        raise ShapeContentMismatch(f"|{lam}| != |{mu}|")
    cells = [(i, j) for i, length in enumerate(lam) for j in range(length)]
    remaining = list(mu)
    grid = [[0] * length for length in lam]
    out: list[SSYT] = []
    r = len(mu)
    col_len = [sum(1 for x in lam if x > j) for j in range(lam[0])] if lam else []

    def place(pos: int):
        if pos == len(cells):
            out.append(SSYT(lam, tuple(tuple(row) for row in grid)))
            return
        i, j = cells[pos]
        lo = max(grid[i][j - 1] if j else 1, grid[i - 1][j] + 1 if i else 1, i + 1)
        for v in range(lo, r + 1):
            if not remaining[v - 1]:
                continue
            # the rest of column j below row i needs strictly larger letters
            if v + (col_len[j] - i - 1) > r:
                break
            grid[i][j] = v
            remaining[v - 1] -= 1
            place(pos + 1)
            remaining[v - 1] += 1
        grid[i][j] = 0

    place(0)
    return out


def _word_charge(word: list[int]) -> int:
    """Charge of a word whose content is a partition.

    Standard subwords are peeled off one at a time: find the leftmost unused
    1, then scan rightwards cyclically for 2, 3, ...; each wrap-around bumps
    the index. The charge is the sum of indices over all subwords.
    """
    word = list(word)
    used = [False] * len(word)
    total = 0
    left = len(word)
    while left:
        letters = sorted({word[p] for p in range(len(word)) if not used[p]})
        top = len(letters)
        if letters != list(range(1, top + 1)):
            raise NonPartitionContent(f"content of {word} is not a partition")
        pos = next(p for p in range(len(word)) if not used[p] and word[p] == 1)
        used[pos] = True
        index = 0
        for letter in range(2, top + 1):
            nxt = next((p for p in range(pos + 1, len(word))
                        if not used[p] and word[p] == letter), None)
            if nxt is None:
                index += 1
                nxt = next(p for p in range(pos) if not used[p] and word[p] == letter)
            used[nxt] = True
            total += index
            pos = nxt
        left -= top
    return total


def charge(t: SSYT) -> int:
    c = t.content
    if any(c[i] < c[i + 1] for i in range(len(c) - 1)) or 0 in c:
        raise NonPartitionContent(f"content {c} is not a partition")
    return _word_charge(t.reading_word())


@lru_cache(maxsize=None)
def _kostka_foulkes(lam: Partition, mu: Partition) -> TPoly:
    powers: dict[int, int] = {}
    for t in ssyt_enumerate(lam, mu):
        c = charge(t)
        powers[c] = powers.get(c, 0) + 1
    return TPoly.from_powers(powers)


def kostka_foulkes(lam: Partition, mu: Partition) -> TPoly:
    """``K_{lam,mu}(t)`` as a sum of ``t^charge`` over SSYT(lam, mu)."""
    if sum(lam) != sum(mu):
        raise ShapeContentMismatch(f"|{lam}| != |{mu}|")
    return _kostka_foulkes(tuple(lam), tuple(mu))


def kostka_number(lam: Partition, mu: Partition) -> int:
    return len(ssyt_enumerate(lam, mu))


@lru_cache(maxsize=None)
def r_mu_character(mu: Partition) -> GradedCharacter:
    """Graded character of ``R_mu``.

    The multiplicity of ``lam`` in degree ``k`` is the coefficient of
    ``t^(n(mu)-k)`` in ``K_{lam,mu}(t)``.
    """
    mu = tuple(mu)
    n = sum(mu)
    top = n_stat(mu)
    mult = {}
    for lam in partitions_of(n):
        k = kostka_foulkes(lam, mu)
        mult[lam] = TPoly(tuple(k.coeff(top - j) for j in range(top + 1)))
    return GradedCharacter(n, mult)
