"""Integer partitions and Young tableaux."""

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def check_partition(parts: Sequence[int]) -> Partition:
    parts = tuple(parts)
    if any(p < 1 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"partition parts must be weakly decreasing: {parts}")
    return parts


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in lexicographic order of their parts.

    >>> list(partitions(4))
    [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)]
    """
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, max_part) + 1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


@cache
def partition_count(n: int) -> int:
    """p(n) via Euler's pentagonal number recurrence."""
    if n < 0:
        return 0
    if n == 0:
        return 1
    total, k = 0, 1
    while True:
        g1 = k * (3 * k - 1) // 2
        if g1 > n:
            break
        sign = 1 if k % 2 else -1
        total += sign * partition_count(n - g1)
        g2 = k * (3 * k + 1) // 2
        if g2 <= n:
            total += sign * partition_count(n - g2)
        k += 1
    return total


def conjugate(parts: Partition) -> Partition:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def hook_lengths(parts: Partition) -> list[list[int]]:
    conj = conjugate(parts)
    return [[parts[i] - j + conj[j] - i - 1 for j in range(parts[i])]
            for i in range(len(parts))]


def count_syt(parts: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    hooks = prod(h for row in hook_lengths(parts) for h in row)
    return factorial(sum(parts)) // hooks


@dataclass(frozen=True, order=True)
class Tableau:
    """A filling of a Young diagram, rows listed top to bottom (English)."""
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, rows) -> "Tableau":
        return cls(tuple(tuple(r) for r in rows))

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def entries(self) -> list[int]:
        return [x for r in self.rows for x in r]

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(r[j] for r in self.rows if len(r) > j)
                for j in range(len(self.rows[0]) if self.rows else 0)]

    def _shape_ok(self) -> bool:
        sh = self.shape
        return all(p >= 1 for p in sh) and all(
            sh[i] >= sh[i + 1] for i in range(len(sh) - 1))

    def is_semistandard(self) -> bool:
        if not self._shape_ok():
            return False
        for r in self.rows:
            if any(r[j] > r[j + 1] for j in range(len(r) - 1)):
                return False
        return all(all(c[i] < c[i + 1] for i in range(len(c) - 1))
                   for c in self.columns())

    def is_standard(self) -> bool:
        if sorted(self.entries()) != list(range(1, self.size + 1)):
            return False
        # with distinct entries, semistandard rows are strictly increasing
        return self.is_semistandard()

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """All SYT of a shape, lexicographic in the row-reading word."""
    shape = check_partition(shape)
    n = sum(shape)
    out: list[Tableau] = []

    # place n, n-1, ..., 1 by removing outer corners; collect then sort
    def rec(sh: list[int], filling: dict, k: int) -> None:
        if k == 0:
            rows = tuple(tuple(filling[(i, j)] for j in range(shape[i]))
                         for i in range(len(shape)))
            out.append(Tableau(rows))
            return
        for i in range(len(sh)):
            if sh[i] and (i + 1 == len(sh) or sh[i + 1] < sh[i]):
                sh[i] -= 1
                filling[(i, sh[i])] = k
                rec(sh, filling, k - 1)
                del filling[(i, sh[i])]
                sh[i] += 1

    rec(list(shape), {}, n)
    yield from sorted(out, key=lambda t: t.rows)


def _strict_columns(height: int, max_entry: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, max_entry + 1), height))


def semistandard_tableaux(shape: Partition, max_entry: int) -> Iterator[Tableau]:
    """All SSYT of a shape with entries in 1..max_entry, ordered by rows."""
    shape = check_partition(shape)
    if not shape:
        yield Tableau(())
        return
    heights = conjugate(shape)
    cols_by_h = {h: _strict_columns(h, max_entry) for h in set(heights)}
    out = []

    def rec(j: int, prev: tuple[int, ...] | None, cols: list) -> None:
        if j == len(heights):
            rows = tuple(tuple(c[i] for c in cols if len(c) > i)
                         for i in range(len(shape)))
            out.append(Tableau(rows))
            return
        for c in cols_by_h[heights[j]]:
            if prev is None or all(prev[i] <= c[i] for i in range(len(c))):
                cols.append(c)
                rec(j + 1, c, cols)
                cols.pop()

    rec(0, None, [])
    yield from sorted(out, key=lambda t: t.rows)
