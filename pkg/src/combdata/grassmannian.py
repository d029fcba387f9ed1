"""
Rectangular semistandard tableaux for the Gr(3, 12) rank-4 dataset.

Positives (tableaux indexing cluster variables) come from an external file;
this module validates them and draws uniform random SSYT as negatives.

>>> validate_ssyt(Tableau.of([[1, 2, 4, 7], [5, 6, 6, 11], [9, 9, 12, 12]]))
True
>>> count_ssyt((2, 2), 4)
20
"""

import random
from functools import cache
from itertools import combinations
from math import prod
from typing import Iterable, Sequence

from .partitions import Partition, Tableau, check_partition, conjugate

SHAPE = (4, 4, 4)
MAX_ENTRY = 12


def validate_ssyt(T: Tableau, max_entry: int = MAX_ENTRY,
                  shape: Partition = SHAPE) -> bool:
    return (T.shape == tuple(shape) and T.is_semistandard()
            and all(1 <= x <= max_entry for x in T.entries()))


def hook_content_count(shape: Partition, max_entry: int) -> int:
    """Number of SSYT by the hook-content formula."""
    conj = conjugate(shape)
    num = prod(max_entry + j - i for i, r in enumerate(shape) for j in range(r))
    den = prod(shape[i] - j + conj[j] - i - 1 for i, r in enumerate(shape) for j in range(r))
    return num // den


class _ColumnSampler:
    """Uniform SSYT of a fixed shape, built column by column from exact
    counts of completions."""

    def __init__(self, shape: Partition, max_entry: int) -> None:
        self.shape = check_partition(shape)
        self.heights = conjugate(self.shape)
        self.max_entry = max_entry
        self.columns = {h: list(combinations(range(1, max_entry + 1), h))
                        for h in set(self.heights)}
        self._ways = cache(self._ways_uncached)

    def _ways_uncached(self, j: int, prev: tuple[int, ...]) -> int:
        if j == len(self.heights):
            return 1
        return sum(self._ways(j + 1, c) for c in self._options(j, prev))

    def _options(self, j: int, prev: tuple[int, ...]) -> list[tuple[int, ...]]:
        cols = self.columns[self.heights[j]]
        if not prev:
            return cols
        return [c for c in cols if all(prev[i] <= c[i] for i in range(len(c)))]

    def count(self) -> int:
        return self._ways(0, ())

    def sample(self, rng: random.Random) -> Tableau:
        prev: tuple[int, ...] = ()
        cols = []
        for j in range(len(self.heights)):
            opts = self._options(j, prev)
            weights = [self._ways(j + 1, c) for c in opts]
            r = rng.randrange(sum(weights))
            for c, wgt in zip(opts, weights):
                if r < wgt:
                    prev = c
                    break
                r -= wgt
            cols.append(prev)
        rows = [[c[i] for c in cols if len(c) > i] for i in range(len(self.shape))]
        return Tableau.of(rows)


@cache
def _sampler(shape: Partition, max_entry: int) -> _ColumnSampler:
    return _ColumnSampler(shape, max_entry)


def count_ssyt(shape: Sequence[int], max_entry: int) -> int:
    """Column-by-column transfer count (independent of the hook-content formula)."""
    return _sampler(tuple(shape), max_entry).count()


def sample_random_ssyt(shape: Sequence[int], max_entry: int,
                       rng: random.Random) -> Tableau:
    return _sampler(tuple(shape), max_entry).sample(rng)


def assemble_dataset(positives: Iterable[Tableau], seed: int,
                     shape: Partition = SHAPE,
                     max_entry: int = MAX_ENTRY) -> list[tuple[Tableau, int]]:
    """All positives (label 1) plus as many distinct uniform negatives (label 0).

    Negatives are uniform over the SSYT of the shape that are not positives.
    """
    pos = []
    seen = set()
    for k, T in enumerate(positives, 1):
        if not validate_ssyt(T, max_entry, shape):
            raise ValueError(f"positive #{k} is not a valid SSYT: {T.to_list()}")
        if T not in seen:
            seen.add(T)
            pos.append(T)
    total = count_ssyt(shape, max_entry)
    if 2 * len(pos) > total:
        raise ValueError("not enough tableaux outside the positives for a balanced set")
    rng = random.Random(seed)
    neg = []
    while len(neg) < len(pos):
        T = sample_random_ssyt(shape, max_entry, rng)
        if T not in seen:
            seen.add(T)
            neg.append(T)
    return [(T, 1) for T in pos] + [(T, 0) for T in neg]
