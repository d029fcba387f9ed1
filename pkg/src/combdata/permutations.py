"""
Permutations of {1, ..., n} in one-line notation, stored as plain tuples.

A permutation ``w`` is the tuple ``(w(1), ..., w(n))``.  Positions and values
are 1-indexed everywhere in this package; 0-indexed renderings only appear in
the file formats (see :mod:`combdata.formats`).

>>> length((3, 1, 2))
2
>>> code((1, 2, 3, 5, 4))
(0, 0, 0, 1, 0)
>>> decode((0, 0, 1, 1, 0))
(1, 2, 4, 5, 3)
"""

from itertools import combinations, permutations as _itperms
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]

__all__ = [
    "Perm", "check_perm", "identity", "longest", "transposition", "simple",
    "compose", "inverse", "apply", "length", "code", "decode", "trim", "embed",
    "descents", "left_descents", "find_patterns_3412", "contains_pattern",
    "bruhat_leq", "all_permutations", "inversion_pairs",
]


def check_perm(w: Sequence[int]) -> Perm:
    """Return ``w`` as a tuple, raising ValueError unless it permutes 1..n."""
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def transposition(n: int, i: int, j: int) -> Perm:
    """The transposition exchanging ``i`` and ``j`` in S_n."""
    w = list(range(1, n + 1))
    w[i - 1], w[j - 1] = j, i
    return tuple(w)


def simple(n: int, i: int) -> Perm:
    """The adjacent transposition s_i in S_n."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is not a generator of S_{n}")
    return transposition(n, i, i + 1)


def _same_size(u: Sequence[int], v: Sequence[int]) -> None:
    if len(u) != len(v):
        raise ValueError(f"size mismatch: S_{len(u)} vs S_{len(v)}")


def compose(u: Perm, v: Perm) -> Perm:
    """(u o v)(i) = u(v(i))."""
    _same_size(u, v)
    return tuple(u[x - 1] for x in v)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


def apply(w: Perm, seq: Sequence) -> tuple:
    """Move the entry in position i of ``seq`` to position w(i).

    Applying s_i swaps positions i and i+1, and ``apply(compose(u, v), seq)``
    equals ``apply(u, apply(v, seq))``, so a word is applied right to left.
    """
    if len(seq) != len(w):
        raise ValueError("size mismatch")
    out = [None] * len(w)
    for i, x in enumerate(w):
        out[x - 1] = seq[i]
    return tuple(out)


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inversion_pairs(w: Sequence[int]) -> Iterator[bool]:
    """Indicator of w(i) > w(j) for each pair i < j, pairs in lex order."""
    n = len(w)
    for i in range(n):
        for j in range(i + 1, n):
            yield w[i] > w[j]


def code(w: Sequence[int]) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i : w(j) < w(i)}."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def trim(w: Sequence[int]) -> Perm:
    """Drop trailing fixed points (the canonical representative in S_infinity)."""
    m = len(w)
    while m and w[m - 1] == m:
        m -= 1
    return tuple(w[:m])


def embed(w: Sequence[int], n: int) -> Perm:
    """Embed ``w`` in S_n by appending fixed points."""
    w = trim(w)
    if len(w) > n:
        raise ValueError(f"{w} does not fit in S_{n}")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def decode(c: Iterable[int]) -> Perm:
    """Inverse of :func:`code` on arbitrary finite non-negative sequences.

    Trailing zeros are ignored; the result has length ``len(c)`` or the
    smallest size that can carry the code, whichever is larger.
    """
    c = list(c)
    if any(x < 0 for x in c):
        raise ValueError(f"negative code entry in {c}")
    m = max([len(c)] + [i + x + 1 for i, x in enumerate(c)])
    avail = list(range(1, m + 1))
    w = [avail.pop(x) for x in c]
    return tuple(w + avail)


def descents(w: Sequence[int]) -> tuple[int, ...]:
    """Right descents: positions i with w(i) > w(i+1)."""
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def left_descents(w: Perm) -> tuple[int, ...]:
    return descents(inverse(w))


def find_patterns_3412(w: Sequence[int]) -> set[tuple[int, int, int, int]]:
    """All 1-indexed (i, j, k, l), i<j<k<l, with w(k) < w(l) < w(i) < w(j)."""
    n = len(w)
    found = set()
    for i in range(n):
        for j in range(i + 1, n):
            if w[j] < w[i]:
                continue
            for k in range(j + 1, n):
                if w[k] > w[i]:
                    continue
                for l in range(k + 1, n):
                    if w[k] < w[l] < w[i]:
                        found.add((i + 1, j + 1, k + 1, l + 1))
    return found


def contains_pattern(w: Sequence[int], pattern: Sequence[int]) -> bool:
    """Brute-force classical pattern containment."""
    k = len(pattern)
    for idx in combinations(range(len(w)), k):
        vals = [w[i] for i in idx]
        if all((vals[a] < vals[b]) == (pattern[a] < pattern[b])
               for a in range(k) for b in range(a + 1, k)):
            return True
    return False


def bruhat_leq(x: Sequence[int], w: Sequence[int]) -> bool:
    """Strong Bruhat order via the rank-matrix criterion.

    x <= w iff for every i, j: #{a <= i : x(a) >= j} <= #{a <= i : w(a) >= j}.
    """
    _same_size(x, w)
    n = len(x)
    rx = [0] * (n + 2)
    rw = [0] * (n + 2)
    for i in range(n):
        # rank counts for the prefix of length i+1, by threshold j
        for j in range(1, x[i] + 1):
            rx[j] += 1
        for j in range(1, w[i] + 1):
            rw[j] += 1
        for j in range(1, n + 1):
            if rx[j] > rw[j]:
                return False
    return True


def all_permutations(n: int) -> Iterator[Perm]:
    """S_n in lexicographic order of one-line notation."""
    return _itperms(range(1, n + 1))
