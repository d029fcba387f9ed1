"""
Reduced words and commutation classes.

A word ``(a_1, ..., a_k)`` is read right to left as a sequence of adjacent
position swaps applied to ``1 2 ... n``: first swap positions a_k, a_k + 1,
then a_{k-1}, and so on.  So the word ``(1, 2)`` produces ``3 1 2``.

>>> evaluate_word((1, 2), 3)
(3, 1, 2)
>>> list(reduced_words((3, 2, 1)))
[(1, 2, 1), (2, 1, 2)]
>>> commutation_classes((3, 2, 1))
[(1, 2, 1), (2, 1, 2)]
"""

from collections import deque
from typing import Iterator, Sequence

from .permutations import Perm, check_perm, identity, length

Word = tuple[int, ...]


def evaluate_word(word: Sequence[int], n: int) -> Perm:
    w = list(identity(n))
    for a in reversed(word):
        if not 1 <= a < n:
            raise ValueError(f"letter {a} out of range for S_{n}")
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def is_reduced(word: Sequence[int], n: int) -> bool:
    return length(evaluate_word(word, n)) == len(word)


def reduced_words(w: Sequence[int]) -> Iterator[Word]:
    """All reduced words of ``w`` in lexicographic order."""
    w = check_perm(w)

    def rec(u: list[int], prefix: list[int]) -> Iterator[Word]:
        descents = [i for i in range(1, len(u)) if u[i - 1] > u[i]]
        if not descents:
            yield tuple(prefix)
            return
        for i in descents:
            u[i - 1], u[i] = u[i], u[i - 1]
            prefix.append(i)
            yield from rec(u, prefix)
            prefix.pop()
            u[i - 1], u[i] = u[i], u[i - 1]

    yield from rec(list(w), [])


def some_reduced_word(w: Sequence[int]) -> Word:
    """The lexicographically least reduced word, without enumerating the rest."""
    return next(reduced_words(w))


def _below_sets(word: Sequence[int]) -> list[int]:
    """Bitmask of heap elements strictly below each position."""
    below = [0] * len(word)
    for q, b in enumerate(word):
        m = 0
        for p in range(q):
            if abs(word[p] - b) <= 1:
                m |= below[p] | (1 << p)
        below[q] = m
    return below


def _lex_least_extension(word: Sequence[int], below: list[int]) -> Word:
    done = 0
    out = []
    remaining = set(range(len(word)))
    while remaining:
        best = None
        for p in remaining:
            if below[p] & ~done == 0 and (best is None or word[p] < word[best]):
                best = p
        out.append(word[best])
        done |= 1 << best
        remaining.discard(best)
    return tuple(out)


def commutation_canonical(word: Sequence[int]) -> Word:
    """Lexicographically least word reachable by commuting distant letters."""
    return _lex_least_extension(word, _below_sets(word))


def braid_neighbors(word: Sequence[int]) -> Iterator[Word]:
    """Words obtained by one braid move i j i -> j i j anywhere in the class.

    A braid triple is usable when it is convex in the heap of ``word``; the
    returned word lists its down-set first, then the moved triple, then the rest.
    """
    k = len(word)
    below = _below_sets(word)
    last = {}
    for c, x in enumerate(word):
        a = last.get(x)
        last[x] = c
        if a is None:
            continue
        for j in (x - 1, x + 1):
            between = [p for p in range(a + 1, c) if word[p] == j]
            if len(between) != 1:
                continue
            b = between[0]
            # elements d with a < d < c in the heap
            inside = below[c] & ~below[a] & ~(1 << a)
            inside &= sum(1 << d for d in range(k) if below[d] >> a & 1)
            if inside != 1 << b:
                continue
            triple = (1 << a) | (1 << b) | (1 << c)
            down = (below[a] | below[b] | below[c]) & ~triple
            head = [word[p] for p in range(k) if down >> p & 1]
            tail = [word[p] for p in range(k) if not (down | triple) >> p & 1]
            yield tuple(head + [j, x, j] + tail)


def commutation_classes(w: Sequence[int]) -> list[Word]:
    """Canonical representatives of the commutation classes of reduced words of w.

    Breadth-first search over braid moves between classes; feasible for the
    longest element up to S_7.  Representatives are returned sorted.
    """
    w = check_perm(w)
    start = commutation_canonical(some_reduced_word(w))
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for nb in braid_neighbors(u):
            c = commutation_canonical(nb)
            if c not in seen:
                seen.add(c)
                queue.append(c)
    return sorted(seen)
