"""
Weaving patterns: n x (n-1) matrices encoding commutation classes of reduced
words of the longest permutation.

Row i lists the wires that wire i crosses, in the order it meets them, in
the wiring diagram of any reduced word of the class (all words in a
commutation class give the same row sequences).

>>> sorted(generate_weaving_patterns(3))
[((2, 3), (1, 3), (1, 2)), ((3, 2), (3, 1), (2, 1))]
>>> is_weaving_pattern(((2, 3), (1, 3), (1, 2)))
True
>>> is_weaving_pattern(((1, 1), (1, 1), (1, 1)))
False
"""

import random
from typing import Sequence

from .permutations import longest
from .words import commutation_classes

WeavingMatrix = tuple[tuple[int, ...], ...]


def local_sequences(word: Sequence[int], n: int) -> WeavingMatrix:
    """Crossing order of each wire for the swaps of ``word``, applied right
    to left as in :func:`combdata.words.evaluate_word`."""
    at = list(range(1, n + 1))  # at[p] = wire in position p
    rows: list[list[int]] = [[] for _ in range(n)]
    for a in reversed(word):
        u, v = at[a - 1], at[a]
        rows[u - 1].append(v)
        rows[v - 1].append(u)
        at[a - 1], at[a] = v, u
    return tuple(tuple(r) for r in rows)


def generate_weaving_patterns(n: int) -> set[WeavingMatrix]:
    return {local_sequences(w, n) for w in commutation_classes(longest(n))}


def _check_shape(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n < 2 or any(len(r) != n - 1 for r in M):
        raise ValueError(f"expected an n x (n-1) matrix, got {len(M)} rows")
    if any(not 1 <= x <= n for r in M for x in r):
        raise ValueError(f"entries must lie in 1..{n}")
    return n


def is_weaving_pattern(M: Sequence[Sequence[int]]) -> bool:
    """Validity sweep in O(n^2) crossings.

    Wires start in order 1..n.  Two adjacent wires may cross when each is the
    next wire listed in the other's row; crossings that become available
    never become unavailable, so crossing greedily decides the question.
    """
    n = _check_shape(M)
    for i, r in enumerate(M, 1):
        if sorted(r) != [x for x in range(1, n + 1) if x != i]:
            return False
    at = list(range(1, n + 1))
    ptr = [0] * (n + 1)
    pending = list(range(n - 1))
    done = 0
    while pending:
        p = pending.pop()
        u, v = at[p], at[p + 1]
        if ptr[u] < n - 1 and ptr[v] < n - 1 and M[u - 1][ptr[u]] == v and M[v - 1][ptr[v]] == u:
            ptr[u] += 1
            ptr[v] += 1
            at[p], at[p + 1] = v, u
            done += 1
            pending.extend(q for q in (p - 1, p + 1) if 0 <= q < n - 1)
    return done == n * (n - 1) // 2


def perturb(M: WeavingMatrix, rng: random.Random, edits: int) -> WeavingMatrix:
    """Swap two entries within a random row, ``edits`` times."""
    rows = [list(r) for r in M]
    for _ in range(edits):
        r = rows[rng.randrange(len(rows))]
        a, b = rng.sample(range(len(r)), 2)
        r[a], r[b] = r[b], r[a]
    return tuple(tuple(r) for r in rows)


def sample_negatives(positives: Sequence[WeavingMatrix], count: int,
                     seed: int, max_tries: int | None = None) -> list[WeavingMatrix]:
    """Near-miss negatives: 1 to 3 in-row swaps of random positives, kept only
    if they fail validation.  Deterministic for a given seed and input order."""
    rng = random.Random(seed)
    pos = set(positives)
    base = sorted(pos)
    out: list[WeavingMatrix] = []
    seen: set = set()
    tries = 0
    limit = max_tries if max_tries is not None else 50 * count + 1000
    while len(out) < count and tries < limit:
        tries += 1
        cand = perturb(rng.choice(base), rng, rng.randint(1, 3))
        if cand in seen or cand in pos:
            continue
        seen.add(cand)
        if not is_weaving_pattern(cand):
            out.append(cand)
    return out
