"""
The mHeight statistic: the least height of a 3412 pattern.

For a 3412 occurrence at positions i < j < k < l the height is
w(i) - w(l) - 1, the number of values strictly between the "1"-side and
"4"-side values that frame the pattern.

>>> mheight((3, 4, 1, 2))
0
>>> mheight(tuple(v + 1 for v in (6, 8, 7, 5, 4, 9, 3, 0, 1, 2)))
1
"""

from typing import Iterator, Sequence

from .permutations import Perm, all_permutations, find_patterns_3412


def _next_greater(w: Sequence[int]) -> list[int]:
    n = len(w)
    out = [n] * n
    stack: list[int] = []
    for p in range(n):
        while stack and w[stack[-1]] < w[p]:
            out[stack.pop()] = p
        stack.append(p)
    return out


def _prev_smaller(w: Sequence[int]) -> list[int]:
    out = [-1] * len(w)
    stack: list[int] = []
    for p, x in enumerate(w):
        while stack and w[stack[-1]] > x:
            stack.pop()
        out[p] = stack[-1] if stack else -1
        stack.append(p)
    return out


def mheight_or_none(w: Sequence[int]) -> int | None:
    """mHeight of w, or None when w has no 3412 pattern.

    (i, l) frames a pattern iff w(l) < w(i) and the first position after i
    holding a larger value precedes the last position before l holding a
    smaller value.
    """
    n = len(w)
    ng = _next_greater(w)
    ps = _prev_smaller(w)
    best = None
    for i in range(n):
        wi, gi = w[i], ng[i]
        for l in range(gi + 2, n):
            wl = w[l]
            if wl < wi and gi < ps[l]:
                h = wi - wl - 1
                if best is None or h < best:
                    best = h
    return best


def mheight(w: Sequence[int]) -> int:
    h = mheight_or_none(w)
    if h is None:
        raise ValueError(f"{tuple(w)} has no 3412 pattern")
    return h


def mheight_bruteforce(w: Sequence[int]) -> int | None:
    pats = find_patterns_3412(w)
    if not pats:
        return None
    return min(w[i - 1] - w[l - 1] - 1 for i, _, _, l in pats)


def contains_4231(w: Sequence[int]) -> bool:
    """Pattern test in O(n^2): a 2-3 ascent with a larger value before it
    and a smaller value after it."""
    n = len(w)
    pre = [0] * n
    m = 0
    for p in range(n):
        pre[p] = m
        m = max(m, w[p])
    suf = [0] * n
    m = n + 1
    for p in range(n - 1, -1, -1):
        suf[p] = m
        m = min(m, w[p])
    for j in range(1, n - 2):
        wj = w[j]
        for k in range(j + 1, n - 1):
            wk = w[k]
            if wj < wk < pre[j] and suf[k] < wj:
                return True
    return False


def mheight_records(n: int) -> Iterator[tuple[Perm, int]]:
    """(w, mheight(w)) for every 4231-avoiding w in S_n containing 3412,
    in lexicographic order."""
    for w in all_permutations(n):
        h = mheight_or_none(w)
        if h is not None and not contains_4231(w):
            yield w, h
