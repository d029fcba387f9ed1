"""
Robinson-Schensted correspondence between permutations and pairs of standard
Young tableaux of equal shape (row insertion, bumping the leftmost larger entry).

>>> P, Q = rsk((6, 7, 2, 5, 3, 4, 1))
>>> P.to_list(), Q.to_list()
([[1, 3, 4], [2, 7], [5], [6]], [[1, 2, 6], [3, 4], [5], [7]])
>>> inverse_rsk(P, Q)
(6, 7, 2, 5, 3, 4, 1)
"""

from bisect import bisect_right
from typing import Sequence

from .partitions import Tableau
from .permutations import Perm, check_perm, descents, inversion_pairs


def rsk(w: Sequence[int]) -> tuple[Tableau, Tableau]:
    w = check_perm(w)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(w, 1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            r = P[row]
            j = bisect_right(r, x)
            if j == len(r):
                r.append(x)
                Q[row].append(step)
                break
            r[j], x = x, r[j]
            row += 1
    return Tableau.of(P), Tableau.of(Q)


def inverse_rsk(P: Tableau, Q: Tableau) -> Perm:
    if P.shape != Q.shape:
        raise ValueError(f"shape mismatch: {P.shape} vs {Q.shape}")
    if not (P.is_standard() and Q.is_standard()):
        raise ValueError("both tableaux must be standard")
    rows = [list(r) for r in P.rows]
    where = {v: (i, j) for i, r in enumerate(Q.rows) for j, v in enumerate(r)}
    n = P.size
    w = [0] * n
    for step in range(n, 0, -1):
        i, j = where[step]
        x = rows[i].pop(j)
        for k in range(i - 1, -1, -1):
            r = rows[k]
            # reverse bump: the rightmost entry smaller than x
            m = bisect_right(r, x) - 1
            r[m], x = x, r[m]
        w[step - 1] = x
    return tuple(w)


def encode_targets(w: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Binary descent vector (length n-1) and pairwise inversion vector."""
    w = check_perm(w)
    d = set(descents(w))
    return (tuple(int(i in d) for i in range(1, len(w))),
            tuple(int(b) for b in inversion_pairs(w)))
