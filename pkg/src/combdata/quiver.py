"""
Exchange-matrix mutation and mutation classes of quivers on 11 vertices.

Matrices are tuples of row tuples.  Internally the breadth-first search works
on flat row-major tuples, which is also the on-disk layout.

>>> B = ((0, 1), (-1, 0))
>>> mutate(B, 0)
((0, -1), (1, 0))
>>> len(mutation_class(seed_from_ends("A", "A", 3)))
4
"""

from collections import Counter, deque
from dataclasses import dataclass
from typing import Sequence

Matrix = tuple[tuple[int, ...], ...]

CLASS_LABELS = ("A11", "BB11", "BD11", "BE11", "D11", "DE11", "E11")

# depth limits for the mutation-infinite classes, as used in the file names
DEPTH_LIMITS = {"BB11": 10, "BD11": 9, "BE11": 8, "DE11": 9, "E11": 9}

_ENDS = {
    "A11": ("A", "A"), "D11": ("D", "A"), "E11": ("E", "A"),
    "BB11": ("B", "B"), "BD11": ("B", "D"), "BE11": ("B", "E"), "DE11": ("D", "E"),
}


class NodeBudgetExceeded(RuntimeError):
    pass


def _flat(B: Sequence[Sequence[int]]) -> tuple[int, ...]:
    return tuple(x for row in B for x in row)


def _square(flat: Sequence[int], n: int) -> Matrix:
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def _mutate_flat(B: tuple[int, ...], n: int, k: int) -> tuple[int, ...]:
    out = list(B)
    for i in range(n):
        bik = B[i * n + k]
        base = i * n
        for j in range(n):
            if i == k or j == k:
                out[base + j] = -B[base + j]
            elif bik:
                bkj = B[k * n + j]
                if bkj:
                    out[base + j] = B[base + j] + (abs(bik) * bkj + bik * abs(bkj)) // 2
    return tuple(out)


def mutate(B: Matrix, k: int) -> Matrix:
    n = len(B)
    if not 0 <= k < n:
        raise IndexError(f"vertex {k} out of range for {n} vertices")
    return _square(_mutate_flat(_flat(B), n, k), n)


def is_skew_symmetrizable(B: Matrix) -> bool:
    """Sign-skew-symmetric with a zero diagonal and |b_ij| = 0 iff |b_ji| = 0.

    This is the structural check; the seeds below are all skew-symmetrizable
    and mutation preserves the property.
    """
    n = len(B)
    for i in range(n):
        if B[i][i]:
            return False
        for j in range(n):
            a, b = B[i][j], B[j][i]
            if (a > 0) != (b < 0) or (a == 0) != (b == 0):
                return False
    return True


def seed_from_ends(left: str, right: str, n: int) -> Matrix:
    """A path oriented low-to-high index, decorated at both ends.

    End types: "A" plain, "B" the end edge carries weights (2, -1),
    "D" an extra vertex forking from the second vertex of that end,
    "E" an extra vertex attached to the third vertex of that end.
    Path vertices come first, extra vertices are numbered after them.
    """
    extra = sum(1 for e in (left, right) if e in "DE")
    m = n - extra
    need = {"A": 1, "B": 2, "D": 3, "E": 4}
    if left not in need or right not in need:
        raise ValueError(f"unknown end type in {left}{right}")
    if m < max(need[left], need[right]) or (left != "A" and right != "A" and m < 4):
        raise ValueError(f"{n} vertices is too few for ends {left}{right}")
    B = [[0] * n for _ in range(n)]

    def edge(a: int, b: int, ab: int = 1, ba: int = -1) -> None:
        B[a][b], B[b][a] = ab, ba

    for i in range(m - 1):
        edge(i, i + 1)
    nxt = m
    for end, path in ((left, list(range(m))), (right, list(range(m - 1, -1, -1)))):
        if end == "B":
            a, b = path[0], path[1]
            lo, hi = min(a, b), max(a, b)
            # the end vertex's row carries the 2
            edge(lo, hi, 2 if lo == a else 1, -1 if lo == a else -2)
        elif end in "DE":
            anchor = path[1] if end == "D" else path[2]
            edge(anchor, nxt)
            nxt += 1
        elif end != "A":
            raise ValueError(f"unknown end type {end!r}")
    return tuple(tuple(r) for r in B)


def seed_quiver(label: str) -> Matrix:
    if label not in _ENDS:
        raise ValueError(f"unknown class label {label!r}; expected one of {CLASS_LABELS}")
    return seed_from_ends(*_ENDS[label], 11)


def _refine(B: tuple[int, ...], n: int, col: list[int]) -> list[int]:
    while True:
        sig = [(col[i], tuple(sorted((B[i * n + j], B[j * n + i], col[j])
                                     for j in range(n) if B[i * n + j] or B[j * n + i])))
               for i in range(n)]
        keys = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [keys[s] for s in sig]
        if len(keys) == len(set(col)):
            return new
        col = new


def canonical_form(B: tuple[int, ...], n: int) -> tuple[int, ...]:
    """Isomorphism invariant: the lex-least relabelled flat matrix over all
    labellings compatible with colour refinement plus individualisation."""
    best: list = [None]

    def rec(col: list[int]) -> None:
        col = _refine(B, n, col)
        if len(set(col)) == n:
            p = sorted(range(n), key=col.__getitem__)
            M = tuple(B[p[a] * n + p[b]] for a in range(n) for b in range(n))
            if best[0] is None or M < best[0]:
                best[0] = M
            return
        counts = Counter(col)
        c = min(k for k, v in counts.items() if v > 1)
        for v in range(n):
            if col[v] == c:
                nc = [2 * x for x in col]
                nc[v] = 2 * c - 1
                rec(nc)

    rec([0] * n)
    return best[0]


@dataclass(frozen=True)
class ClassMember:
    matrix: Matrix
    depth: int
    path: tuple[int, ...]  # mutation sequence from the seed


def mutation_class(seed: Matrix, depth: int | None = None,
                   node_budget: int = 2_000_000,
                   up_to_isomorphism: bool = True) -> list[ClassMember]:
    """Breadth-first mutation class of ``seed``.

    One representative per isomorphism class (or per exact matrix when
    ``up_to_isomorphism`` is False), the first one reached in BFS order with
    vertices tried in increasing order.  ``depth`` bounds the number of
    mutations from the seed.
    """
    n = len(seed)
    start = _flat(seed)
    key = (lambda M: canonical_form(M, n)) if up_to_isomorphism else (lambda M: M)
    seen = {key(start)}
    out = [ClassMember(seed, 0, ())]
    queue = deque([(start, 0, ())])
    while queue:
        M, d, path = queue.popleft()
        if depth is not None and d >= depth:
            continue
        for k in range(n):
            if path and path[-1] == k:
                continue
            N = _mutate_flat(M, n, k)
            c = key(N)
            if c in seen:
                continue
            seen.add(c)
            if len(seen) > node_budget:
                raise NodeBudgetExceeded(f"more than {node_budget} quivers")
            member = ClassMember(_square(N, n), d + 1, path + (k,))
            out.append(member)
            queue.append((N, d + 1, member.path))
    return out


def replay(seed: Matrix, path: Sequence[int]) -> Matrix:
    B = seed
    for k in path:
        B = mutate(B, k)
    return B


def class_matrices(label: str, depth: int | None = None,
                   node_budget: int = 2_000_000) -> list[ClassMember]:
    """Members of a named class, using the standard depth limit if none given."""
    if depth is None:
        depth = DEPTH_LIMITS.get(label)
    return mutation_class(seed_quiver(label), depth, node_budget)
