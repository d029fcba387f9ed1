"""
Schubert polynomials, their products, and expansion in the Schubert basis.

Polynomials are dicts from exponent tuples (trailing zeros stripped) to
nonzero integer coefficients.

>>> schubert_poly((1, 2, 3, 5, 4)) == {(1,): 1, (0, 1): 1, (0, 0, 1): 1, (0, 0, 0, 1): 1}
True
>>> expand(multiply(schubert_poly((1, 2, 3, 5, 4)), schubert_poly((1, 2, 3, 5, 4))))
{(1, 2, 3, 6, 4, 5): 1, (1, 2, 4, 5, 3): 1}
"""

import random
from collections import defaultdict
from functools import cache
from typing import Sequence

from .permutations import Perm, all_permutations, code, decode, embed, length, trim

Poly = dict[tuple[int, ...], int]


def _strip(e) -> tuple[int, ...]:
    e = list(e)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def multiply(f: Poly, g: Poly) -> Poly:
    out: dict = defaultdict(int)
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            long, short = (e1, e2) if len(e1) >= len(e2) else (e2, e1)
            e = tuple(a + b for a, b in zip(long, short)) + long[len(short):]
            out[e] += c1 * c2
    return {e: c for e, c in out.items() if c}


def divided_difference(f: Poly, i: int) -> Poly:
    """(f - s_i f) / (x_i - x_{i+1}), variables 1-indexed."""
    out: dict = defaultdict(int)
    for e, c in f.items():
        e = list(e) + [0] * max(0, i + 1 - len(e))
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sgn = 1
        if a < b:
            a, b, sgn = b, a, -1
        for t in range(a - b):
            e[i - 1], e[i] = a - 1 - t, b + t
            out[_strip(e)] += sgn * c
    return {e: c for e, c in out.items() if c}


@cache
def _schubert(w: Perm) -> tuple[tuple[tuple[int, ...], int], ...]:
    c = code(w)
    for i in range(len(c) - 1):
        if c[i] < c[i + 1]:
            # w has an ascent at i; climb towards the dominant permutation
            up = list(w)
            up[i], up[i + 1] = up[i + 1], up[i]
            f = divided_difference(dict(_schubert(trim(up))), i + 1)
            return tuple(sorted(f.items()))
    return ((_strip(c), 1),)


def schubert_poly(w: Sequence[int]) -> Poly:
    """The Schubert polynomial of w (stable under appending fixed points)."""
    return dict(_schubert(trim(w)))


def expand(F: Poly) -> dict[Perm, int]:
    """Coefficients of F in the Schubert basis, keyed by trimmed permutations.

    Peels the lexicographically least monomial, which for a single Schubert
    polynomial is the code of its permutation.
    """
    F = dict(F)
    out: dict[Perm, int] = {}
    while F:
        e = min(F)
        c = F[e]
        w = trim(decode(e))
        if c < 0 or w in out:
            raise ArithmeticError(f"expansion failed at monomial {e} (coefficient {c})")
        out[w] = c
        for m, a in _schubert(w):
            v = F.get(m, 0) - c * a
            if v:
                F[m] = v
            else:
                F.pop(m, None)
    return dict(sorted(out.items()))


def product_expansion(alpha: Sequence[int], beta: Sequence[int]) -> dict[Perm, int]:
    return expand(multiply(schubert_poly(alpha), schubert_poly(beta)))


def structure_constant(alpha: Sequence[int], beta: Sequence[int],
                       gamma: Sequence[int]) -> int:
    if length(gamma) != length(alpha) + length(beta):
        return 0
    return product_expansion(alpha, beta).get(trim(gamma), 0)


def monk_rule(r: int, w: Sequence[int]) -> dict[Perm, int]:
    """Expansion of S_{s_r} * S_w by Monk's rule: sum of w t_{ab} over
    a <= r < b with length going up by exactly one."""
    n = max(len(w), r) + 1
    w = embed(w, n)
    lw = length(w)
    out = {}
    for a in range(1, r + 1):
        for b in range(r + 1, n + 1):
            u = list(w)
            u[a - 1], u[b - 1] = u[b - 1], u[a - 1]
            if length(u) == lw + 1:
                out[trim(u)] = 1
    return dict(sorted(out.items()))


# --- dataset sampling --------------------------------------------------------

MAX_TRIES = 100


def _geometric(rng: random.Random, p: float = 0.5) -> int:
    k = 1
    while rng.random() >= p:
        k += 1
    return k


def _negative(gamma: Perm, m: int, target: int, expansion: dict[Perm, int],
              taken: set, rng: random.Random) -> Perm | None:
    """Random-transposition walk from gamma to an unused length-``target``
    permutation outside the expansion, or None after MAX_TRIES walks."""
    base = embed(gamma, m)
    for _ in range(MAX_TRIES):
        u = list(base)
        for _ in range(_geometric(rng)):
            a, b = rng.sample(range(m), 2)
            u[a], u[b] = u[b], u[a]
        g = trim(u)
        if length(g) == target and g not in expansion and g not in taken:
            return g
    return None


def sample_schubert_dataset(n: int, seed: int) -> list[tuple[Perm, Perm, Perm, int]]:
    """Every nonzero c^gamma_{alpha,beta} for alpha, beta in S_n, each followed
    by at most one zero-coefficient triple sharing (alpha, beta) and the
    grading l(gamma') = l(alpha) + l(beta).

    Each (alpha, beta) pair draws from its own generator, seeded by ``seed``
    and the pair's index, so records do not depend on evaluation order.
    """
    perms = sorted(all_permutations(n))
    out = []
    for idx, (alpha, beta) in enumerate((a, b) for a in perms for b in perms):
        expansion = product_expansion(alpha, beta)
        target = length(alpha) + length(beta)
        rng = random.Random(f"{seed}:{idx}")
        taken: set = set()
        for gamma, c in expansion.items():
            out.append((alpha, beta, gamma, c))
            g = _negative(gamma, max(n, len(gamma)), target, expansion, taken, rng)
            if g is not None:
                taken.add(g)
                out.append((alpha, beta, g, 0))
    return out


def as_letters(w: Sequence[int], n: int) -> Perm:
    """w written with at least n letters, as stored in dataset files."""
    return embed(w, max(n, len(trim(w))))
