"""
Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule.

Border strips are removed on the abacus: with beta-numbers
``beta_i = lam_i + (len(lam) - i)``, removing a strip of size r moves one bead
from b to an empty slot b - r, with sign (-1) ** (beads jumped over).

>>> character((3, 1, 1), (2, 2, 1))
-2
>>> character((1, 1, 1, 1), (2, 1, 1))
-1
"""

from collections import Counter
from functools import cache
from math import factorial, prod
from typing import Iterator, Sequence

from .partitions import Partition, check_partition, partitions


def _from_beta(beta: list[int]) -> Partition:
    beta = sorted(beta, reverse=True)
    k = len(beta)
    return tuple(p for p in (beta[i] - (k - 1 - i) for i in range(k)) if p)


@cache
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    k = len(lam)
    beta = [lam[i] + k - 1 - i for i in range(k)]
    occupied = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        t = b - r
        if t < 0 or t in occupied:
            continue
        jumped = sum(1 for c in beta if t < c < b)
        moved = beta[:idx] + [t] + beta[idx + 1:]
        term = _mn(_from_beta(moved), rest)
        total += -term if jumped % 2 else term
    return total


def character(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi^lam evaluated on the conjugacy class of cycle type mu."""
    lam = check_partition(lam)
    mu = check_partition(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, mu)


def z_value(mu: Sequence[int]) -> int:
    """Size of the centralizer of a permutation of cycle type mu."""
    return prod(i ** m * factorial(m) for i, m in Counter(mu).items())


def class_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // z_value(mu)


def sign(mu: Sequence[int]) -> int:
    return -1 if (sum(mu) - len(mu)) % 2 else 1


def character_table(n: int) -> Iterator[tuple[Partition, Partition, int]]:
    """All (lam, mu, chi^lam_mu) for partitions of n, lam-major lex order."""
    parts = list(partitions(n))
    for lam in parts:
        for mu in parts:
            yield lam, mu, _mn(lam, mu)
