"""
Lattice paths below a rational diagonal, with their matching and Lagrange
numbers and the cover relations these numbers induce.

A path from (0, 0) to (a, b) is a 0/1 tuple (1 = east, 0 = north) whose
interior lattice points lie strictly below y = (b/a) x.  Each step becomes a
pair of continued-fraction entries, east -> (1, 1) and north -> (2, 2).  The
matching number is the continuant of that word with its last entry dropped,
which is the perfect-matching count of the associated snake graph; the
Lagrange number is that of the periodic continued fraction with the full
word as period.  On Christoffel paths these give Markov numbers m and
Lagrange values sqrt(9 m^2 - 4) / m.

>>> p = (1, 0)
>>> matching_number(p), lagrange_number(p)
(5, QuadraticValue(r=Fraction(0, 1), t=Fraction(221, 25)))
"""

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, total_ordering
from math import gcd, isqrt
from typing import Iterable, Sequence

Path = tuple[int, ...]

EAST_BLOCK = (1, 1)
NORTH_BLOCK = (2, 2)


def endpoint(path: Sequence[int]) -> tuple[int, int]:
    a = sum(path)
    return a, len(path) - a


def is_valid_path(path: Sequence[int], a: int, b: int) -> bool:
    if len(path) != a + b or sum(path) != a or any(s not in (0, 1) for s in path):
        return False
    x = y = 0
    for s in path[:-1]:
        x, y = (x + 1, y) if s else (x, y + 1)
        if y * a >= b * x:
            return False
    return True


def lattice_paths(a: int, b: int) -> list[Path]:
    """All admissible paths, in lexicographic order of the step tuples."""
    if gcd(a, b) != 1:
        raise ValueError(f"endpoint ({a}, {b}) must have coprime coordinates")
    out: list[Path] = []

    def rec(x: int, y: int, steps: list[int]) -> None:
        if x == a and y == b:
            out.append(tuple(steps))
            return
        if y < b and ((x, y + 1) == (a, b) or (y + 1) * a < b * x):
            steps.append(0)
            rec(x, y + 1, steps)
            steps.pop()
        if x < a:
            steps.append(1)
            rec(x + 1, y, steps)
            steps.pop()

    rec(0, 0, [])
    return out


def count_paths(a: int, b: int) -> int:
    """Ballot-style dynamic programme over lattice points (independent of
    :func:`lattice_paths`)."""
    ways = {(0, 0): 1}
    for s in range(1, a + b + 1):
        for x in range(max(0, s - b), min(a, s) + 1):
            y = s - x
            if (x, y) != (a, b) and y * a >= b * x:
                continue
            ways[(x, y)] = ways.get((x - 1, y), 0) + ways.get((x, y - 1), 0)
    return ways.get((a, b), 0)


def cf_word(path: Sequence[int]) -> tuple[int, ...]:
    return tuple(t for s in path for t in (EAST_BLOCK if s else NORTH_BLOCK))


def continuant(seq: Sequence[int]) -> int:
    """K(a_1, ..., a_k) by K_k = a_k K_{k-1} + K_{k-2}."""
    prev, cur = 0, 1
    for x in seq:
        prev, cur = cur, x * cur + prev
    return cur


def matching_number(path: Sequence[int]) -> int:
    return continuant(cf_word(path)[:-1])


# --- snake graphs -----------------------------------------------------------

def snake_graph(cf: Sequence[int]) -> set[frozenset]:
    """Edge set of the snake graph whose sign sequence has run lengths ``cf``.

    It has sum(cf) - 1 square tiles; consecutive equal signs mean the snake
    turns inside a tile (zigzag), a sign change means it runs straight.
    """
    signs: list[int] = []
    for i, r in enumerate(cf):
        signs += [i % 2] * r
    d = len(signs) - 1
    if d == 0:
        return {frozenset({(0, 0), (1, 0)})}
    edges = set()
    x = y = 0
    entry = "S"
    for i in range(1, d + 1):
        corners = [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]
        for k in range(4):
            edges.add(frozenset({corners[k], corners[(k + 1) % 4]}))
        straight = signs[i - 1] != signs[i]
        if entry == "S":
            exit_side = "N" if straight else "E"
        else:
            exit_side = "E" if straight else "N"
        if exit_side == "N":
            y, entry = y + 1, "S"
        else:
            x, entry = x + 1, "W"
    return edges


def count_perfect_matchings(edges: Iterable[frozenset]) -> int:
    """Generic perfect-matching count, memoised on the set of unmatched
    vertices (always matching the least unmatched vertex first)."""
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    adj = defaultdict(list)
    for e in edges:
        u, v = (index[t] for t in e)
        adj[u].append(v)
        adj[v].append(u)
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if mask == 0:
            return 1
        if mask in memo:
            return memo[mask]
        low = (mask & -mask).bit_length() - 1
        total = 0
        for v in adj[low]:
            if mask >> v & 1:
                total += rec(mask & ~(1 << low) & ~(1 << v))
        memo[mask] = total
        return total

    return rec((1 << len(verts)) - 1)


# --- exact quadratic irrationals ------------------------------------------

def _sign_surd(p: Fraction, q: Fraction, d: Fraction) -> int:
    """Sign of p + q * sqrt(d) for d >= 0."""
    sp = (p > 0) - (p < 0)
    sq = (q > 0) - (q < 0) if d else 0
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: compare p^2 with q^2 d
    c = p * p - q * q * d
    return sp if c > 0 else (-sp if c < 0 else 0)


@total_ordering
@dataclass(frozen=True)
class QuadraticValue:
    """The real number r + sign(t) * sqrt(|t|), with r, t rational.

    A rational square root is folded into ``r``, so equal numbers have equal
    (r, t) and the dataclass hash and equality are exact; ordering is decided
    with integer arithmetic only.
    """
    r: Fraction
    t: Fraction

    def __post_init__(self) -> None:
        t = Fraction(self.t)
        a, b = abs(t.numerator), t.denominator
        ra, rb = isqrt(a), isqrt(b)
        if ra * ra == a and rb * rb == b:
            root = Fraction(ra, rb)
            object.__setattr__(self, "r", Fraction(self.r) + (root if t > 0 else -root))
            object.__setattr__(self, "t", Fraction(0))

    @classmethod
    def from_parts(cls, p: int, s: int, rr: int, d: int) -> "QuadraticValue":
        """(p + rr * sqrt(d)) / s."""
        r = Fraction(p, s)
        c = Fraction(rr, s)
        return cls(r, c * abs(c) * d)

    def __lt__(self, other: "QuadraticValue") -> bool:
        return self._cmp(other) < 0

    def _cmp(self, other: "QuadraticValue") -> int:
        # sign of (r1 - r2) + u - v with u = s(t1), v = s(t2)
        a = self.r - other.r
        su = _sign_surd(a, Fraction(1 if self.t >= 0 else -1), abs(self.t))
        sv = (other.t > 0) - (other.t < 0)
        if su != sv or su == 0:
            return (su > sv) - (su < sv)
        # same sign: compare squares of U = a + u and V = v
        q = 2 * a * (1 if self.t > 0 else -1)
        s = _sign_surd(a * a + abs(self.t) - abs(other.t), q, abs(self.t))
        return s if su > 0 else -s

    def __float__(self) -> float:
        return float(self.r) + (1 if self.t >= 0 else -1) * float(abs(self.t)) ** 0.5


def _cf_matrix(seq: Sequence[int]) -> tuple[int, int, int, int]:
    p, pp, q, qp = 1, 0, 0, 1
    for a in seq:
        p, pp, q, qp = a * p + pp, p, a * q + qp, q
    return p, pp, q, qp


def _periodic_value(period: Sequence[int]) -> tuple[int, int, int]:
    """[a_0; a_1, ..., a_0, a_1, ...] = (u + sqrt(D)) / v, returned as (u, v, D)."""
    p, pp, q, qp = _cf_matrix(period)
    D = (p + qp) ** 2 - 4 * (p * qp - pp * q)
    return p - qp, 2 * q, D


def lagrange_number(path: Sequence[int]) -> QuadraticValue:
    return lagrange_of_period(cf_word(path))


def lagrange_of_period(period: Sequence[int]) -> QuadraticValue:
    """max_i [a_i; a_{i+1}, ...] + [0; a_{i-1}, a_{i-2}, ...] for the
    bi-infinite periodic sequence."""
    k = len(period)
    cands = []
    for i in range(k):
        fwd = list(period[i:]) + list(period[:i])
        back = list(reversed(period[:i])) + list(reversed(period[i:]))
        u1, v1, D = _periodic_value(fwd)
        u2, v2, _ = _periodic_value(back)
        # 1 / ((u2 + sqrt D) / v2) = v2 (sqrt D - u2) / (D - u2^2)
        den = D - u2 * u2
        root = D ** 0.5
        cands.append(((u1 + root) / v1 + v2 / (u2 + root), u1, v1, u2, v2, D, den))
    # only shifts within float noise of the maximum need exact comparison
    top = max(c[0] for c in cands)
    best = None
    for approx, u1, v1, u2, v2, D, den in cands:
        if approx < top * (1 - 1e-9):
            continue
        r = Fraction(u1, v1) + Fraction(-v2 * u2, den)
        c = Fraction(1, v1) + Fraction(v2, den)
        val = QuadraticValue(r, c * abs(c) * D)
        if best is None or best < val:
            best = val
    return best


# --- covers ----------------------------------------------------------------

def cover_pairs_from_values(values: dict) -> set[tuple]:
    """Covers of the order x < y iff value(x) < value(y): every pair drawn
    from two consecutive distinct values."""
    groups = defaultdict(list)
    for key, v in values.items():
        groups[v].append(key)
    levels = sorted(groups)
    out = set()
    for lo, hi in zip(levels, levels[1:]):
        for x in groups[lo]:
            for y in groups[hi]:
                out.add((x, y))
    return out


@dataclass
class CoverData:
    a: int
    b: int
    paths: list[Path]

    @cached_property
    def matching(self) -> dict[Path, int]:
        return {p: matching_number(p) for p in self.paths}

    @cached_property
    def lagrange(self) -> dict[Path, QuadraticValue]:
        return {p: lagrange_number(p) for p in self.paths}

    @cached_property
    def matching_covers(self) -> set[tuple[Path, Path]]:
        return cover_pairs_from_values(self.matching)

    @cached_property
    def lagrange_covers(self) -> set[tuple[Path, Path]]:
        return cover_pairs_from_values(self.lagrange)

    @cached_property
    def double_covers(self) -> set[tuple[Path, Path]]:
        return self.matching_covers & self.lagrange_covers

    def ties(self, order: str) -> int:
        """Number of paths sharing their value with another path."""
        vals = self.matching if order == "matching" else self.lagrange
        counts = defaultdict(int)
        for v in vals.values():
            counts[v] += 1
        return sum(c for c in counts.values() if c > 1)

    def records(self) -> list[tuple[Path, Path, str]]:
        """Covers in exactly one order, labelled by that order, sorted."""
        both = self.double_covers
        out = [(x, y, "lagrange") for x, y in self.lagrange_covers - both]
        out += [(x, y, "matching") for x, y in self.matching_covers - both]
        return sorted(out)


def cover_data(a: int, b: int) -> CoverData:
    return CoverData(a, b, lattice_paths(a, b))
