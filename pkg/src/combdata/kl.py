"""
Kazhdan-Lusztig polynomials of symmetric groups.

Polynomials in q are coefficient tuples, lowest degree first, with no
trailing zeros; the zero polynomial is ``()``.

Two engines share the left-descent recursion
    P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v}
              - sum_{z : sz < z} mu(z, v) q^{(l(w) - l(z)) / 2} P_{x,z},
where v = sw < w and c = 1 if sx < x else 0:

* :func:`kl_table` fills every P_{x,w} of S_n row by row;
* :func:`kl_polynomial` computes one pair with a memo restricted to the
  Bruhat intervals the recursion actually touches.

:func:`kl_polynomial_via_r` is an independent check through R-polynomials.

>>> kl_polynomial((1, 3, 2, 4), (3, 4, 1, 2))
(1, 1)
>>> kl_polynomial((1, 2, 3), (3, 1, 2))
(1,)
"""

from bisect import insort
from functools import cache
from typing import Sequence

from .permutations import Perm, all_permutations, check_perm, length

Poly = tuple[int, ...]


def poly_add(a: Poly, b: Poly, shift: int = 0, scale: int = 1) -> Poly:
    """a + scale * q^shift * b."""
    r = list(a) + [0] * max(0, len(b) + shift - len(a))
    for i, c in enumerate(b):
        r[i + shift] += scale * c
    while r and r[-1] == 0:
        r.pop()
    return tuple(r)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    r = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            r[i + j] += x * y
    return tuple(r)


def coefficient(p: Poly, k: int) -> int:
    return p[k] if k < len(p) else 0


def poly_str(p: Poly) -> str:
    """Human-readable form, e.g. ``1 + 6q + 13q^2``."""
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if c:
            mono = "" if k == 0 else ("q" if k == 1 else f"q^{k}")
            terms.append(f"{c}{mono}" if mono and c != 1 else (mono or str(c)))
    return " + ".join(terms)


# --- 0-indexed internals ----------------------------------------------------

def _lmul(w: tuple, i: int) -> tuple:
    """s_i w for 0-indexed values: swap the values i and i+1."""
    return tuple(i + 1 if v == i else i if v == i + 1 else v for v in w)


def _rmul(w: tuple, i: int) -> tuple:
    u = list(w)
    u[i], u[i + 1] = u[i + 1], u[i]
    return tuple(u)


def _rdes(w: tuple) -> frozenset:
    return frozenset(i for i in range(len(w) - 1) if w[i] > w[i + 1])


def _ldes(w: tuple) -> frozenset:
    pos = [0] * len(w)
    for p, v in enumerate(w):
        pos[v] = p
    return frozenset(i for i in range(len(w) - 1) if pos[i] > pos[i + 1])


def _leq(x: tuple, w: tuple) -> bool:
    """Bruhat order via sorted prefixes, checked only at descents of x."""
    n = len(x)
    px: list = []
    pw: list = []
    for i in range(n - 1):
        insort(px, x[i])
        insort(pw, w[i])
        if x[i] > x[i + 1]:
            for a, b in zip(px, pw):
                if a > b:
                    return False
    return True


def _down_covers(w: tuple):
    """Bruhat covers below w: swap w(i) > w(j) with no value in between
    strictly inside positions i..j."""
    n = len(w)
    for i in range(n - 1):
        wi = w[i]
        hi = -1
        for j in range(i + 1, n):
            wj = w[j]
            if wj < wi and wj > hi:
                u = list(w)
                u[i], u[j] = wj, wi
                yield tuple(u)
                hi = wj


class _Engine:
    """Memoised single-pair KL computation on 0-indexed permutations."""

    def __init__(self) -> None:
        self.memo: dict = {}
        self.mu_memo: dict = {}
        self._len: dict = {}

    def ln(self, w: tuple) -> int:
        v = self._len.get(w)
        if v is None:
            v = self._len[w] = length(w)
        return v

    def normalize(self, x: tuple, w: tuple) -> tuple:
        """Push x up through the descents of w; P_{x,w} is unchanged."""
        dl, dr = _ldes(w), _rdes(w)
        moved = True
        while moved:
            moved = False
            for s in dl:
                y = _lmul(x, s)
                if self.ln(y) > self.ln(x):
                    x, moved = y, True
            for s in dr:
                if x[s] < x[s + 1]:
                    x, moved = _rmul(x, s), True
        return x

    def P(self, x: tuple, w: tuple) -> Poly:
        if not _leq(x, w):
            return ()
        x = self.normalize(x, w)
        key = (x, w)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        lw = self.ln(w)
        if lw - self.ln(x) <= 2:
            self.memo[key] = (1,)
            return (1,)
        s = min(_ldes(w))
        v = _lmul(w, s)
        # after normalisation s x < x, so c = 1
        r = poly_add(self.P(_lmul(x, s), v), self.P(x, v), 1)
        for z, m in self.mu_list(v, x):
            if self.ln(_lmul(z, s)) < self.ln(z):
                r = poly_add(r, self.P(x, z), (lw - self.ln(z)) // 2, -m)
        self.memo[key] = r
        return r

    def mu_list(self, v: tuple, lo: tuple) -> list:
        """All (z, mu(z, v)) with lo <= z < v and mu nonzero."""
        key = (v, lo)
        hit = self.mu_memo.get(key)
        if hit is not None:
            return hit
        dl, dr = _ldes(v), _rdes(v)
        lv = self.ln(v)
        seen = {v}
        front = [v]
        out = []
        depth = 0
        while front:
            depth += 1
            nxt = []
            for u in front:
                for d in _down_covers(u):
                    if d not in seen and _leq(lo, d):
                        seen.add(d)
                        nxt.append(d)
                        self._len.setdefault(d, lv - depth)
            if depth == 1:
                out.extend((z, 1) for z in nxt)
            elif depth % 2 == 1:
                for z in nxt:
                    # mu(z, v) != 0 forces the descents of v into those of z
                    if dl <= _ldes(z) and dr <= _rdes(z):
                        p = self.P(z, v)
                        k = (depth - 1) // 2
                        if len(p) == k + 1:
                            out.append((z, p[k]))
            front = nxt
        self.mu_memo[key] = out
        return out


def kl_polynomial(x: Sequence[int], w: Sequence[int], engine: _Engine | None = None) -> Poly:
    """P_{x,w} for permutations in one-line notation (1-indexed)."""
    x, w = check_perm(x), check_perm(w)
    if len(x) != len(w):
        raise ValueError(f"size mismatch: S_{len(x)} vs S_{len(w)}")
    eng = engine if engine is not None else _Engine()
    return eng.P(tuple(v - 1 for v in x), tuple(v - 1 for v in w))


def mu_coefficient(x: Sequence[int], w: Sequence[int]) -> int:
    """Coefficient of q^((l(w) - l(x) - 1) / 2) in P_{x,w}, for x < w."""
    x, w = check_perm(x), check_perm(w)
    if x == w or not _leq(tuple(x), tuple(w)):
        raise ValueError("mu_coefficient needs x < w in Bruhat order")
    gap = length(w) - length(x)
    if gap % 2 == 0:
        return 0
    return coefficient(kl_polynomial(x, w), (gap - 1) // 2)


# --- all pairs --------------------------------------------------------------

class KLTable:
    """Every P_{x,w} in S_n; ``perms`` is sorted by (length, one-line)."""

    def __init__(self, n: int) -> None:
        self.n = n
        perms = sorted(all_permutations(n), key=lambda p: (length(p), p))
        self.perms: list[Perm] = perms
        self.index = {p: i for i, p in enumerate(perms)}
        self.lengths = [length(p) for p in perms]
        self.rows: list[list[Poly]] = []
        self.mu: list[list[tuple[int, int]]] = []
        self._build()

    def _build(self) -> None:
        n, perms, idx, ln = self.n, self.perms, self.index, self.lengths
        N = len(perms)
        # left multiplication by s_i swaps the values i and i+1
        left = [[idx[tuple(i + 1 if v == i else i if v == i + 1 else v for v in p)]
                 for i in range(1, n)] for p in perms]
        for w in range(N):
            if ln[w] == 0:
                row: list[Poly] = [()] * N
                row[w] = (1,)
            else:
                s = next(i for i in range(n - 1) if ln[left[w][i]] < ln[w])
                v = left[w][s]
                Pv = self.rows[v]
                row = [()] * N
                for y in range(N):
                    sy = left[y][s]
                    if ln[sy] < ln[y]:
                        row[y] = poly_add(Pv[sy], Pv[y], 1)
                    else:
                        row[y] = poly_add(Pv[y], Pv[sy], 1)
                for z, m in self.mu[v]:
                    if ln[left[z][s]] < ln[z]:
                        d = (ln[w] - ln[z]) // 2
                        Pz = self.rows[z]
                        for y in range(N):
                            if Pz[y]:
                                row[y] = poly_add(row[y], Pz[y], d, -m)
            self.rows.append(row)
            mus = []
            for z in range(N):
                g = ln[w] - ln[z]
                if g > 0 and g % 2 == 1 and len(row[z]) == (g - 1) // 2 + 1:
                    mus.append((z, row[z][-1]))
            self.mu.append(mus)

    def __getitem__(self, pair: tuple[Perm, Perm]) -> Poly:
        x, w = pair
        return self.rows[self.index[tuple(w)]][self.index[tuple(x)]]

    def pairs(self):
        """(x, w, P_{x,w}) over all ordered pairs, both in lexicographic order."""
        order = sorted(self.perms)
        for x in order:
            xi = self.index[x]
            for w in order:
                yield x, w, self.rows[self.index[w]][xi]


@cache
def kl_table(n: int) -> KLTable:
    return KLTable(n)


# --- R-polynomial oracle ----------------------------------------------------

@cache
def r_polynomial(x: Perm, w: Perm) -> Poly:
    """R_{x,w} by the right-descent recursion."""
    if not _leq(tuple(x), tuple(w)):
        return ()
    if x == w:
        return (1,)
    s = min(_rdes(w))
    ws, xs = _rmul(w, s), _rmul(x, s)
    if x[s] > x[s + 1]:
        return r_polynomial(xs, ws)
    return poly_add(poly_mul((-1, 1), r_polynomial(x, ws)), r_polynomial(xs, ws), 1)


def kl_polynomial_via_r(x: Sequence[int], w: Sequence[int]) -> Poly:
    """P_{x,w} from q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w}(q) = sum_{x<y<=w} R_{x,y} P_{y,w}.

    The left side's two parts occupy disjoint degree ranges, so P_{x,w} is
    minus the low-degree part of the right side.
    """
    x, w = check_perm(x), check_perm(w)

    @cache
    def P(y: Perm) -> Poly:
        if not _leq(y, w):
            return ()
        if y == w:
            return (1,)
        gap = length(w) - length(y)
        rhs: Poly = ()
        for z in _interval_above(y, w):
            if z != y:
                rhs = poly_add(rhs, poly_mul(r_polynomial(y, z), P(z)))
        top = (gap - 1) // 2
        return poly_add((), rhs[:top + 1], 0, -1)

    return P(tuple(x))


def _interval_above(y: Perm, w: Perm) -> list[Perm]:
    return [z for z in all_permutations(len(w)) if _leq(y, z) and _leq(z, w)]
