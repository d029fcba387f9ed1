"""
Line codecs for the nine dataset file formats.

Every codec is strict: ``decode`` accepts exactly the strings ``encode``
produces, so ``decode(encode(r)) == r`` and ``encode(decode(s)) == s``.
Parse failures raise :class:`FormatError` carrying a 1-based line and column.

Record shapes (permutations are 1-indexed in memory):

==============  ==========================================================
characters      (lam, mu, value)
mheight         (w, label)                   file values are 0-indexed
grassmannian    Tableau
kl              (x, w, coefficients)         file values are 0-indexed
rsk-input       w                            stored as pairwise inversion bits
rsk-output      (P, Q)
schubert        (alpha, beta, gamma, coefficient)
lattice         (path, path)
quiver          flat row-major tuple of an n x n exchange matrix
weaving         flat row-major tuple of 0-indexed entries
==============  ==========================================================
"""

from dataclasses import dataclass
from math import isqrt
from typing import Any, Callable, Iterable, Iterator

from .partitions import Tableau, check_partition
from .permutations import check_perm, inversion_pairs
from .quiver import is_skew_symmetrizable


class FormatError(ValueError):
    def __init__(self, message: str, line: int = 1, col: int = 1) -> None:
        super().__init__(f"line {line}, column {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


class _Reader:
    """Cursor over one line with exact-punctuation helpers."""

    def __init__(self, text: str) -> None:
        self.s = text
        self.i = 0

    def fail(self, msg: str, at: int | None = None):
        raise FormatError(msg, 1, (self.i if at is None else at) + 1)

    def peek(self) -> str:
        return self.s[self.i] if self.i < len(self.s) else ""

    def lit(self, token: str) -> None:
        if not self.s.startswith(token, self.i):
            got = self.s[self.i:self.i + len(token)] or "end of line"
            self.fail(f"expected {token!r}, found {got!r}")
        self.i += len(token)

    def int(self, signed: bool = False) -> int:
        start = self.i
        if signed and self.peek() == "-":
            self.i += 1
        digits = self.i
        while self.peek().isdigit() and self.peek().isascii():
            self.i += 1
        tok = self.s[digits:self.i]
        if not tok:
            self.fail("expected an integer", start)
        if len(tok) > 1 and tok[0] == "0":
            self.fail("leading zero in integer", digits)
        if self.s[start:self.i] == "-0":
            self.fail("negative zero", start)
        return int(self.s[start:self.i])

    def seq(self, item: Callable[[], Any], sep: str, open_: str = "", close: str = "") -> list:
        self.lit(open_)
        out = []
        if close and self.s.startswith(close, self.i):
            self.i += len(close)
            return out
        out.append(item())
        while self.s.startswith(sep, self.i):
            self.i += len(sep)
            out.append(item())
        self.lit(close)
        return out

    def end(self) -> None:
        if self.i != len(self.s):
            self.fail(f"unexpected trailing text {self.s[self.i:self.i + 10]!r}")


def _checked(r: _Reader, at: int, fn: Callable, *args):
    try:
        return fn(*args)
    except FormatError:
        raise
    except ValueError as e:
        r.fail(str(e), at)


@dataclass(frozen=True)
class Codec:
    name: str
    encode: Callable[[Any], str]
    _parse: Callable[[_Reader], Any]

    def decode(self, line: str) -> Any:
        r = _Reader(line)
        rec = self._parse(r)
        r.end()
        return rec


def _plist(xs: Iterable[int]) -> str:
    return "[" + ",".join(map(str, xs)) + "]"


def _spaced(xs: Iterable[int], open_: str = "[", close: str = "]") -> str:
    return open_ + ", ".join(map(str, xs)) + close


# --- characters: [3,1,1],[2,2,1],-2 ----------------------------------------

def _enc_char(rec) -> str:
    lam, mu, v = rec
    return f"{_plist(lam)},{_plist(mu)},{v}"


def _parse_partition(r: _Reader) -> tuple[int, ...]:
    at = r.i
    parts = r.seq(r.int, ",", "[", "]")
    return _checked(r, at, check_partition, parts)


def _dec_char(r: _Reader):
    lam = _parse_partition(r)
    r.lit(",")
    at = r.i
    mu = _parse_partition(r)
    if sum(lam) != sum(mu):
        r.fail("partitions of different sizes", at)
    r.lit(",")
    return lam, mu, r.int(signed=True)


# --- mheight: (6, 8, 7, 5, 4, 9, 3, 0, 1, 2);1 -----------------------------

def _zero(w) -> list[int]:
    return [v - 1 for v in w]


def _one(r: _Reader, at: int, vals: list[int]) -> tuple[int, ...]:
    return _checked(r, at, check_perm, [v + 1 for v in vals])


def _enc_mheight(rec) -> str:
    w, label = rec
    return f"{_spaced(_zero(w), '(', ')')};{label}"


def _dec_mheight(r: _Reader):
    at = r.i
    w = _one(r, at, r.seq(r.int, ", ", "(", ")"))
    r.lit(";")
    return w, r.int()


# --- grassmannian: [[1, 2, 4, 7], [5, 6, 6, 11], [9, 9, 12, 12]] -------------

def _enc_rows(rows) -> str:
    return "[" + ", ".join(_spaced(row) for row in rows) + "]"


def _dec_tableau(r: _Reader) -> Tableau:
    at = r.i
    rows = r.seq(lambda: r.seq(r.int, ", ", "[", "]"), ", ", "[", "]")
    if any(not row for row in rows):
        r.fail("empty tableau row", at)
    T = Tableau.of(rows)
    _checked(r, at, check_partition, T.shape)
    return T


# --- kl: 0213546978 2305967814 1,6,13,12,4 ---------------------------------

def _enc_perm_kl(w) -> str:
    if len(w) <= 10:
        return "".join(str(v - 1) for v in w)
    return ",".join(str(v - 1) for v in w)


def _enc_kl(rec) -> str:
    x, w, p = rec
    if len(x) != len(w):
        raise ValueError("permutations of different sizes")
    coeffs = ",".join(map(str, p)) if p else "0"
    return f"{_enc_perm_kl(x)} {_enc_perm_kl(w)} {coeffs}"


def _dec_perm_kl(r: _Reader) -> tuple[int, ...]:
    at = r.i
    stop = r.s.find(" ", at)
    if "," in r.s[at:stop if stop != -1 else len(r.s)]:
        vals = r.seq(r.int, ",")
        if len(vals) <= 10:
            r.fail("comma-separated permutations are reserved for n > 10", at)
    else:
        start = r.i
        while r.peek().isdigit() and r.peek().isascii():
            r.i += 1
        if r.i == start:
            r.fail("expected a permutation")
        vals = [int(c) for c in r.s[start:r.i]]
    return _one(r, at, vals)


def _dec_kl(r: _Reader):
    x = _dec_perm_kl(r)
    r.lit(" ")
    at = r.i
    w = _dec_perm_kl(r)
    if len(w) != len(x):
        r.fail("permutations of different sizes", at)
    r.lit(" ")
    at = r.i
    coeffs = tuple(r.seq(lambda: r.int(signed=True), ","))
    if coeffs == (0,):
        return x, w, ()
    if coeffs[-1] == 0:
        r.fail("trailing zero coefficient", at)
    return x, w, coeffs


# --- rsk input: pairwise inversion bits ------------------------------------

def _enc_rsk_in(w) -> str:
    return ",".join("1" if b else "0" for b in inversion_pairs(w))


def perm_from_inversion_bits(bits) -> tuple[int, ...]:
    m = len(bits)
    n = (1 + isqrt(1 + 8 * m)) // 2
    if n * (n - 1) // 2 != m:
        raise ValueError(f"{m} bits is not n(n-1)/2 for any n")
    smaller = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if bits[k]:
                smaller[i] += 1
            else:
                smaller[j] += 1
            k += 1
    w = check_perm([s + 1 for s in smaller]) if n else ()
    if tuple(inversion_pairs(w)) != tuple(bool(b) for b in bits):
        raise ValueError("bits are not the inversion pattern of a permutation")
    return w


def _dec_rsk_in(r: _Reader):
    at = r.i
    bits = r.seq(r.int, ",")
    if any(b not in (0, 1) for b in bits):
        r.fail("inversion bits must be 0 or 1", at)
    return _checked(r, at, perm_from_inversion_bits, bits)


# --- rsk output: [[[1, 3, 4], [2, 7], [5], [6]], [[1, 2, 6], ...]] -----------

def _enc_rsk_out(rec) -> str:
    P, Q = rec
    return "[" + _enc_rows(P.rows) + ", " + _enc_rows(Q.rows) + "]"


def _dec_rsk_out(r: _Reader):
    r.lit("[")
    P = _dec_tableau(r)
    r.lit(", ")
    at = r.i
    Q = _dec_tableau(r)
    r.lit("]")
    if not (P.is_standard() and Q.is_standard() and P.shape == Q.shape):
        r.fail("expected two standard tableaux of one shape", at)
    return P, Q


# --- schubert: [1,2,3,5,4],[1,2,3,5,4],[1,2,3,6,4,5];1 ----------------------

def _enc_schubert(rec) -> str:
    a, b, g, c = rec
    return f"{_plist(a)},{_plist(b)},{_plist(g)};{c}"


def _dec_schubert(r: _Reader):
    perms = []
    for k in range(3):
        if k:
            r.lit(",")
        at = r.i
        perms.append(_checked(r, at, check_perm, r.seq(r.int, ",", "[", "]")))
    r.lit(";")
    return (*perms, r.int())


# --- lattice: 1,1,1,0,0;1,1,0,1,0 ------------------------------------------

def _enc_lattice(rec) -> str:
    p, q = rec
    return ",".join(map(str, p)) + ";" + ",".join(map(str, q))


def _dec_path(r: _Reader) -> tuple[int, ...]:
    at = r.i
    steps = tuple(r.seq(r.int, ","))
    if any(s not in (0, 1) for s in steps):
        r.fail("steps must be 0 or 1", at)
    return steps


def _dec_lattice(r: _Reader):
    p = _dec_path(r)
    r.lit(";")
    at = r.i
    q = _dec_path(r)
    if len(p) != len(q) or sum(p) != sum(q):
        r.fail("paths with different endpoints", at)
    return p, q


# --- quiver: flattened exchange matrix -------------------------------------

def _enc_quiver(flat) -> str:
    return ",".join(map(str, flat))


def _dec_quiver(r: _Reader):
    flat = tuple(r.seq(lambda: r.int(signed=True), ","))
    n = isqrt(len(flat))
    if n * n != len(flat):
        r.fail(f"{len(flat)} entries do not form a square matrix")
    if not is_skew_symmetrizable([flat[i * n:(i + 1) * n] for i in range(n)]):
        r.fail("matrix is not sign-skew-symmetric with a zero diagonal")
    return flat


# --- weaving: (0, 1, 2, ...) ---------------------------------------------

def _enc_weaving(flat) -> str:
    return _spaced(flat, "(", ")")


def _dec_weaving(r: _Reader):
    return tuple(r.seq(r.int, ", ", "(", ")"))


CODECS: dict[str, Codec] = {c.name: c for c in (
    Codec("characters", _enc_char, _dec_char),
    Codec("mheight", _enc_mheight, _dec_mheight),
    Codec("grassmannian", lambda T: _enc_rows(T.rows), _dec_tableau),
    Codec("kl", _enc_kl, _dec_kl),
    Codec("rsk-input", _enc_rsk_in, _dec_rsk_in),
    Codec("rsk-output", _enc_rsk_out, _dec_rsk_out),
    Codec("schubert", _enc_schubert, _dec_schubert),
    Codec("lattice", _enc_lattice, _dec_lattice),
    Codec("quiver", _enc_quiver, _dec_quiver),
    Codec("weaving", _enc_weaving, _dec_weaving),
)}


def codec(name: str) -> Codec:
    try:
        return CODECS[name]
    except KeyError:
        raise ValueError(f"unknown format {name!r}") from None


def encode(name: str, record: Any) -> str:
    return codec(name).encode(record)


def decode(name: str, line: str) -> Any:
    return codec(name).decode(line)


def dumps(name: str, records: Iterable[Any]) -> str:
    """File body: one record per line, every line LF-terminated."""
    enc = codec(name).encode
    return "".join(enc(r) + "\n" for r in records)


def loads(name: str, text: str) -> Iterator[Any]:
    """Inverse of :func:`dumps`; errors report the line number."""
    if text and not text.endswith("\n"):
        raise FormatError("final line is not newline-terminated",
                          text.count("\n") + 1, len(text) - text.rfind("\n"))
    dec = codec(name).decode
    for k, line in enumerate(text.split("\n")[:-1], 1):
        try:
            yield dec(line)
        except FormatError as e:
            raise FormatError(e.message, k, e.col) from None


def write_file(path, name: str, records: Iterable[Any]) -> int:
    body = dumps(name, records)
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(body)
    return body.count("\n")


def read_file(path, name: str) -> list[Any]:
    with open(path, encoding="ascii", newline="") as f:
        return list(loads(name, f.read()))
