"""
Dataset assembly: hash-based train/test splitting, file emission with
key=value manifests, and verification of emitted directories.

A :class:`Dataset` is a list of :class:`Part` objects.  Each part holds the
records of one class (or of the whole dataset) and one or more views; a view
names a file template and a line format, so aligned file pairs (RSK inputs and
outputs) come from a single part.
"""

import hashlib
import os
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import cache
from math import factorial, isqrt
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

from . import __version__
from . import formats
from .characters import character
from .kl import kl_polynomial, kl_table
from .latticepath import cover_data
from .mheight import contains_4231, mheight_or_none
from .partitions import partition_count
from .permutations import all_permutations, trim
from .quiver import DEPTH_LIMITS, canonical_form, class_matrices
from .rsk import rsk
from .schubert import as_letters, product_expansion
from .weaving import is_weaving_pattern

SPLITS = ("train", "test")
DEFAULT_TEST_FRACTION = 0.2


class VerificationError(Exception):
    """Raised when emitted files disagree with their manifest or contents."""


def split_of(line: str, seed: int, test_fraction: float = DEFAULT_TEST_FRACTION) -> str:
    """Keyed BLAKE2b of the canonical line decides the split, so a record's
    assignment never depends on the other records."""
    if not 0 < test_fraction < 1:
        raise ValueError("test_fraction must lie strictly between 0 and 1")
    if seed < 0:
        raise ValueError("seed must be non-negative")
    key = seed.to_bytes((seed.bit_length() + 7) // 8 or 1, "big")[-64:]
    h = hashlib.blake2b(line.encode("ascii"), key=key, digest_size=8).digest()
    return "test" if int.from_bytes(h, "big") < test_fraction * 2 ** 64 else "train"


@dataclass
class View:
    template: str  # contains "{split}"
    fmt: str
    transform: Callable[[Any], Any] = lambda r: r


@dataclass
class Part:
    records: list
    views: list[View]
    stats: Callable[[Any], dict[str, Any]] = lambda r: {}
    label: str | None = None


@dataclass
class Dataset:
    id: str
    kind: str
    params: dict[str, Any]
    parts: list[Part]
    flags: dict[str, Any] = field(default_factory=dict)


def _count_key(split: str, label: str | None, stat: str, value: Any) -> str:
    cls = f".{label}" if label is not None else ""
    return f"count.{split}{cls}.{stat}.{value}"


def write_dataset(ds: Dataset, out_dir: str | os.PathLike, seed: int,
                  test_fraction: float = DEFAULT_TEST_FRACTION) -> dict[str, str]:
    """Write all files of ``ds`` plus ``<id>.manifest``; returns the manifest.

    Files are re-read after writing and their record counts checked against
    the manifest.
    """
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    manifest: dict[str, str] = {
        "dataset": ds.id,
        "kind": ds.kind,
        "generator": f"combdata {__version__}",
        "seed": str(seed),
        "test_fraction": repr(test_fraction),
    }
    for k, v in ds.params.items():
        manifest[f"param.{k}"] = str(v)
    for k, v in ds.flags.items():
        manifest[f"flag.{k}"] = str(v)
    counts: Counter = Counter()
    expected: dict[str, int] = {}
    for part in ds.parts:
        first = formats.codec(part.views[0].fmt).encode
        buckets: dict[str, list] = {s: [] for s in SPLITS}
        for rec in part.records:
            s = split_of(first(part.views[0].transform(rec)), seed, test_fraction)
            buckets[s].append(rec)
            counts[_count_key(s, part.label, "records", "all")] += 1
            for stat, value in part.stats(rec).items():
                counts[_count_key(s, part.label, stat, value)] += 1
        for split, recs in buckets.items():
            for view in part.views:
                name = view.template.format(split=split)
                n = formats.write_file(out / name, view.fmt, map(view.transform, recs))
                expected[name] = n
                manifest[f"file.{name}.format"] = view.fmt
                manifest[f"file.{name}.records"] = str(n)
                if part.label is not None:
                    manifest[f"file.{name}.class"] = part.label
    for k in sorted(counts):
        manifest[k] = str(counts[k])
    for name, n in expected.items():
        with open(out / name, "rb") as f:
            if f.read().count(b"\n") != n:
                raise VerificationError(f"{name}: record count differs from manifest")
    write_manifest(out / f"{ds.id}.manifest", manifest)
    return manifest


def write_manifest(path: str | os.PathLike, manifest: dict[str, str]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        for k, v in manifest.items():
            f.write(f"{k}={v}\n")


def read_manifest(path: str | os.PathLike) -> dict[str, str]:
    out = {}
    with open(path, encoding="ascii") as f:
        for k, line in enumerate(f, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise formats.FormatError("expected key=value", k, 1)
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def manifest_files(manifest: dict[str, str]) -> dict[str, dict[str, str]]:
    files: dict[str, dict[str, str]] = defaultdict(dict)
    for k, v in manifest.items():
        if k.startswith("file."):
            name, attr = k[5:].rsplit(".", 1)
            files[name][attr] = v
    return dict(files)


# --- builders ----------------------------------------------------------------

def characters_dataset(n: int) -> Dataset:
    from .characters import character_table

    recs = list(character_table(n))
    return Dataset(f"characters_{n}", "characters", {"n": n}, [
        Part(recs, [View(f"characters_{n}_{{split}}.txt", "characters")],
             lambda r: {"sign": (r[2] > 0) - (r[2] < 0)}),
    ], {"filter": "none (full table)"})


def mheight_dataset(n: int) -> Dataset:
    from .mheight import mheight_records

    return Dataset(f"mHeight_{n}", "mheight", {"n": n}, [
        Part(list(mheight_records(n)), [View(f"mHeight_{n}_{{split}}.txt", "mheight")],
             lambda r: {"label": r[1]}),
    ], {"height": "w(i)-w(l)-1", "filter": "contains 3412 and avoids 4231"})


def rsk_dataset(n: int) -> Dataset:
    return Dataset(f"rsk_{n}", "rsk", {"n": n}, [
        Part(list(all_permutations(n)), [
            View(f"input_permutations_{n}_{{split}}.csv", "rsk-input"),
            View(f"output_tableau_{n}_{{split}}.csv", "rsk-output", rsk),
        ]),
    ], {"inversion_bits": "pairs (i,j) with i<j in lexicographic order"})


KL_MAX_N = 6


def kl_dataset(n: int, allow_large: bool = False) -> Dataset:
    if n > KL_MAX_N and not allow_large:
        raise BudgetExceeded(f"KL tables beyond n={KL_MAX_N} need the large-budget flag")
    T = kl_table(n)
    recs = [(x, w, p) for x, w, p in T.pairs()]
    depth = max(len(p) for _, _, p in recs)

    def stats(r):
        p = r[2]
        return {f"q{k}": p[k] if k < len(p) else 0 for k in range(depth)}

    return Dataset(f"kl-polynomials_{n}", "kl", {"n": n}, [
        Part(recs, [View(f"kl-polynomials_{n}_{{split}}.txt", "kl")], stats),
    ])


def schubert_dataset(n: int, seed: int) -> Dataset:
    from .schubert import sample_schubert_dataset

    recs = [(as_letters(a, n), as_letters(b, n), as_letters(g, n), c)
            for a, b, g, c in sample_schubert_dataset(n, seed)]
    return Dataset(f"schubert_{n}", "schubert", {"n": n}, [
        Part(recs, [View(f"schubert_structure_coefficients_triples_{n}_{{split}}.txt",
                         "schubert")], lambda r: {"coefficient": r[3]}),
    ], {"negatives": "geometric(0.5) transposition walk, graded, 100 tries"})


def lattice_dataset(a: int, b: int) -> Dataset:
    cd = cover_data(a, b)
    lag = sorted(cd.lagrange_covers - cd.double_covers)
    mat = sorted(cd.matching_covers - cd.double_covers)
    return Dataset(f"lattice_{a}_{b}", "lattice", {"a": a, "b": b}, [
        Part(lag, [View(f"lagrange_covers_{{split}}_{a}_{b}.csv", "lattice")],
             label="lagrange"),
        Part(mat, [View(f"matching_covers_{{split}}_{a}_{b}.csv", "lattice")],
             label="matching"),
    ], {"paths": len(cd.paths), "double_covers_removed": len(cd.double_covers),
        "tied_paths_matching": cd.ties("matching"),
        "tied_paths_lagrange": cd.ties("lagrange")})


def _flatten(B) -> tuple[int, ...]:
    return tuple(v for row in B for v in row)


QUIVER_FILES = {
    "A11": "A_11", "D11": "D_11", "BB11": "BB_11_depth10", "BD11": "BD_11_depth9",
    "BE11": "BE_11_depth8", "DE11": "DE_11_depth9", "E11": "E_11_depth9",
}


def quiver_records(label: str, node_budget: int = 2_000_000) -> list[tuple[int, ...]]:
    return [_flatten(m.matrix) for m in class_matrices(label, node_budget=node_budget)]


def quiver_dataset(labels: Sequence[str], node_budget: int = 2_000_000,
                   records: Sequence[list] | None = None) -> Dataset:
    """One part per class; ``records`` may carry precomputed class members."""
    if records is None:
        records = [quiver_records(label, node_budget) for label in labels]
    parts = [Part(list(recs),
                  [View(f"{QUIVER_FILES[label]}_bmatrices_{{split}}.csv", "quiver")],
                  label=label)
             for label, recs in zip(labels, records)]
    name = "quivers" if len(labels) > 1 else f"quivers_{labels[0]}"
    return Dataset(name, "quiver", {"classes": ",".join(labels)}, parts,
                   {"dedup": "up to vertex relabelling",
                    "depths": ",".join(f"{k}:{v}" for k, v in DEPTH_LIMITS.items())})


WEAVING_NEGATIVES = {6: 1583, 7: 137302}


def weaving_dataset(n: int, seed: int, negatives: int | None = None) -> Dataset:
    from .weaving import generate_weaving_patterns, sample_negatives

    pos = sorted(generate_weaving_patterns(n))
    count = negatives if negatives is not None else WEAVING_NEGATIVES.get(n, len(pos))
    neg = sample_negatives(pos, count, seed)
    flat = lambda M: tuple(v - 1 for row in M for v in row)  # noqa: E731
    return Dataset(f"weaving_{n}", "weaving", {"n": n}, [
        Part(pos, [View(f"weaving_patterns_{n}_{{split}}.txt", "weaving", flat)], label="1"),
        Part(neg, [View(f"non_weaving_patterns_{n}_{{split}}.txt", "weaving", flat)],
             label="0"),
    ], {"encoding": "row i = wires crossed by wire i in order, 0-indexed",
        "negatives": "1-3 in-row swaps"})


def read_positive_tableaux(path: str | os.PathLike) -> list:
    return formats.read_file(path, "grassmannian")


def grassmannian_dataset(positives: Iterable, seed: int) -> Dataset:
    from .grassmannian import assemble_dataset

    recs = assemble_dataset(positives, seed)
    return Dataset("grassmannian_3_4_12", "grassmannian", {"shape": "3x4", "max_entry": 12}, [
        Part([T for T, y in recs if y == 1],
             [View("3_4_12_valid_{split}.txt", "grassmannian")], label="valid"),
        Part([T for T, y in recs if y == 0],
             [View("3_4_12_invalid_{split}.txt", "grassmannian")], label="invalid"),
    ], {"negatives": "uniform SSYT minus positives"})


class BudgetExceeded(RuntimeError):
    pass


# --- verification ------------------------------------------------------------

@dataclass
class Report:
    problems: list[str] = field(default_factory=list)
    checked: int = 0

    def add(self, where: str, msg: str) -> None:
        self.problems.append(f"{where}: {msg}")


def _parse_split(name: str) -> str:
    for s in SPLITS:
        if f"_{s}_" in name or f"_{s}." in name:
            return s
    raise VerificationError(f"{name}: cannot tell the split from the file name")


@cache
def _expansion(alpha, beta):
    return product_expansion(alpha, beta)


def _check_records(kind: str, params: dict[str, str], name: str, meta: dict[str, str],
                   recs: list, report: Report, quick: bool, ctx: dict) -> None:
    label = meta.get("class")
    fmt = meta["format"]
    for k, r in enumerate(recs, 1):
        where = f"{name}:{k}"
        line = formats.encode(fmt, r)
        if kind == "characters":
            lam, mu, v = r
            if character(lam, mu) != v:
                report.add(where, f"wrong character value in {line}")
        elif kind == "mheight":
            w, h = r
            truth = mheight_or_none(w)
            if truth is None or contains_4231(w):
                report.add(where, f"permutation outside the dataset filter: {line}")
            elif truth != h:
                report.add(where, f"label {h} should be {truth}: {line}")
        elif kind == "kl":
            x, w, p = r
            truth = ctx["kl"][x, w] if "kl" in ctx else kl_polynomial(x, w)
            if truth != p:
                report.add(where, f"polynomial should be {truth}: {line}")
        elif kind == "rsk" and fmt == "rsk-output":
            w = ctx["rsk_inputs"][name.replace("output_tableau", "input_permutations")][k - 1]
            if rsk(w) != r:
                report.add(where, f"tableau pair does not match input line {k}")
        elif kind == "schubert":
            a, b, g, c = r
            n = int(params["n"])
            if len(a) != n or len(b) != n:
                report.add(where, f"alpha and beta must have {n} letters: {line}")
            if _expansion(trim(a), trim(b)).get(trim(g), 0) != c:
                report.add(where, f"coefficient {c} is wrong: {line}")
        elif kind == "lattice":
            cd = ctx["cover"]
            own = cd.lagrange_covers if label == "lagrange" else cd.matching_covers
            other = cd.matching_covers if label == "lagrange" else cd.lagrange_covers
            if r not in own or r in other:
                report.add(where, f"not a cover in the {label} order only: {line}")
        elif kind == "quiver":
            n = isqrt(len(r))
            cf = canonical_form(r, n)
            if cf in ctx["quiver_seen"]:
                report.add(where, f"duplicate up to relabelling: {line[:40]}...")
            ctx["quiver_seen"].add(cf)
            if not quick:
                if label not in ctx["quiver_class"]:
                    ctx["quiver_class"][label] = {
                        canonical_form(_flatten(m.matrix), n) for m in class_matrices(label)}
                if cf not in ctx["quiver_class"][label]:
                    report.add(where, f"not in the {label} class: {line[:40]}...")
        elif kind == "weaving":
            n = int(params["n"])
            if len(r) != n * (n - 1) or any(not 0 <= v < n for v in r):
                report.add(where, f"not an {n} x {n - 1} matrix over 0..{n - 1}")
                continue
            M = tuple(tuple(v + 1 for v in r[i * (n - 1):(i + 1) * (n - 1)]) for i in range(n))
            if is_weaving_pattern(M) != (label == "1"):
                report.add(where, f"validity disagrees with class {label}: {line}")
        elif kind == "grassmannian":
            from .grassmannian import validate_ssyt

            if not validate_ssyt(r):
                report.add(where, f"not a 3 x 4 SSYT with entries <= 12: {line}")
            other = ctx["grass"].setdefault(r, label)
            if other != label:
                report.add(where, f"tableau appears as both {other} and {label}: {line}")
        report.checked += 1


def verify_manifest(path: str | os.PathLike, quick: bool = False) -> Report:
    path = Path(path)
    manifest = read_manifest(path)
    kind = manifest.get("kind", "")
    params = {k[6:]: v for k, v in manifest.items() if k.startswith("param.")}
    seed = int(manifest["seed"])
    frac = float(manifest["test_fraction"])
    report = Report()
    ctx: dict = {"quiver_seen": set(), "quiver_class": {}, "grass": {}, "rsk_inputs": {}}
    if kind == "kl" and int(params["n"]) <= KL_MAX_N:
        ctx["kl"] = kl_table(int(params["n"]))
    if kind == "lattice":
        ctx["cover"] = cover_data(int(params["a"]), int(params["b"]))
    files = manifest_files(manifest)
    # inputs first so aligned outputs can be checked against them
    order = sorted(files, key=lambda f: (files[f]["format"] == "rsk-output", f))
    counts: Counter = Counter()
    totals = 0
    for name in order:
        meta = files[name]
        fpath = path.parent / name
        if not fpath.exists():
            report.add(name, "missing file")
            continue
        try:
            recs = formats.read_file(fpath, meta["format"])
        except formats.FormatError as e:
            report.add(name, str(e))
            continue
        if str(len(recs)) != meta.get("records"):
            report.add(name, f"{len(recs)} records but the manifest says {meta.get('records')}")
        split = _parse_split(name)
        enc = formats.codec(meta["format"]).encode
        for k, r in enumerate(recs, 1):
            if meta["format"] != "rsk-output" and split_of(enc(r), seed, frac) != split:
                report.add(f"{name}:{k}", "record is in the wrong split")
        if meta["format"] == "rsk-input":
            ctx["rsk_inputs"][name] = recs
        if meta["format"] != "rsk-output":
            counts[(split, meta.get("class"))] += len(recs)
            totals += len(recs)
        _check_records(kind, params, name, meta, recs, report, quick, ctx)
    for (split, label), c in counts.items():
        key = _count_key(split, label, "records", "all")
        if manifest.get(key, "0") != str(c):
            report.add(path.name, f"{key} is {manifest.get(key)} but files hold {c}")
    expected_total = _expected_total(kind, params)
    if expected_total is not None and totals != expected_total:
        report.add(path.name, f"{totals} records in total, expected {expected_total}")
    return report


def _expected_total(kind: str, params: dict[str, str]) -> int | None:
    if kind == "characters":
        return partition_count(int(params["n"])) ** 2
    if kind == "kl":
        return factorial(int(params["n"])) ** 2
    if kind == "rsk":
        return factorial(int(params["n"]))
    return None


def verify_directory(directory: str | os.PathLike, quick: bool = False) -> dict[str, Report]:
    d = Path(directory)
    found = sorted(d.glob("*.manifest"))
    if not found:
        raise VerificationError(f"no manifest files in {d}")
    return {p.name: verify_manifest(p, quick) for p in found}


# --- statistics ---------------------------------------------------------------

def stats_table(manifest: dict[str, str]) -> str:
    """Per-class train/test table in the style of the dataset statistics
    tables, one block per statistic."""
    rows: dict[tuple, dict[str, str]] = defaultdict(dict)
    for k, v in manifest.items():
        if not k.startswith("count."):
            continue
        body = k[6:]
        split, rest = body.split(".", 1)
        stat_key, value = rest.rsplit(".", 1)
        rows[(stat_key, value)][split] = v
    out = [f"# {manifest.get('dataset')}"]
    current = None

    def order(item):
        (stat, value), _ = item
        return (stat, (0, int(value)) if value.lstrip("-").isdigit() else (1, value))

    for (stat, value), by in sorted(rows.items(), key=order):
        if stat != current:
            out.append(f"{stat:<24}{'train':>12}{'test':>12}{'total':>12}")
            current = stat
        tr, te = int(by.get("train", 0)), int(by.get("test", 0))
        out.append(f"  {value:<22}{tr:>12,}{te:>12,}{tr + te:>12,}")
    for k in sorted(manifest):
        if k.startswith("flag."):
            out.append(f"{k[5:]}: {manifest[k]}")
    return "\n".join(out)
