"""
Command-line front end.

    python -m combdata mheight --n 8 --seed 7 --out-dir data
    python -m combdata verify data
    python -m combdata stats data

Any long option may also come from a ``--config`` file of ``key = value``
lines (keys are option names without dashes, e.g. ``out-dir = data``;
``#`` starts a comment).  Command-line flags override the file.

Exit status: 0 success, 1 usage error, 2 verification failure,
3 resource budget exceeded.
"""

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Sequence

from . import datasets
from .quiver import CLASS_LABELS, NodeBudgetExceeded

EXIT_OK, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _endpoint(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A,B, got {text!r}") from None
    return a, b


def _fraction(text: str) -> float:
    v = float(text)
    if not 0 < v < 1:
        raise argparse.ArgumentTypeError("the test fraction must lie in (0, 1)")
    return v


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--seed", type=int, default=0, help="split and sampling seed")
    p.add_argument("--out-dir", default=".", help="output directory")
    p.add_argument("--split", type=_fraction, default=datasets.DEFAULT_TEST_FRACTION,
                   help="test fraction (default 0.2)")
    p.add_argument("--config", help="key = value file supplying defaults")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker processes (used by quivers, one class per worker)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="combdata", description="Generate and check combinatorics datasets.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    parser.set_defaults(_sub=sub)

    for name, hlp in (("characters", "symmetric group character table of S_n"),
                      ("mheight", "mHeight labels on S_n"),
                      ("rsk", "RSK tableau pairs for all of S_n"),
                      ("schubert", "Schubert structure constants for S_n x S_n")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("--n", type=int, required=True)
        _common(p)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomials for all pairs in S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-large", action="store_true",
                   help=f"permit n > {datasets.KL_MAX_N} (tens of millions of pairs)")
    _common(p)

    p = sub.add_parser("quivers", help="quiver mutation classes on 11 vertices")
    p.add_argument("--class", dest="classes", action="append", choices=CLASS_LABELS,
                   help="class label, repeatable (default: all seven)")
    p.add_argument("--node-budget", type=int, default=2_000_000)
    _common(p)

    p = sub.add_parser("lattice-paths", help="cover pairs of the matching and Lagrange orders")
    p.add_argument("--endpoint", type=_endpoint, required=True, metavar="A,B")
    _common(p)

    p = sub.add_parser("weaving", help="weaving patterns and perturbed negatives")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--negatives", type=int, help="number of negatives to sample")
    _common(p)

    p = sub.add_parser("grassmannian", help="3x4 SSYT, ingested positives plus uniform negatives")
    p.add_argument("--positives", required=True, help="file of positive tableaux, one per line")
    _common(p)

    p = sub.add_parser("verify", help="re-read emitted files and recheck every record")
    p.add_argument("directory")
    p.add_argument("--quick", action="store_true",
                   help="skip recomputing quiver mutation classes")
    p.add_argument("--config")

    p = sub.add_parser("stats", help="print per-class count tables from manifests")
    p.add_argument("directory")
    p.add_argument("--config")
    return parser


def read_config(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as f:
        for k, raw in enumerate(f, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{k}: expected 'key = value'")
            key, value = (t.strip() for t in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


def parse_args(argv: Sequence[str]) -> argparse.Namespace:
    parser = build_parser()
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    found, _ = pre.parse_known_args(argv)
    subs = parser.get_default("_sub").choices
    command = next((a for a in argv if a in subs), None)
    if not found.config or command is None:
        return parser.parse_args(argv)
    config = read_config(found.config)
    known = {a.dest: a for a in subs[command]._actions if a.option_strings}
    given = {a.split("=", 1)[0] for a in argv if a.startswith("--")}
    extra = []
    for key, value in config.items():
        dest = "classes" if key == "class" else key
        if dest not in known or dest in ("help", "config"):
            raise UsageError(f"{found.config}: unknown key {key!r} for {command}")
        action = known[dest]
        if given & set(action.option_strings):
            continue
        flag = action.option_strings[-1]
        if isinstance(action, argparse._StoreTrueAction):
            if value.lower() in ("1", "true", "yes"):
                extra.append(flag)
        elif isinstance(action, argparse._AppendAction):
            for v in value.split(","):
                extra += [flag, v.strip()]
        else:
            extra += [flag, value]
    return parser.parse_args(list(argv) + extra)


def _build(args: argparse.Namespace) -> datasets.Dataset:
    cmd = args.command
    if cmd == "characters":
        return datasets.characters_dataset(args.n)
    if cmd == "mheight":
        return datasets.mheight_dataset(args.n)
    if cmd == "rsk":
        return datasets.rsk_dataset(args.n)
    if cmd == "kl":
        return datasets.kl_dataset(args.n, args.allow_large)
    if cmd == "schubert":
        return datasets.schubert_dataset(args.n, args.seed)
    if cmd == "lattice-paths":
        return datasets.lattice_dataset(*args.endpoint)
    if cmd == "weaving":
        return datasets.weaving_dataset(args.n, args.seed, args.negatives)
    if cmd == "grassmannian":
        return datasets.grassmannian_dataset(
            datasets.read_positive_tableaux(args.positives), args.seed)
    if cmd == "quivers":
        labels = args.classes or list(CLASS_LABELS)
        if args.jobs > 1 and len(labels) > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                found = list(pool.map(datasets.quiver_records, labels,
                                      [args.node_budget] * len(labels)))
            return datasets.quiver_dataset(labels, args.node_budget, found)
        return datasets.quiver_dataset(labels, args.node_budget)
    raise UsageError(f"unknown command {cmd}")


def _verify(args: argparse.Namespace) -> int:
    try:
        reports = datasets.verify_directory(args.directory, args.quick)
    except datasets.VerificationError as e:
        print(f"verify: {e}", file=sys.stderr)
        return EXIT_VERIFY
    status = EXIT_OK
    for name, rep in reports.items():
        if rep.problems:
            status = EXIT_VERIFY
            for p in rep.problems[:50]:
                print(f"FAIL {p}")
            if len(rep.problems) > 50:
                print(f"FAIL ... {len(rep.problems) - 50} more problems in {name}")
        print(f"{'ok  ' if not rep.problems else 'FAIL'} {name}: {rep.checked} records checked")
    return status


def _stats(args: argparse.Namespace) -> int:
    target = Path(args.directory)
    paths = [target] if target.is_file() else sorted(target.glob("*.manifest"))
    if not paths:
        print(f"stats: no manifests under {target}", file=sys.stderr)
        return EXIT_USAGE
    for p in paths:
        print(datasets.stats_table(datasets.read_manifest(p)))
        print()
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parse_args(argv)
        if args.command == "verify":
            return _verify(args)
        if args.command == "stats":
            return _stats(args)
        ds = _build(args)
        manifest = datasets.write_dataset(ds, args.out_dir, args.seed, args.split)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    except (datasets.BudgetExceeded, NodeBudgetExceeded) as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    files = datasets.manifest_files(manifest)
    total = sum(int(m["records"]) for m in files.values() if m["format"] != "rsk-output")
    print(f"wrote {total} records in {len(files)} files to {args.out_dir} "
          f"({manifest['dataset']}.manifest)")
    return EXIT_OK
