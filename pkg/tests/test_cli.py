import random
import subprocess
import sys
from pathlib import Path

import pytest

from combdata import datasets, formats
from combdata.cli import EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, main
from combdata.grassmannian import MAX_ENTRY, SHAPE, sample_random_ssyt
from combdata.quiver import class_matrices


def _files(d):
    return {p.name: p.read_bytes() for p in sorted(Path(d).iterdir())}


def test_mheight_generate_and_verify(tmp_path, capsys):
    assert main(["mheight", "--n", "6", "--seed", "3", "--out-dir", str(tmp_path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "mHeight_6.manifest" in out
    names = set(_files(tmp_path))
    assert {"mHeight_6_train.txt", "mHeight_6_test.txt", "mHeight_6.manifest"} <= names
    assert main(["verify", str(tmp_path)]) == EXIT_OK


def test_split_is_deterministic_and_seeded(tmp_path):
    a, b, c = tmp_path / "a", tmp_path / "b", tmp_path / "c"
    for d, seed in ((a, 1), (b, 1), (c, 2)):
        assert main(["rsk", "--n", "5", "--seed", str(seed), "--out-dir", str(d)]) == EXIT_OK
    assert _files(a) == _files(b)
    assert _files(a)["input_permutations_5_test.csv"] != _files(c)["input_permutations_5_test.csv"]


def test_split_fraction_is_respected():
    lines = [f"line {k}" for k in range(20000)]
    test = sum(datasets.split_of(s, 0, 0.2) == "test" for s in lines)
    assert abs(test / 20000 - 0.2) < 0.01
    assert datasets.split_of("x", 0) == datasets.split_of("x", 0)


def test_tampered_label_fails_verification(tmp_path, capsys):
    main(["mheight", "--n", "6", "--out-dir", str(tmp_path)])
    path = tmp_path / "mHeight_6_train.txt"
    lines = path.read_text().splitlines(keepends=True)
    body, label = lines[0].rstrip("\n").rsplit(";", 1)
    lines[0] = f"{body};{int(label) + 1}\n"
    path.write_text("".join(lines))
    capsys.readouterr()
    assert main(["verify", str(tmp_path)]) == EXIT_VERIFY
    assert "FAIL" in capsys.readouterr().out


def test_missing_file_fails_verification(tmp_path):
    main(["characters", "--n", "4", "--out-dir", str(tmp_path)])
    (tmp_path / "characters_4_test.txt").unlink()
    assert main(["verify", str(tmp_path)]) == EXIT_VERIFY


def test_usage_errors(tmp_path, capsys):
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["mheight"]) == EXIT_USAGE
    assert main(["mheight", "--n", "x"]) == EXIT_USAGE
    assert main(["lattice-paths", "--endpoint", "4,2", "--out-dir", str(tmp_path)]) == EXIT_USAGE
    assert main(["weaving", "--n", "5", "--split", "1.5"]) == EXIT_USAGE
    assert main(["stats", str(tmp_path / "nothing")]) == EXIT_USAGE
    assert main(["--help"]) == EXIT_OK


def test_budget_exits(tmp_path):
    assert main(["kl", "--n", "7", "--out-dir", str(tmp_path)]) == EXIT_BUDGET
    assert main(["quivers", "--class", "A11", "--node-budget", "50",
                 "--out-dir", str(tmp_path)]) == EXIT_BUDGET


def test_config_file_supplies_defaults(tmp_path):
    out = tmp_path / "data"
    cfg = tmp_path / "run.conf"
    cfg.write_text(f"# weaving run\nn = 4\nseed = 9\nout-dir = {out}\nnegatives = 5\n")
    assert main(["weaving", "--config", str(cfg)]) == EXIT_OK
    m = datasets.read_manifest(out / "weaving_4.manifest")
    assert m["seed"] == "9"
    # command-line flags win over the file
    assert main(["weaving", "--config", str(cfg), "--seed", "4"]) == EXIT_OK
    assert datasets.read_manifest(out / "weaving_4.manifest")["seed"] == "4"
    cfg.write_text("n = 4\ncolour = blue\n")
    assert main(["weaving", "--config", str(cfg)]) == EXIT_USAGE


def test_stats_prints_tables(tmp_path, capsys):
    main(["characters", "--n", "5", "--out-dir", str(tmp_path)])
    capsys.readouterr()
    assert main(["stats", str(tmp_path)]) == EXIT_OK
    out = capsys.readouterr().out
    assert "train" in out and "test" in out


@pytest.mark.parametrize("argv,manifest", [
    (["characters", "--n", "5"], "characters_5"),
    (["kl", "--n", "4"], "kl-polynomials_4"),
    (["schubert", "--n", "3"], "schubert_3"),
    (["lattice-paths", "--endpoint", "6,5"], "lattice_6_5"),
    (["weaving", "--n", "5"], "weaving_5"),
])
def test_small_commands_verify(tmp_path, argv, manifest):
    assert main(argv + ["--out-dir", str(tmp_path)]) == EXIT_OK
    assert (tmp_path / f"{manifest}.manifest").exists()
    assert main(["verify", str(tmp_path)]) == EXIT_OK


def test_quiver_files_roundtrip_through_verify(tmp_path):
    # shallow members of two classes, including a non-symmetric B-type matrix
    recs = [[tuple(v for row in m.matrix for v in row) for m in class_matrices(label, depth=2)]
            for label in ("BB11", "D11")]
    ds = datasets.quiver_dataset(["BB11", "D11"], records=recs)
    datasets.write_dataset(ds, tmp_path, seed=0, test_fraction=0.2)
    names = set(_files(tmp_path))
    assert "BB_11_depth10_bmatrices_train.csv" in names
    assert main(["verify", "--quick", str(tmp_path)]) == EXIT_OK
    path = tmp_path / "D_11_bmatrices_train.csv"
    path.write_text(path.read_text() + path.read_text().splitlines(keepends=True)[0])
    assert main(["verify", "--quick", str(tmp_path)]) == EXIT_VERIFY


def test_grassmannian_from_positive_file(tmp_path):
    rng = random.Random(0)
    pos = tmp_path / "positives.txt"
    formats.write_file(pos, "grassmannian",
                       [sample_random_ssyt(SHAPE, MAX_ENTRY, rng) for _ in range(40)])
    out = tmp_path / "out"
    assert main(["grassmannian", "--positives", str(pos), "--out-dir", str(out)]) == EXIT_OK
    assert main(["verify", str(out)]) == EXIT_OK
    bad = tmp_path / "bad.txt"
    bad.write_text("[[1, 2, 3, 4], [1, 6, 7, 8], [9, 10, 11, 12]]\n")
    assert main(["grassmannian", "--positives", str(bad), "--out-dir", str(out)]) == EXIT_USAGE


def test_module_entry_point(tmp_path):
    r = subprocess.run([sys.executable, "-m", "combdata", "mheight", "--n", "5",
                        "--out-dir", str(tmp_path)], capture_output=True, text=True)
    assert r.returncode == 0 and "wrote" in r.stdout
    r = subprocess.run([sys.executable, "-m", "combdata", "verify", str(tmp_path)],
                       capture_output=True, text=True)
    assert r.returncode == 0
