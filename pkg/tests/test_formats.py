from pathlib import Path

import pytest

from combdata import formats as F
from combdata.partitions import Tableau

GOLDEN = Path(__file__).parent / "golden"

SAMPLE_LINES = {
    "characters": "[3,1,1],[2,2,1],-2",
    "mheight": "(6, 8, 7, 5, 4, 9, 3, 0, 1, 2);1",
    "grassmannian": "[[1, 2, 4, 7], [5, 6, 6, 11], [9, 9, 12, 12]]",
    "kl": "0213546978 2305967814 1,6,13,12,4",
    "rsk-input": "0,1,1,1,1,1,1,1,1,1,1,0,0,0,1,1,1,1,0,1,1",
    "rsk-output": "[[[1, 3, 4], [2, 7], [5], [6]], [[1, 2, 6], [3, 4], [5], [7]]]",
    "schubert": "[1,2,3,5,4],[1,2,3,5,4],[1,2,3,6,4,5];1",
    "lattice": "1,1,1,0,0;1,1,0,1,0",
    "quiver": "0,1,-1,0",
    "weaving": "(0, 1, 2, 3, 3, 2, 3, 4, 2, 3, 2, 1, 5, 4, 3, 2)",
}


@pytest.mark.parametrize("name", sorted(F.CODECS))
def test_golden_files_roundtrip_byte_exact(name, tmp_path):
    path = GOLDEN / f"{name}.txt"
    raw = path.read_bytes()
    records = F.read_file(path, name)
    assert records
    assert F.dumps(name, records).encode("ascii") == raw
    out = tmp_path / "copy.txt"
    assert F.write_file(out, name, records) == len(records)
    assert out.read_bytes() == raw


@pytest.mark.parametrize("name", sorted(F.CODECS))
def test_sample_line_is_in_golden_file(name):
    lines = (GOLDEN / f"{name}.txt").read_text().splitlines()
    assert SAMPLE_LINES[name] in lines


def test_decoded_sample_values():
    assert F.decode("characters", SAMPLE_LINES["characters"]) == ((3, 1, 1), (2, 2, 1), -2)
    w, label = F.decode("mheight", SAMPLE_LINES["mheight"])
    assert w == (7, 9, 8, 6, 5, 10, 4, 1, 2, 3) and label == 1
    x, w, coeffs = F.decode("kl", SAMPLE_LINES["kl"])
    assert x == (1, 3, 2, 4, 6, 5, 7, 10, 8, 9) and coeffs == (1, 6, 13, 12, 4)
    assert F.decode("rsk-input", SAMPLE_LINES["rsk-input"]) == (6, 7, 2, 5, 3, 4, 1)
    P, Q = F.decode("rsk-output", SAMPLE_LINES["rsk-output"])
    assert P == Tableau.of([[1, 3, 4], [2, 7], [5], [6]])
    assert F.decode("lattice", SAMPLE_LINES["lattice"]) == ((1, 1, 1, 0, 0), (1, 1, 0, 1, 0))


@pytest.mark.parametrize("name", sorted(F.CODECS))
def test_each_format_rejects_other_sample_lines(name):
    for other, line in SAMPLE_LINES.items():
        if other == name:
            continue
        with pytest.raises(F.FormatError):
            F.decode(name, line)


@pytest.mark.parametrize("name,line", [
    ("characters", "[3,1,1],[2,2,1],-2 "),
    ("characters", "[3,1,1],[2,2,1],-02"),
    ("characters", "[1,3,1],[2,2,1],-2"),
    ("characters", "[3,1,1],[2,2],-2"),
    ("mheight", "(6,8,7,5,4,9,3,0,1,2);1"),
    ("mheight", "(0, 0, 1);1"),
    ("mheight", "(1, 0);-0"),
    ("grassmannian", "[[1, 2], [3]"),
    ("grassmannian", "[[1,2],[3,4]]"),
    ("kl", "0123 0123 1,0"),
    ("kl", "0123 012 1"),
    ("kl", "0123 0123 "),
    ("rsk-input", "1,0,1"),
    ("rsk-input", "0,2,0"),
    ("rsk-input", "0,0"),
    ("rsk-output", "[[[1, 2]], [[1], [2]]]"),
    ("schubert", "[1,2,3,5,4],[1,2,3,5,4],[1,2,3,6,4,4];1"),
    ("lattice", "1,1,1,0,0;1,1,0,1,0;"),
    ("lattice", "1,2,1,0,0;1,1,0,1,0"),
    ("quiver", "0,1,-1"),
    ("quiver", "1,1,-1,0"),
    ("weaving", "(0,1,2)"),
    ("weaving", ""),
])
def test_malformed_lines_are_rejected(name, line):
    with pytest.raises(F.FormatError):
        F.decode(name, line)


def test_errors_carry_line_and_column():
    text = "[3,1,1],[2,2,1],-2\n[3,1,1],[2,2,1],x\n"
    with pytest.raises(F.FormatError) as exc:
        list(F.loads("characters", text))
    assert exc.value.line == 2 and exc.value.col == 17
    assert str(exc.value).startswith("line 2, column 17")
    with pytest.raises(F.FormatError) as exc:
        list(F.loads("characters", "[3,1,1],[2,2,1],-2"))
    assert exc.value.line == 1


def test_unknown_format():
    with pytest.raises(ValueError):
        F.encode("csv", ())


def test_dumps_is_deterministic_lf_only():
    recs = F.read_file(GOLDEN / "schubert.txt", "schubert")
    a, b = F.dumps("schubert", recs), F.dumps("schubert", list(recs))
    assert a == b and "\r" not in a and a.endswith("\n")
