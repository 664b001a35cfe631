import json

import pytest

from fermatreps.cli import main
from fermatreps.decompose import decompose_table
from fermatreps.group import irrep_degree, list_irreps
from fermatreps.series import Polynomial, RationalFunction, total_series


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_usage_error_small_n(capsys):
    code, out, err = run_cli(capsys, "--n", "3", "--command", "decompose")
    assert code == 1
    assert "usage error" in err
    assert out == ""


def test_usage_error_bad_command(capsys):
    code, _out, err = run_cli(capsys, "--n", "6", "--command", "frobnicate")
    assert code == 1
    assert "usage error" in err


def test_determinism(capsys):
    argv = ("--n", "5", "--command", "decompose", "--m-min", "0", "--m-max", "6", "--format", "json")
    code1, out1, _ = run_cli(capsys, *argv)
    code2, out2, _ = run_cli(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_decompose_m0_single_constituent(capsys):
    code, out, _ = run_cli(
        capsys, "--n", "4", "--command", "decompose", "--m-min", "0", "--m-max", "0"
    )
    assert code == 0
    lines = [l for l in out.splitlines() if l.strip()]
    assert len(lines) == 2  # header + one row
    assert lines[1].split()[:3] == ["4", "0", "1"]


def test_decompose_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "--n", "6", "--command", "decompose",
        "--m-min", "1", "--m-max", "4", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 6
    tables = decompose_table(6, range(1, 5))
    for block, table in zip(payload["tables"], tables):
        rebuilt = {
            (e["kappa"], e["lambda"], e["rho"]): e["mult"] for e in block["entries"]
        }
        for label, mult in table.entries:
            assert rebuilt[(label.kappa, label.lam, label.rho)] == mult
        assert block["dim"] == sum(
            e["degree"] * e["mult"] for e in block["entries"]
        )


def test_series_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "--n", "6", "--command", "series", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["total_weighted"] == {"num": [1, 8, 8, 1], "den": [1, -2, 1]}
    rebuilt = RationalFunction(
        Polynomial(payload["total_weighted"]["num"]),
        Polynomial(payload["total_weighted"]["den"]),
    )
    assert rebuilt == total_series(6, weighted=True)
    assert len(payload["isotypic"]) == len(list_irreps(6))


def test_series_table_output(capsys):
    code, out, _ = run_cli(capsys, "--n", "6", "--command", "series")
    assert code == 0
    assert "total (degree-weighted): (t^3 + 8*t^2 + 8*t + 1)/(t^2 - 2*t + 1)" in out


def test_taylor_default_weighted_total(capsys):
    code, out, _ = run_cli(capsys, "--n", "6", "--command", "taylor", "--taylor-terms", "7", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == [1, 10, 27, 45, 63, 81, 99, 117]


def test_taylor_with_label(capsys):
    code, out, _ = run_cli(
        capsys, "--n", "6", "--command", "taylor",
        "--label", "0,0,stan", "--taylor-terms", "9", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["coefficients"] == [0, 0, 0, 0, 1, 1, 1, 1, 1, 1]


def test_taylor_bad_label(capsys):
    code, _out, err = run_cli(capsys, "--n", "6", "--command", "taylor", "--label", "1,0,triv")
    assert code == 1
    assert "usage error" in err


def test_irreps_output(capsys):
    code, out, _ = run_cli(capsys, "--n", "5", "--command", "irreps", "--format", "csv")
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[0] == ["kappa", "lambda", "rho", "orbit_class", "degree"]
    assert len(rows) - 1 == len(list_irreps(5))
    degs = [int(r[4]) for r in rows[1:]]
    assert sum(d * d for d in degs) == 150


def test_lattice_probe(capsys):
    code, out, _ = run_cli(
        capsys, "--n", "4", "--command", "lattice-probe",
        "--m", "1", "--x", "1", "--y", "1", "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["I_diff"] == 0 and payload["alpha"] == 0
    code, _out, err = run_cli(capsys, "--n", "4", "--command", "lattice-probe")
    assert code == 1
    assert "usage error" in err


def test_verify_small(capsys, monkeypatch):
    monkeypatch.setenv("FERMATREPS_WORKERS", "1")
    code, out, _ = run_cli(
        capsys, "--n", "4", "--command", "verify", "--m-min", "1", "--m-max", "3"
    )
    assert code == 0
    assert out.splitlines() == [
        "verify n=4 m=1: ok (10 labels)",
        "verify n=4 m=2: ok (10 labels)",
        "verify n=4 m=3: ok (10 labels)",
    ]


def test_verify_parallel_workers(capsys, monkeypatch):
    monkeypatch.setenv("FERMATREPS_WORKERS", "2")
    code, out, _ = run_cli(
        capsys, "--n", "4", "--command", "verify", "--m-min", "1", "--m-max", "2"
    )
    assert code == 0
    assert out.count("ok") == 2


def test_verify_rejects_large_n(capsys):
    code, _out, err = run_cli(capsys, "--n", "12", "--command", "verify")
    assert code == 1
    assert "oracle-bound" in err


def test_decompose_csv(capsys):
    code, out, _ = run_cli(
        capsys, "--n", "4", "--command", "decompose",
        "--m-min", "1", "--m-max", "2", "--format", "csv",
    )
    assert code == 0
    rows = [line.split(",") for line in out.strip().splitlines()]
    assert rows[0] == ["n", "m", "kappa", "lambda", "rho", "degree", "mult"]
    assert len(rows) - 1 == 2 * len(list_irreps(4))
    got = {
        (int(r[1]), int(r[2]), int(r[3]), r[4]): int(r[6]) for r in rows[1:]
    }
    assert got[(1, 1, 1, "sgn")] == 1
    assert sum(v for (m, *_), v in zip(got.keys(), got.values()) if m == 2) == 2
