"""End-to-end CLI behavior through subprocesses: exit codes, files, formats."""

import csv
import json
import subprocess
import sys

import pytest


def run_cli(*args, cwd):
    return subprocess.run(
        [sys.executable, "-m", "twoside", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def read_json(path):
    with open(path) as fh:
        return json.load(fh)


# -- exchange -----------------------------------------------------------------


def test_exchange_digital(tmp_path):
    out = tmp_path / "t.json"
    res = run_cli(
        "exchange", "--scheme", "digital", "--n", "3", "--seed", "7",
        "--out", str(out), cwd=tmp_path,
    )
    assert res.returncode == 0
    assert "keys_agree: true" in res.stdout
    assert "seed: 7" in res.stdout
    obj = read_json(out)
    assert obj["scheme"] == "digital"
    assert obj["keys_agree"] is True
    assert obj["seed"] == 7
    assert "secrets" not in obj


def test_exchange_twisted(tmp_path):
    out = tmp_path / "t.json"
    res = run_cli(
        "exchange", "--scheme", "twisted", "--p", "2", "--fext", "2", "--m", "3",
        "--seed", "7", "--out", str(out), cwd=tmp_path,
    )
    assert res.returncode == 0
    obj = read_json(out)
    assert obj["scheme"] == "twisted"
    assert obj["keys_agree"] is True


def test_exchange_rejects_composite_p(tmp_path):
    res = run_cli(
        "exchange", "--scheme", "twisted", "--p", "4", "--fext", "2", "--m", "3",
        cwd=tmp_path,
    )
    assert res.returncode == 2
    assert "p must be prime" in res.stderr


def test_exchange_seed_echoed_without_flag(tmp_path):
    res = run_cli("exchange", "--n", "2", "--out", "t.json", cwd=tmp_path)
    assert res.returncode == 0
    seed_lines = [l for l in res.stdout.splitlines() if l.startswith("seed: ")]
    assert len(seed_lines) == 1
    int(seed_lines[0].split()[1])  # parses as an integer


def test_exchange_replay_same_seed(tmp_path):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    for out in (a, b):
        res = run_cli(
            "exchange", "--n", "3", "--seed", "42", "--out", str(out),
            "--insecure-dump", cwd=tmp_path,
        )
        assert res.returncode == 0
    assert a.read_text() == b.read_text()


def test_insecure_dump_gates_secrets(tmp_path):
    out = tmp_path / "t.json"
    run_cli(
        "exchange", "--n", "2", "--seed", "1", "--out", str(out),
        "--insecure-dump", cwd=tmp_path,
    )
    obj = read_json(out)
    assert "secrets" in obj
    assert "shared_key" in obj["secrets"]


# -- attack -------------------------------------------------------------------


@pytest.mark.parametrize(
    "scheme,flags",
    [
        ("digital", ["--n", "3"]),
        ("twisted", ["--p", "2", "--fext", "2", "--m", "3"]),
        ("twisted", ["--p", "5", "--fext", "1", "--m", "6"]),
    ],
)
def test_attack_on_honest_transcript(tmp_path, scheme, flags):
    out = tmp_path / "t.json"
    run_cli(
        "exchange", "--scheme", scheme, *flags, "--seed", "5", "--out", str(out),
        "--insecure-dump", cwd=tmp_path,
    )
    res = run_cli("attack", str(out), cwd=tmp_path)
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["attack_key_matches"] is True
    assert report["reference_key_present"] is True
    assert report["unknowns"] > 0 and report["equations"] > 0
    assert '"attack_key_matches": true' in res.stdout


def test_attack_on_stripped_transcript_uses_public_data_only(tmp_path):
    out = tmp_path / "t.json"
    run_cli(
        "exchange", "--n", "3", "--seed", "6", "--out", str(out), cwd=tmp_path,
    )
    obj = read_json(out)
    assert "secrets" not in obj  # nothing private in the file at all
    res = run_cli("attack", str(out), cwd=tmp_path)
    assert res.returncode == 0
    report = json.loads(res.stdout)
    assert report["reference_key_present"] is False
    assert report["recovered_keys_agree"] is True


def test_attack_exit_4_on_corrupted_public_key(tmp_path):
    out = tmp_path / "t.json"
    run_cli(
        "exchange", "--n", "3", "--seed", "8", "--out", str(out), cwd=tmp_path,
    )
    obj = read_json(out)
    obj["alice_public"]["rows"][0][0] = int("9" * 18)
    out.write_text(json.dumps(obj))
    res = run_cli("attack", str(out), cwd=tmp_path)
    assert res.returncode == 4


def test_attack_exit_3_on_tampered_reference_key(tmp_path):
    out = tmp_path / "t.json"
    run_cli(
        "exchange", "--n", "3", "--seed", "9", "--out", str(out),
        "--insecure-dump", cwd=tmp_path,
    )
    obj = read_json(out)
    rows = obj["secrets"]["shared_key"]["rows"]
    rows[0][0] = 123456 if rows[0][0] != 123456 else 654321
    out.write_text(json.dumps(obj))
    res = run_cli("attack", str(out), cwd=tmp_path)
    assert res.returncode == 3
    report = json.loads(res.stdout)
    assert report["attack_key_matches"] is False


def test_attack_dump_system_format(tmp_path):
    out = tmp_path / "t.json"
    dump = tmp_path / "system.json"
    run_cli("exchange", "--n", "2", "--seed", "3", "--out", str(out), cwd=tmp_path)
    res = run_cli("attack", str(out), "--dump-system", str(dump), cwd=tmp_path)
    assert res.returncode == 0
    system = read_json(dump)
    assert set(system) == {"columns", "target"}
    assert len(system["columns"]) == 4
    assert all(len(col) == len(system["target"]) == 4 for col in system["columns"])


def test_attack_unreadable_file(tmp_path):
    res = run_cli("attack", "no-such-file.json", cwd=tmp_path)
    assert res.returncode == 2


def test_attack_malformed_transcript(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"scheme": "digital"}')
    res = run_cli("attack", str(bad), cwd=tmp_path)
    assert res.returncode == 2


# -- bench ----------------------------------------------------------------------


def test_bench_digital_grid(tmp_path):
    out = tmp_path / "bench.csv"
    res = run_cli(
        "bench", "--scheme", "digital", "--n", "2,4", "--trials", "3",
        "--seed", "17", "--out", str(out), cwd=tmp_path,
    )
    assert res.returncode == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 6
    assert [r["params"] for r in rows] == ["n=2"] * 3 + ["n=4"] * 3
    assert [r["trial"] for r in rows] == ["0", "1", "2"] * 2
    assert all(r["success"] == "true" for r in rows)
    assert all(float(r["solve_ms"]) >= 0 for r in rows)
    assert list(rows[0]) == ["scheme", "params", "trial", "solve_ms", "attack_ms", "success"]


def test_bench_twisted_grid(tmp_path):
    out = tmp_path / "bench.csv"
    res = run_cli(
        "bench", "--scheme", "twisted", "--p", "2,3", "--fext", "1", "--m", "3",
        "--trials", "2", "--seed", "17", "--out", str(out), cwd=tmp_path,
    )
    assert res.returncode == 0
    with open(out, newline="") as fh:
        rows = list(csv.DictReader(fh))
    assert len(rows) == 4
    assert all(r["scheme"] == "twisted" for r in rows)
    assert all(r["success"] == "true" for r in rows)


def test_bench_deterministic_modulo_timing(tmp_path):
    outs = []
    for name in ("a.csv", "b.csv"):
        out = tmp_path / name
        res = run_cli(
            "bench", "--scheme", "digital", "--n", "2,3", "--trials", "2",
            "--seed", "99", "--out", str(out), cwd=tmp_path,
        )
        assert res.returncode == 0
        with open(out, newline="") as fh:
            outs.append(list(csv.DictReader(fh)))
    stable = [
        [(r["scheme"], r["params"], r["trial"], r["success"]) for r in run]
        for run in outs
    ]
    assert stable[0] == stable[1]


# -- selftest ---------------------------------------------------------------------


def test_selftest_passes(tmp_path):
    res = run_cli("selftest", "--seed", "123", cwd=tmp_path)
    assert res.returncode == 0
    assert res.stdout.count("PASS") == 4
    assert "FAIL" not in res.stdout


def test_usage_error_on_unknown_command(tmp_path):
    res = run_cli("frobnicate", cwd=tmp_path)
    assert res.returncode == 2
