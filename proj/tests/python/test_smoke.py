import json
import os
import pathlib
import random
import subprocess

import pytest

import scalc

SPECS = pathlib.Path(os.environ.get("SCALC_SPECS_DIR", pathlib.Path(__file__).resolve().parents[2] / "specs"))
MASK = (1 << 64) - 1


def read(name):
    return (SPECS / name).read_text()


def splitmix64_ref(x):
    z = (x + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


def fnv1a64_ref(text):
    h = 0xCBF29CE484222325
    for b in text.encode():
        h = ((h ^ b) * 0x100000001B3) & MASK
    return h


def test_hashes_match_reference():
    rng = random.Random(7)
    for _ in range(200):
        x = rng.getrandbits(64)
        assert scalc.splitmix64(x) == splitmix64_ref(x)
    for s in ["", "a", "thm3.5", "t22", "negative-control-1"]:
        assert scalc.fnv1a64(s) == fnv1a64_ref(s)


def test_verify_examples():
    assert scalc.verify(read("ex41.spec"))["holds"] is True
    bad = scalc.verify(read("ex41_bad.spec"))
    assert bad["holds"] is False
    assert bad["counterexample"]["kind"] == "BadSuccessor"
    assert bad["counterexample"]["final"] == {"a": 10}
    assert scalc.verify(read("ex42.spec"))["stats"]["space_size"] == 2048


def test_divergence_modes():
    total = scalc.verify(read("diverge.spec"), "total")
    assert total["counterexample"]["kind"] == "NoSuccessor"
    assert scalc.verify(read("diverge.spec"), "partial")["holds"] is True


def test_errors_raise():
    with pytest.raises(scalc.ScalcError, match="SyntaxError"):
        scalc.verify("[program]\nint a;\na = ;\n")


def test_laws():
    ids = [l["id"] for l in scalc.list_laws()]
    assert "thm3.5" in ids and "negative-control-1" in ids
    assert scalc.check_law("thm3.5", sizes=[2], exhaustive=True) == (64, 0)
    assert scalc.check_law("negative-control-1")[1] > 0
    code, out, _ = scalc.run(["laws", "--law", "thm3.5"])
    assert code == 0
    assert set(json.loads(out)) == {"law", "trials", "violations"}


def test_cli_binary_matches_binding():
    binary = os.environ.get("SCALC_BIN")
    if not binary:
        pytest.skip("SCALC_BIN not set")
    args = ["verify", str(SPECS / "ex42_weak.spec")]
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    code, out, _ = scalc.run(args)
    assert (proc.returncode, proc.stdout) == (code, out) == (1, out)


z3 = pytest.importorskip("z3")


def solve(smt):
    s = z3.Solver()
    s.from_string(smt)
    return s.check()


@pytest.mark.parametrize(
    "name, kwargs, expected",
    [
        ("ex41.spec", {}, "unsat"),
        ("ex41_bad.spec", {}, "sat"),
        ("ex42.spec", {"unroll": 3}, "unsat"),
        ("ex42_weak.spec", {"unroll": 3}, "sat"),
        ("diverge.spec", {"unroll": 4, "mode": "partial"}, "unsat"),
        ("diverge.spec", {"unroll": 4, "mode": "total"}, "sat"),
    ],
)
def test_exported_vcs_with_z3(name, kwargs, expected):
    assert str(solve(scalc.export_smt(read(name), **kwargs))) == expected
