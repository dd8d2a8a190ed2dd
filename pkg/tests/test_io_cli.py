import json
import subprocess
import sys
from pathlib import Path

import pytest

from weakhopf import Field, ParseError, flip, io
from weakhopf.cli import main, verification_report
from weakhopf.exact_linear import scale

import mutations
from conftest import EXTENDED, build

DATA = Path(__file__).parent / "data"
GOLDEN = DATA / "golden"


def run(argv, capsys):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(io.dumps(doc))
    return path


# -- documents --------------------------------------------------------------

@pytest.mark.parametrize("name", EXTENDED)
def test_whq_round_trip(name):
    H = build(name)
    text = io.dumps(io.whq_to_json(H))
    H2 = io.build(json.loads(text))
    assert H2 == H and H2.labels == H.labels
    assert io.dumps(io.whq_to_json(H2)) == text


def test_round_trip_keeps_custom_braiding(z2):
    H = z2.replace(braiding=scale(flip(2, 2), -1))
    doc = io.whq_to_json(H)
    assert "braiding" in doc
    assert io.build(json.loads(io.dumps(doc))) == H


def test_prime_field_scalars_serialized_with_modulus():
    doc = io.whq_to_json(build("z3_f5"))
    assert doc["field"] == {"kind": "prime", "p": 5}
    assert doc["counit"] == ["1 mod 5"] * 3


def test_field_shorthands():
    assert io.field_from_json("QQ") == Field.rationals()
    assert io.field_from_json("GF(7)") == Field.prime(7)
    with pytest.raises(Exception):
        io.field_from_json({"kind": "prime", "p": 9})


def test_load_rejects_bad_documents(tmp_path):
    bad_version = write(tmp_path, "v.json", {"schema_version": 2, "type": "whq_raw"})
    with pytest.raises(ParseError):
        io.load(bad_version)
    bad_type = write(tmp_path, "t.json", {"schema_version": 1, "type": "matrix"})
    with pytest.raises(ParseError):
        io.load(bad_type)
    (tmp_path / "j.json").write_text("{not json")
    with pytest.raises(ParseError):
        io.load(tmp_path / "j.json")
    with pytest.raises(ParseError):
        io.load(tmp_path / "missing.json")


def test_duplicate_sparse_entries_rejected(z2):
    doc = io.whq_to_json(z2)
    doc["antipode"].append([0, 0, "1"])
    with pytest.raises(Exception) as exc:
        io.build(doc)
    assert "duplicate" in str(exc.value)


def test_out_of_range_entry_rejected(z2):
    doc = io.whq_to_json(z2)
    doc["antipode"].append([5, 0, "1"])
    with pytest.raises(Exception):
        io.build(doc)


def test_golden_pair_groupoid_matches_presentation():
    """The golden file's product is exactly the composition table."""
    pres = json.loads((DATA / "pair_groupoid.json").read_text())
    golden = json.loads((GOLDEN / "pair_groupoid.whq.json").read_text())
    labels = golden["basis_labels"]
    assert labels == sorted(a["name"] for a in pres["arrows"])
    idx = {a: k for k, a in enumerate(labels)}
    n = len(labels)
    expected = sorted([idx[h], idx[g] * n + idx[f], "1"] for g, f, h in pres["composition"])
    assert sorted(golden["mul"]) == expected
    assert golden["antipode"] == sorted(
        [idx[b], idx[a], "1"] for a, b in pres["inverse"].items())
    assert golden["unit"] == ["1" if a in ("1x", "1y") else "0" for a in labels]


# -- build ------------------------------------------------------------------

@pytest.mark.parametrize("src,golden", [("pair_groupoid.json", "pair_groupoid.whq.json"),
                                        ("z2_loop.json", "z2.whq.json")])
def test_build_matches_golden(tmp_path, capsys, src, golden):
    out = tmp_path / "out.json"
    code, _ = run(["build", DATA / src, out], capsys)
    assert code == 0
    assert out.read_text() == (GOLDEN / golden).read_text()


def test_build_bad_inverse_exits_2(tmp_path, capsys):
    out = tmp_path / "out.json"
    code, cap = run(["build", DATA / "bad_inverse_bigroupoid.json", out], capsys)
    assert code == 2
    err = json.loads(out.read_text())
    assert err["type"] == "error" and err["error"] == "InconsistentPresentation"
    assert "InconsistentPresentation" in cap.err


def test_build_unreadable_input_exits_2(tmp_path, capsys):
    code, _ = run(["build", tmp_path / "nope.json", tmp_path / "out.json"], capsys)
    assert code == 2


# -- verify -----------------------------------------------------------------

def test_verify_golden_reports(capsys):
    code, cap = run(["verify", DATA / "z2_loop.json", "--json"], capsys)
    assert code == 0
    assert cap.out == (GOLDEN / "z2.report.json").read_text()
    code, cap = run(["verify", DATA / "pair_groupoid.json", "--json"], capsys)
    assert code == 0
    assert cap.out == (GOLDEN / "pair_groupoid.report.json").read_text()


def test_verify_pair_groupoid_flags(capsys):
    code, cap = run(["verify", DATA / "pair_groupoid.json", "--level", "full", "--json"],
                    capsys)
    doc = json.loads(cap.out)
    assert code == 0 and doc["passed"]
    assert doc["flags"]["is_weak_hopf_algebra"] is True
    assert doc["flags"]["is_hopf_quasigroup"] is False


def test_verify_text_output_lists_every_anchor(capsys):
    code, cap = run(["verify", DATA / "z2_loop.json"], capsys)
    lines = cap.out.splitlines()
    report = verification_report(build("z2"), "full")
    passes = [ln for ln in lines if ln.startswith("PASS ")]
    assert code == 0 and len(passes) == len(report.verdicts)
    assert all(ln.endswith("]") for ln in passes)
    assert lines[-1] == "result: pass"


@pytest.mark.parametrize("level,count", [("axioms", 14), ("derived", 14 + 76 + 29)])
def test_verify_levels(capsys, level, count):
    code, cap = run(["verify", DATA / "z2_loop.json", "--level", level, "--json"], capsys)
    assert code == 0 and len(json.loads(cap.out)["verdicts"]) == count


@pytest.mark.parametrize("make", mutations.ALL, ids=lambda f: f.__name__)
def test_mutation_exit_codes(tmp_path, capsys, make):
    m = make()
    path = write(tmp_path, "mutant.json", m.doc)
    code, cap = run([m.command, path, "--json"], capsys)
    assert code == m.exit_code
    if m.exit_code == 2:
        assert m.failing in cap.err
    else:
        doc = json.loads(cap.out)
        assert doc["first_failure"] == m.failing
        first = next(v for v in doc["verdicts"] if not v["passed"])
        assert first["witness"] == m.witness


def test_verify_text_failure_line(tmp_path, capsys):
    path = write(tmp_path, "mutant.json", mutations.antipode_identity().doc)
    code, cap = run(["verify", path, "--level", "axioms"], capsys)
    assert code == 1
    assert "FAIL a4-3.1 witness=1" in cap.out
    assert cap.out.splitlines()[-1] == "result: fail (first failure: a4-1)"


# -- coinvariants -----------------------------------------------------------

def test_coinvariants_golden(capsys):
    code, cap = run(["coinvariants", DATA / "pair_regular_module.json", "--json"], capsys)
    assert code == 0
    assert cap.out == (GOLDEN / "pair_regular.coinvariants.json").read_text()
    assert json.loads(cap.out)["dimensions"] == {"coh_dim": 2, "rank_nabla": 4}


def test_coinvariants_of_algebra_document(capsys):
    code, cap = run(["coinvariants", DATA / "z2_loop.json", "--json"], capsys)
    doc = json.loads(cap.out)
    assert code == 0 and doc["dimensions"]["coh_dim"] == 1
    assert doc["flags"]["certificate"] is True


def test_coinvariants_explicit_module(tmp_path, capsys):
    H = build("z3")
    doc = {"schema_version": 1, "type": "hopf_module", "over": io.whq_to_json(H),
           "dim": 3, "action": io.matrix_to_json(H.mul),
           "coaction": io.matrix_to_json(H.comul)}
    code, cap = run(["coinvariants", write(tmp_path, "m.json", doc)], capsys)
    assert code == 0 and cap.out.splitlines()[-1] == "result: pass"


# -- determinism ------------------------------------------------------------

def test_reports_identical_across_runs_and_parallelism(capsys):
    outs = []
    for jobs in ("1", "1", "4"):
        code, cap = run(["verify", DATA / "pair_groupoid.json", "--json", "--jobs", jobs],
                        capsys)
        assert code == 0
        outs.append(cap.out)
    assert outs[0] == outs[1] == outs[2]


def test_module_entry_point(tmp_path):
    out = tmp_path / "z2.json"
    proc = subprocess.run([sys.executable, "-m", "weakhopf", "build",
                           str(DATA / "z2_loop.json"), str(out)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert out.read_text() == (GOLDEN / "z2.whq.json").read_text()
