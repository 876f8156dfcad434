import json
import subprocess
import sys

import pytest

from semilab.cli import main
from semilab.documents import from_document, read_semigroup, to_document, write_semigroup
from semilab.semigroup import full_transformation_monoid, local_subsemigroup, symmetric_inverse_monoid, variant


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_gen_tn3(capsys):
    code, out, _ = run(capsys, "gen", "tn", "3")
    doc = json.loads(out)
    assert code == 0
    assert doc["kind"] == "transformation" and doc["degree"] == 3
    assert len(doc["elements"]) == 27 and doc["elements"][0] == "111"


def test_gen_guard(capsys):
    code, _, err = run(capsys, "gen", "tn", "6")
    assert code == 3 and "size guard" in err


def test_gen_roundtrip(tmp_path, capsys):
    path = tmp_path / "is2.json"
    assert run(capsys, "gen", "isn", "2", "--out", str(path))[0] == 0
    S = read_semigroup(path)
    assert len(S) == 7 and S.kind == "partial-permutation"


def test_local_command(capsys):
    code, out, _ = run(capsys, "local", "--builtin", "tn4", "--elem", "2432")
    doc = json.loads(out)
    assert code == 0 and len(doc["elements"]) == 27
    assert doc["provenance"]["construction"] == "local"


def test_variant_is_abstract_table(tmp_path, capsys):
    path = tmp_path / "v.json"
    code, _, _ = run(capsys, "variant", "--builtin", "tn3", "--elem", "112", "--out", str(path))
    assert code == 0
    doc = json.loads(path.read_text())
    assert doc["kind"] == "abstract-table" and doc["degree"] is None
    V = read_semigroup(path)
    assert V.identity() is None


def test_elem_by_index_and_errors(capsys):
    assert run(capsys, "local", "--builtin", "tn3", "--elem", "#0")[0] == 0
    assert run(capsys, "local", "--builtin", "tn3", "--elem", "99")[0] == 2
    assert run(capsys, "local", "--builtin", "nope3", "--elem", "1")[0] == 2
    assert run(capsys, "local", "--elem", "12")[0] == 2


def test_eggbox_formats_deterministic(capsys):
    for fmt in ("ascii", "dot", "json"):
        a = run(capsys, "eggbox", "--builtin", "tn4", "--elem", "2432", "--format", fmt)
        b = run(capsys, "eggbox", "--builtin", "tn4", "--elem", "2432", "--format", fmt)
        assert a[0] == 0 and a[1] == b[1]
    out = run(capsys, "eggbox", "--builtin", "isn2")[1]
    assert out.startswith("+") and "12*" in out


def test_iso_exit_codes(tmp_path, capsys):
    a = tmp_path / "a.json"
    run(capsys, "local", "--builtin", "tn4", "--elem", "2343", "--out", str(a))
    b = tmp_path / "b.json"
    run(capsys, "local", "--builtin", "tn4", "--elem", "1123", "--out", str(b))
    code, out, _ = run(capsys, "iso", str(a), str(b))
    assert code == 0 and json.loads(out)["verdict"] == "isomorphic"
    code, out, _ = run(capsys, "iso", "tn2", "isn1")
    assert code == 1 and json.loads(out)["refutation"] == "order"
    assert run(capsys, "iso", "tn3", str(a), "--budget", "0")[0] in (1, 3)
    assert run(capsys, "iso", "nofile", "tn2")[0] == 2


def test_verify_command(tmp_path, capsys):
    out1 = tmp_path / "r1.json"
    out2 = tmp_path / "r2.json"
    assert run(capsys, "verify", "S2.Prop.order", "--max-n", "4", "--no-timing", "--out", str(out1))[0] == 0
    assert run(capsys, "verify", "S2.Prop.order", "--max-n", "4", "--no-timing", "--out", str(out2))[0] == 0
    assert out1.read_bytes() == out2.read_bytes()
    doc = json.loads(out1.read_text())
    assert doc["instances"] == 256 and doc["verdict"] == "pass"
    assert run(capsys, "verify", "bogus.id")[0] == 2


def test_selftest_command(capsys):
    code, out, _ = run(capsys, "selftest", "--builtin", "isn2", "--count", "5")
    assert code == 0 and json.loads(out)["verdicts"] == ["isomorphic"] * 5


def test_bad_document(tmp_path, capsys):
    doc = to_document(full_transformation_monoid(2))
    doc["table"][0][0] = 3
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    assert run(capsys, "eggbox", "--in", str(path))[0] == 2
    doc["format_version"] = 99
    path.write_text(json.dumps(doc))
    assert run(capsys, "eggbox", "--in", str(path))[0] == 2


@pytest.mark.parametrize("build", [
    lambda: full_transformation_monoid(3),
    lambda: symmetric_inverse_monoid(3),
    lambda: local_subsemigroup(full_transformation_monoid(4), 100),
    lambda: variant(symmetric_inverse_monoid(2), 3),
])
def test_document_roundtrip(build, tmp_path):
    S = build()
    path = tmp_path / "s.json"
    write_semigroup(S, path)
    S2 = read_semigroup(path)
    assert to_document(S2) == to_document(S)
    assert from_document(json.loads(path.read_text())).name == S.name


def test_module_entrypoint():
    proc = subprocess.run([sys.executable, "-m", "semilab", "gen", "isn", "1"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["elements"] == ["-", "1"]
