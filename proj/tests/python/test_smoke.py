import json
import os
import subprocess
from fractions import Fraction
from itertools import product
from pathlib import Path

import pytest

import superstein as ss

CLI = os.environ.get("SUPERSTEIN_CLI")
SCHEMA = os.environ.get("SUPERSTEIN_SCHEMA")
DATA = os.environ.get("SUPERSTEIN_DATA_DIR")


def test_corpus_round_trip():
    for name in ss.corpus_names():
        a = ss.builtin(name)
        text = ss.serialize_algebra(a)
        assert ss.serialize_algebra(ss.parse_algebra(text)) == text
        assert ss.validate(a) == []


def test_char_two_rejected():
    with pytest.raises(ss.AlgFileError):
        ss.parse_algebra("field Fp:2\nbasis one:even\nunit one\n")
    with pytest.raises(ValueError):
        ss.builtin("field", "Fp:2")


def test_grassmann_is_supercommutative():
    # independent check: every product of basis elements satisfies ab = (-1)^{|a||b|} ba
    a = ss.builtin("grassmann(2)")
    p = a.parities
    for i, j in product(range(a.dim), repeat=2):
        ab = {k: Fraction(v) for k, v in a.product(i, j).items()}
        ba = {k: Fraction(v) * (-1) ** (p[i] * p[j]) for k, v in a.product(j, i).items()}
        assert ab == ba


def test_hc1_values():
    assert ss.hc1_dim(ss.builtin("field")) == 0
    assert ss.hc1_dim(ss.builtin("grassmann(1)")) == 1
    for name in ss.corpus_names():
        assert ss.hc1_dim(ss.builtin(name)) == ss.hc_n(ss.builtin(name), 1)


def test_kernel_matches_hc1():
    k = ss.steinberg_kernel(ss.builtin("grassmann(1)"), "2|1")
    assert k["kernel_dim"] == 1 and k["hc1_match"] and k["central"]


def test_lie_bracket_is_super_skew():
    l = ss.concretize("sl", ss.builtin("field"), "2|1")
    assert l.dim == 8
    p = l.parities
    for i, j in product(range(l.dim), repeat=2):
        x = {k: Fraction(v) for k, v in l.bracket(i, j).items()}
        y = {k: -Fraction(v) * (-1) ** (p[i] * p[j]) for k, v in l.bracket(j, i).items()}
        assert x == y


def test_st22_homology_and_sharp():
    field = ss.builtin("field")
    st = ss.concretize("st", field, "2|2")
    h = ss.homology(st)
    assert (h["h1"], h["h2"]) == (0, 2)
    assert h["boundary_squares_to_zero"]
    assert ss.homology(ss.build_st_sharp(field))["h2"] == 0


def test_size_guard():
    with pytest.raises(ss.SizeGuardError):
        ss.homology(ss.concretize("st", ss.builtin("field"), "2|2"), max_wedge=10)


def test_cocycle_and_mutation():
    g1 = ss.builtin("grassmann(1)")
    v = ss.verify_cocycle(g1)
    assert v["skew"] and v["jacobi"]
    m = ss.verify_cocycle(g1, mutate=True)
    assert not (m["skew"] and m["jacobi"])
    assert m["witness"]


def test_lie_export_round_trip():
    l = ss.concretize("sl", ss.builtin("field"), "2|1")
    back = ss.parse_lie(ss.export_lie(l))
    assert back.dim == l.dim
    assert all(back.bracket(i, j) == l.bracket(i, j) for i in range(l.dim) for j in range(l.dim))


def test_report_dict():
    r = ss.report("homology", "builtin:field", shape="2|2", target="st")
    assert r["status"] == "pass"
    assert r["results"]["h2"] == 2


@pytest.mark.skipif(not (CLI and SCHEMA), reason="CLI or schema path not provided")
def test_cli_json_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(Path(SCHEMA).read_text())
    cases = [
        ["validate", "builtin:mat(2)"],
        ["hc", "--algebra", "builtin:dual", "--degree", "2"],
        ["pairing", "--algebra", "builtin:grassmann2"],
        ["sl", "--algebra", "builtin:grassmann1", "--shape", "2|1"],
        ["st", "--algebra", "builtin:field", "--shape", "2|2", "--verify"],
        ["kernel", "--algebra", "builtin:grassmann1", "--shape", "2|1"],
        ["homology", "--target", "stsharp", "--algebra", "builtin:field", "--shape", "2|2"],
        ["cocycle22", "--algebra", "builtin:grassmann1"],
    ]
    for args in cases:
        out = subprocess.run([CLI, *args, "--emit", "json"], capture_output=True, text=True)
        assert out.returncode == 0, out.stderr
        jsonschema.validate(json.loads(out.stdout), schema)
    out = subprocess.run([CLI, "corpus", "--emit", "json"], capture_output=True, text=True)
    assert out.returncode == 0
    jsonschema.validate(json.loads(out.stdout), schema)


@pytest.mark.skipif(not (CLI and DATA), reason="CLI or data path not provided")
def test_cli_exit_codes():
    invalid = Path(DATA) / "invalid"
    for doc in sorted(invalid.glob("*.alg")):
        out = subprocess.run([CLI, "hc", "--algebra", str(doc)], capture_output=True, text=True)
        assert out.returncode == 2, doc.name
    out = subprocess.run([CLI, "validate", str(invalid / "nonassociative.alg")], capture_output=True, text=True)
    assert out.returncode == 1
    out = subprocess.run([CLI, "hc", "--algebra", str(Path(DATA) / "grassmann1.alg")], capture_output=True, text=True)
    assert out.returncode == 0
