"""Command line surface: exit codes, JSON emission, round trips."""

import json

import pytest

from weakbialg.cli import main
from weakbialg.gallery import GALLERY_WBA_NAMES


def run(*argv):
    return main(list(argv))


# ---------------------------------------------------------------- exit codes

PASSING = [
    ("check", "k2"),
    ("check", "torusB:4"),
    ("pi", "dual_k2"),
    ("grouplikes", "k2"),
    ("g", "iso2"),
    ("antipode", "iso2"),
    ("galois", "groupZ2"),
    ("hopf-suite", "dual_iso2"),
    ("dual", "k2"),
    ("counit", "k2"),
    ("duoidal-roundtrip", "dual_k2"),
    ("from-category", "interval"),
    ("adjoint", "interval", "iso2"),
    ("torus", "--N", "3"),
    ("gallery",),
    ("gallery", "cat:iso2"),
    ("gallery", "frob:Mat2"),
    ("gallery", "span:interval"),
]


@pytest.mark.parametrize("argv", PASSING, ids=lambda a: " ".join(a))
def test_passing_commands_exit_zero(argv, capsys):
    assert run(*argv) == 0
    capsys.readouterr()


FAILING = [
    ("antipode", "k2"),          # no antipode exists
    ("hopf-suite", "dual_k2"),
    ("counit", "dual_k2"),       # counit of adjunction is not invertible
]


@pytest.mark.parametrize("argv", FAILING, ids=lambda a: " ".join(a))
def test_failing_commands_exit_one(argv, capsys):
    assert run(*argv) == 1
    capsys.readouterr()


USAGE_ERRORS = [
    ("check", "nosuchgallery"),
    ("gallery", "nosuchname"),
    ("from-category", "nosuchcat"),
    ("morphism", "/nonexistent/path.json"),
    ("torus", "--N", "4", "--q", "2"),   # q must be invertible mod N
]


@pytest.mark.parametrize("argv", USAGE_ERRORS, ids=lambda a: " ".join(a))
def test_bad_input_exits_two(argv, capsys):
    assert run(*argv) == 2
    capsys.readouterr()


# ------------------------------------------------------------- JSON output

def test_report_is_json_on_stdout(capsys):
    assert run("check", "k2") == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "pass"
    assert all(c["pass"] for c in payload["checks"])


def test_out_flag_writes_file(tmp_path, capsys):
    out = tmp_path / "rep.json"
    assert run("pi", "torusB:2", "--out", str(out)) == 0
    capsys.readouterr()
    payload = json.loads(out.read_text())
    assert payload["verdict"] == "pass"
    assert "piR" in payload


@pytest.mark.parametrize("name", GALLERY_WBA_NAMES)
def test_gallery_emit_then_check(name, tmp_path, capsys):
    out = tmp_path / "h.json"
    assert run("gallery", name, "--out", str(out)) == 0
    assert run("check", str(out)) == 0
    capsys.readouterr()


def test_morphism_verb(tmp_path, capsys):
    src = tmp_path / "k2.json"
    dst = tmp_path / "iso2.json"
    assert run("gallery", "k2", "--out", str(src)) == 0
    assert run("gallery", "iso2", "--out", str(dst)) == 0
    capsys.readouterr()

    source = json.loads(src.read_text())
    target = json.loads(dst.read_text())
    # k2 embeds in iso2 basis-by-basis (shared names S, T, a)
    tnames = target["basis"]
    matrix = [[0] * 3 for _ in range(4)]
    for j, b in enumerate(source["basis"]):
        matrix[tnames.index(b)][j] = 1
    spec = tmp_path / "mor.json"
    spec.write_text(json.dumps(
        {"source": source, "target": target, "matrix": matrix}))
    assert run("morphism", str(spec)) == 0
    capsys.readouterr()

    matrix[tnames.index("a")][source["basis"].index("a")] = 0
    spec.write_text(json.dumps(
        {"source": source, "target": target, "matrix": matrix}))
    assert run("morphism", str(spec)) == 1
    capsys.readouterr()


def test_torus_verb_reports_invariants(capsys):
    assert run("torus", "--N", "2") == 0
    payload = json.loads(capsys.readouterr().out)
    names = {c["name"]: c["pass"] for c in payload["checks"]}
    assert names["antipode_is_identity"]
    assert names["grouplike_count"]


def test_span_suite_seeded(capsys):
    assert run("span-suite", "--base-size", "2", "--samples", "4",
               "--seed", "7") == 0
    capsys.readouterr()


def test_bimre_suite_single_base(capsys):
    assert run("bimre-suite", "--base", "QxQ", "--seed", "1") == 0
    capsys.readouterr()
