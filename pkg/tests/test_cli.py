import json

import pytest
from click.testing import CliRunner

from cyclefactor.cli import (
    EXIT_INPUT,
    EXIT_OK,
    EXIT_RANGE,
    from_document,
    main,
    random_even,
)
from cyclefactor.perm import is_even


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args):
        return runner.invoke(main, [str(a) for a in args])

    return invoke


def test_factor_text_output(run):
    res = run("factor", "--n", 5, "--k", 2, "--l", 3, "--sigma", "(1 2 3 4 5)")
    assert res.exit_code == EXIT_OK
    assert "2 3-cycles: (1 2 3) (3 4 5)" in res.output


def test_factor_identity(run):
    res = run("factor", "--n", 3, "--k", 2, "--l", 3, "--sigma", "id", "--json")
    assert res.exit_code == EXIT_OK
    assert json.loads(res.output)["factors"] == ["(1 2 3)", "(1 3 2)"]


def test_factor_json_keys_and_round_trip(run, tmp_path):
    res = run("factor", "--n", 37, "--k", 6, "--l", 9, "--random", 42, "--json")
    assert res.exit_code == EXIT_OK
    doc = json.loads(res.stdout)
    assert list(doc) == ["schema", "n", "k", "l", "sigma", "factors", "provenance"]
    assert doc["schema"] == 1 and len(doc["factors"]) == 6
    path = tmp_path / "cert.json"
    path.write_text(res.stdout)
    out = run("verify", "--cert", path)
    assert out.exit_code == EXIT_OK and out.output.strip() == "ok"


def test_random_is_reproducible(run):
    a = run("factor", "--n", 17, "--k", 4, "--l", 6, "--random", 7, "--json")
    b = run("factor", "--n", 17, "--k", 4, "--l", 6, "--random", 7, "--json")
    assert a.stdout == b.stdout
    assert is_even(random_even(17, 7))


def test_verify_tampered(run, tmp_path):
    res = run("factor", "--n", 5, "--k", 2, "--l", 3, "--sigma", "(1 2 3 4 5)", "--json")
    doc = json.loads(res.output)
    doc["factors"] = list(reversed(doc["factors"]))
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    out = run("verify", "--cert", path)
    assert out.exit_code == EXIT_INPUT
    assert "mismatch" in out.output and "product:" in out.output and "target:" in out.output


def test_verify_malformed(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema": 1, "n": 3}))
    assert run("verify", "--cert", path).exit_code == EXIT_INPUT
    path.write_text("not json")
    assert run("verify", "--cert", path).exit_code == EXIT_INPUT


def test_from_document_rejects_schema():
    with pytest.raises(ValueError, match="schema"):
        from_document({"schema": 2, "n": 3, "k": 2, "l": 3, "sigma": "id", "factors": []})


@pytest.mark.parametrize(
    "args,code",
    [
        (("--n", 6, "--k", 2, "--l", 3, "--sigma", "(1 2)(3 4 5 6)"), EXIT_RANGE),
        (("--n", 38, "--k", 6, "--l", 9, "--random", 1), EXIT_RANGE),
        (("--n", 5, "--k", 2, "--l", 3, "--sigma", "(1 2)"), EXIT_INPUT),
        (("--n", 5, "--k", 2, "--l", 3, "--sigma", "(1 9)"), EXIT_INPUT),
        (("--n", 5, "--k", 2, "--l", 3), EXIT_INPUT),
        (("--n", 5, "--k", 2, "--l", 3, "--sigma", "id", "--random", 1), EXIT_INPUT),
    ],
)
def test_factor_exit_codes(run, args, code):
    res = run("factor", *args)
    assert res.exit_code == code
    if code == EXIT_RANGE:
        assert "out of proven range" in res.output


def test_bound(run):
    res = run("bound", "--k", 6, "--l", 9)
    assert res.exit_code == EXIT_OK
    assert res.output.startswith("n1=36 upper=37 exact=37 (")
    assert run("bound", "--k", 3, "--l", 4).exit_code == EXIT_INPUT


def test_oracle_command(run):
    res = run("oracle", "--n", 6, "--l", 3, "--k", 2)
    assert res.exit_code == EXIT_OK
    assert "covered: no" in res.output
    assert "reached: 270 of 360" in res.output
    assert "missing: (1 2)(3 4 5 6)" in res.output
    assert "covered: yes" in run("oracle", "--n", 7, "--l", 3, "--k", 3).output
    assert run("oracle", "--n", 11, "--l", 3, "--k", 2).exit_code == EXIT_INPUT


def test_table_command(run):
    res = run("table", "--kmax", 2, "--lmax", 3, "--nmax", 7, "--csv")
    assert res.exit_code == EXIT_OK
    assert res.output.splitlines()[0] == "k,l,oracle,closed_form,upper,agrees"
    assert "2,3,5,5,5,True" in res.output.splitlines()
