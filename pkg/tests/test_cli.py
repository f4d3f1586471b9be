from __future__ import annotations

import json

import pytest

from conftest import P
from rank2lnd.cli import main
from rank2lnd.derivation import jacobian_derivation
from rank2lnd.errors import ParseError, SpecError
from rank2lnd.spec_io import dump_spec, parse_spec

NTR = '{"kernel_pair": {"x": "X", "p": "(Y^2+X*Z)^2+X^3*Y", "scale": "1"}}'
TRF = '{"variables": ["X", "Y", "Z"], "images": {"X": "0", "Y": "-X", "Z": "2*Y"}}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_parse_spec_kernel_pair():
    spec = parse_spec('{"kernel_pair": {"x": "X", "p": "Y^2+X*Z", "scale": "1"}}')
    assert tuple(str(im) for im in spec.derivation.images) == ("0", "-X", "2*Y")
    assert spec.kernel_pair.p == P("Y^2 + X*Z")


def test_parse_spec_images_matches_kernel_pair():
    a = parse_spec(TRF).derivation
    b = parse_spec('{"kernel_pair": {"x": "X", "p": "Y^2+X*Z"}}').derivation
    assert a == b


def test_parse_spec_syntax_errors():
    with pytest.raises(ParseError) as info:
        parse_spec('{"images": {"Y": "Y^"}}')
    assert info.value.column == 3
    with pytest.raises(ParseError) as info:
        parse_spec('{\n  "images": ]')
    assert info.value.line == 2


@pytest.mark.parametrize("doc", [
    '[]',
    '{"images": {}, "kernel_pair": {"x": "X", "p": "Y"}}',
    '{}',
    '{"images": {"W": "1"}}',
    '{"variables": ["X", "X", "Z"], "images": {}}',
    '{"kernel_pair": {"x": "X"}}',
    '{"kernel_pair": {"x": "X", "p": "Y^2+X*Z", "scale": "0"}}',
    '{"kernel_pair": {"x": "X", "p": "Y^2+X*Z", "scale": "abc"}}',
    '{"images": {"Y": 1.5}}',
    '{"extra": 1, "images": {}}',
])
def test_parse_spec_semantic_errors(doc):
    with pytest.raises(SpecError):
        parse_spec(doc)


def test_spec_round_trip():
    D = jacobian_derivation(P("X"), P("(Y^2+X*Y+X*Z)^2 + 1/3*X^3*Y"))
    assert parse_spec(dump_spec(D)).derivation == D
    spec = parse_spec(NTR)
    again = parse_spec(dump_spec(spec))
    assert again.derivation == spec.derivation and again.kernel_pair == spec.kernel_pair


def test_triangularizable_triangular(capsys):
    code, out, _ = run(capsys, "triangularizable", "--spec", TRF)
    assert code == 0 and "verdict: triangular" in out


def test_triangularizable_nontriangular(capsys):
    code, rep = run_json(capsys, "triangularizable", "--spec", NTR)
    assert code == 0 and rep["success"]
    v = rep["verdict"]
    assert v["kind"] == "non-triangular" and v["ntr"]["t_def"] == "Y^2 + X*Z"
    assert v["degd"] == {"Y": 2, "Z": 4}
    assert rep["verification"]["ok"]


def test_triangularizable_undecided_exit_status(capsys):
    code, rep = run_json(capsys, "triangularizable", "--spec",
                         '{"kernel_pair": {"x": "X", "p": "(Y^2+X*Z)^4+X^7*Y"}}')
    assert code == 1 and not rep["success"]
    assert rep["verdict"]["reason_code"] == "outside-pq"


def test_image_ideal_table(capsys):
    code, rep = run_json(capsys, "image-ideal", "--spec", NTR, "--n", "4")
    assert code == 0
    assert [row["oracle"] for row in rep["rows"]] == [0, 4, 5, 9, 9]
    assert all(row["formula"] == row["oracle"] for row in rep["rows"])
    code, out, _ = run(capsys, "image-ideal", "--spec", NTR, "--n", "2")
    assert "formula" in out.splitlines()[1] and len(out.splitlines()) == 5


def test_check_subcommand(capsys):
    code, rep = run_json(capsys, "check", "--spec", TRF)
    assert code == 0 and rep["nilpotency"] == "yes" and rep["irreducible"] and rep["homogeneous_degree"] == 0
    code, rep = run_json(capsys, "check", "--spec", '{"images": {"Y": "Y"}}', "--cap", "10")
    assert code == 1 and rep["nilpotency"] == "cap-exceeded"


def test_normal_form_subcommand(capsys):
    code, rep = run_json(capsys, "normal-form", "--spec", '{"kernel_pair": {"x": "X", "p": "Z^2+X*Y"}}')
    assert code == 0 and rep["sb"]["p"] == "Y^2 + X*Z"


def test_newton_subcommand(capsys):
    code, rep = run_json(capsys, "newton", "--poly", "Y^4 + 2*X*Y^2*Z + X^2*Z^2 + X^3*Y")
    assert code == 0 and rep["hull"] == [[0, 0], [4, 0], [0, 2]]
    code, rep = run_json(capsys, "newton", "--spec", NTR)
    assert code == 0 and rep["triangle"]["passed"]
    code, rep = run_json(capsys, "newton", "--poly", "Y^2 + Z^3")
    assert code == 1


def test_verify_on_input(capsys):
    code, rep = run_json(capsys, "verify", "--spec", NTR, "--n", "6", "--trunc", "5")
    assert code == 0 and all(c["passed"] for c in rep["checks"])


def test_verify_random_is_reproducible(capsys):
    args = ("verify", "--seed", "4", "--count", "1", "--n", "4", "--trunc", "4")
    code, first = run_json(capsys, *args)
    _, second = run_json(capsys, *args)
    assert code == 0
    assert [c["detail"] for c in first["checks"]] == [c["detail"] for c in second["checks"]]


def test_input_errors_exit_2(capsys, tmp_path):
    assert run(capsys, "check", "--spec", '{"images": {"Y": "Y^"}}')[0] == 2
    assert run(capsys, "check")[0] == 2
    assert run(capsys, "check", "--input", str(tmp_path / "missing.json"))[0] == 2
    path = tmp_path / "d.json"
    path.write_text(TRF)
    assert run(capsys, "check", "--input", str(path), "--spec", TRF)[0] == 2
    code, out, err = run(capsys, "check", "--input", str(path))
    assert code == 0


def test_analysis_failure_exit_1(capsys):
    code, rep = run_json(capsys, "triangularizable", "--spec",
                         '{"kernel_pair": {"x": "X", "p": "Y^3+X^2*Z+X*Z^2"}}')
    assert code == 1 and rep["error"] == "newton-gate-fail"


def test_argparse_rejects_bad_ranges(capsys):
    with pytest.raises(SystemExit):
        main(["image-ideal", "--spec", NTR, "--n", "-1"])
    with pytest.raises(SystemExit):
        main(["check", "--spec", TRF, "--cap", "0"])
