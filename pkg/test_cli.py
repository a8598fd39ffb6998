import json

import pytest

from cli import EXIT_ERROR, EXIT_FAILED, EXIT_OK, main

WORKED_EXAMPLE = "x1 y2 x2 x3^-1 y5 y1^-2 x1 x2^-1 y4^3 x3^-1"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_gamma_worked_example(capsys):
    code, data = run_json(capsys, "gamma", "--g", "4", "--b", "6", WORKED_EXAMPLE)
    assert code == EXIT_OK
    assert data == {"member": True, "profile": {"O": [1, 1, 1, 0], "E": [1, 1, 1, 0]}, "p_length": 6}


def test_gamma_odd_length_has_no_profile(capsys):
    code, data = run_json(capsys, "gamma", "--g", "3", "x1")
    assert code == EXIT_OK
    assert data == {"member": False, "profile": None, "p_length": 1}


def test_nf(capsys):
    code, data = run_json(capsys, "nf", "--g", "3", "--b", "2", "x1 x2")
    assert code == EXIT_OK
    assert data == {"v": [1, -1], "parity": 0}


def test_act_identity(capsys):
    code, data = run_json(capsys, "act", "--g", "5", "--b", "2", "1")
    assert code == EXIT_OK
    assert data["identity"] is True
    assert data["basis"] == ["c1", "c2", "c3", "c4", "c5", "d1"]
    assert data["matrix"][0] == [1, 0, 0, 0, 0, 0]


def test_text_output(capsys):
    code, out = run(capsys, "gamma", "--g", "4", "--b", "6", "--output", "text", WORKED_EXAMPLE)
    assert code == EXIT_OK
    assert "member: True" in out


def test_certify_then_verify(capsys, tmp_path):
    code, data = run_json(capsys, "certify", "--g", "4", "--b", "6", WORKED_EXAMPLE)
    assert code == EXIT_OK
    assert isinstance(data, list)
    assert all(set(entry) == {"conj", "relator", "exp"} for entry in data)
    path = tmp_path / "certificate.json"
    path.write_text(json.dumps(data))

    code, result = run_json(capsys, "verify-cert", "--g", "4", "--b", "6", str(path), WORKED_EXAMPLE)
    assert code == EXIT_OK
    assert result == {"valid": True}

    code, result = run_json(capsys, "verify-cert", "--g", "4", "--b", "6", str(path), "x1 x1")
    assert code == EXIT_FAILED
    assert result == {"valid": False}


def test_certify_reference_trace(capsys):
    code, data = run_json(capsys, "certify", "--g", "3", "--b", "2", "x1 x2 x2 x1")
    assert code == EXIT_OK
    assert data == [
        {"conj": "1", "relator": {"family": "PairCommutator", "indices": [1, 2, 2, 1]}, "exp": 1},
        {"conj": "x2", "relator": {"family": "Square", "indices": [1]}, "exp": 1},
        {"conj": "1", "relator": {"family": "Square", "indices": [2]}, "exp": 1},
    ]


def test_verify_rejects_wrapped_certificate(capsys, tmp_path):
    path = tmp_path / "certificate.json"
    path.write_text(json.dumps({"entries": []}))
    code, _ = run(capsys, "verify-cert", "--g", "3", str(path), "1")
    assert code == EXIT_ERROR


def test_verify_missing_file(capsys, tmp_path):
    code, _ = run(capsys, "verify-cert", "--g", "3", str(tmp_path / "absent.json"), "1")
    assert code == EXIT_ERROR


def test_certify_non_member(capsys):
    code, _ = run(capsys, "certify", "--g", "3", "--b", "2", "x1 x2 x1 x2")
    assert code == EXIT_ERROR


@pytest.mark.parametrize("argv", [
    ("gamma", "x1"),
    ("gamma", "--g", "3", "x4"),
    ("gamma", "--g", "3", "x1 z2"),
    ("gamma", "--g", "0", "x1"),
    ("correct", "--g", "4", "1", "0", "0", "0"),
    ("catalog", "--g", "3"),
])
def test_bad_input_exits_with_two(capsys, argv):
    code, _ = run(capsys, *argv)
    assert code == EXIT_ERROR


def test_rs(capsys):
    code, data = run_json(capsys, "rs", "--g", "3", "--b", "2")
    assert code == EXIT_OK
    assert sorted(data["generators"]) == ["A1", "A2", "B1", "B2", "B3", "C1", "y1"]
    assert data["relators"] == []
    assert data["expansions"]["C1"] == "x3 y1 x3^-1"


def test_catalog(capsys):
    code, data = run_json(capsys, "catalog", "--g", "5", "--b", "0")
    assert code == EXIT_OK
    assert data["generators"] == ["t_alpha", "t_beta_betaprime"]


def test_convert(capsys):
    code, data = run_json(capsys, "convert", "TripleSquare", "1", "2", "3", "--target", "PairCommutator")
    assert code == EXIT_OK
    assert data["relator"] == "TripleSquare(1,2,3)"
    assert data["target"] == "PairCommutator"
    assert any(entry["relator"]["family"] == "PairCommutator" for entry in data["entries"])


def test_correct(capsys):
    code, data = run_json(capsys, "correct", "--g", "3", "--b", "1", "1", "-1", "0")
    assert code == EXIT_OK
    assert data["twists"] == [[2, -1], [1, 1]]
    assert data["verified"] is True


def test_identities(capsys):
    code, data = run_json(capsys, "identities", "--g", "4")
    assert code == EXIT_OK
    assert data["passed"] is True


def test_suite_subset(capsys):
    code, data = run_json(capsys, "suite", "--g", "4", "--b", "2", "--seed", "3",
                          "--check", "worked_example", "--check", "commuting_actions")
    assert code == EXIT_OK
    assert [check["name"] for check in data["checks"]] == ["worked_example", "commuting_actions"]
    assert data["seed"] == 3
