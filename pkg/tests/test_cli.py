import json

import pytest

import sccc.cli as cli

M_RAW_INTS = [
    [[2, 1], [1], [4], [4]],
    [[], [1], [3], []],
    [[0, 4], [0, 2], [1, 1], [1]],
    [[], [], [], []],
]
M_BAR_INTS = [
    [[2], [1], [], []],
    [[], [1], [3], []],
    [[0, 4], [], [1], [1]],
    [[], [], [], []],
]
G_RAW_INTS = [[2, 1, 1, 0], [0, 1, 3, 1], [4, 0, 4, 0], [0, 2, 0, 4], [1, 0, 1, 0]]


def _run(capsys, argv):
    rc = cli.run(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_construct(capsys):
    rc, out, err = _run(
        capsys, ["construct", "--q", "5", "--n", "4", "--indices", "4,3,3"]
    )
    assert rc == 0 and err == ""
    payload = json.loads(out)
    assert payload["forney"] == [3, 3, 4]
    assert payload["q"] == 5 and payload["n"] == 4 and payload["k"] == 3


def test_rook_single(capsys):
    rc, out, err = _run(capsys, ["rook", "--n", "4", "--values", "3,3,0"])
    assert rc == 0
    pairs = {tuple(p) for p in json.loads(out)["pairs"]}
    assert pairs == {(1, 4), (2, 1), (3, 3)}


def test_rook_verify_all(capsys):
    rc, out, err = _run(capsys, ["rook", "--n", "6", "--verify-all"])
    assert rc == 0
    assert out == "all instances solvable\n"


def test_rook_flag_validation(capsys):
    rc, out, err = _run(capsys, ["rook", "--n", "4"])
    assert rc == 2
    assert json.loads(err)["error"] == "InvalidParameters"
    rc, out, err = _run(
        capsys, ["rook", "--n", "4", "--values", "0", "--verify-all"]
    )
    assert rc == 2


def test_xi_round_trip(capsys, tmp_path):
    fwd_in = tmp_path / "g.json"
    fwd_in.write_text(json.dumps(G_RAW_INTS))
    rc, out, err = _run(
        capsys, ["xi", "--dir", "fwd", "--q", "5", "--n", "4", "--in", str(fwd_in)]
    )
    assert rc == 0
    assert json.loads(out) == M_RAW_INTS

    inv_in = tmp_path / "m.json"
    inv_in.write_text(out)
    rc, out2, err = _run(
        capsys, ["xi", "--dir", "inv", "--q", "5", "--n", "4", "--in", str(inv_in)]
    )
    assert rc == 0
    assert json.loads(out2) == G_RAW_INTS


def test_reduce_regression(capsys, tmp_path):
    path = tmp_path / "m.json"
    path.write_text(json.dumps(M_RAW_INTS))
    rc, out, err = _run(
        capsys, ["reduce", "--q", "5", "--n", "4", "--matrix", str(path)]
    )
    assert rc == 0
    payload = json.loads(out)
    assert payload["reduced"] == M_BAR_INTS
    assert payload["factors"] == [["lower", 3, 2, 1, 3], ["upper", 1, 3, 0, 1]]


def test_distance(capsys, tmp_path):
    path = tmp_path / "g.json"
    from sccc.codes import encoder_from_generator
    from sccc.field import FieldSpec
    from sccc.skew import RingContext, SkewPoly

    ctx = RingContext(FieldSpec.get(5), 4)
    code = encoder_from_generator(
        SkewPoly.from_ints(ctx, [[2, 1, 1, 0], [0, 1, 3, 1], [4, 0, 0, 0]])
    )
    path.write_text(json.dumps(code.to_dict()))
    rc, out, err = _run(capsys, ["distance", "--code", str(path)])
    assert rc == 0
    assert out == "6\n"


def test_infeasible_exit_code(capsys):
    rc, out, err = _run(capsys, ["construct", "--q", "5", "--n", "3", "--indices", "1"])
    assert rc == 1 and out == ""
    assert json.loads(err)["error"] == "NoRootOfUnity"


def test_malformed_exit_codes(capsys, tmp_path):
    # missing required flag -> argparse error
    rc, out, err = _run(capsys, ["construct", "--q", "5", "--n", "4"])
    assert rc == 2
    # unreadable input file
    rc, out, err = _run(
        capsys,
        ["reduce", "--q", "5", "--n", "4", "--matrix", str(tmp_path / "absent.json")],
    )
    assert rc == 2
    assert json.loads(err)["error"] in ("FileNotFoundError", "OSError")
    # syntactically invalid JSON
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    rc, out, err = _run(capsys, ["reduce", "--q", "5", "--n", "4", "--matrix", str(bad)])
    assert rc == 2


def test_verify_paper_table(capsys, monkeypatch):
    monkeypatch.setattr(
        cli,
        "run_all",
        lambda seed: [(1, "alpha", True, "ok"), (2, "beta", True, "ok")],
    )
    rc, out, err = _run(capsys, ["verify-paper"])
    assert rc == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "all criteria passed"
    assert lines[0].split() == ["1", "alpha", "PASS", "ok"]

    monkeypatch.setattr(
        cli, "run_all", lambda seed: [(1, "alpha", False, "boom")]
    )
    rc, out, err = _run(capsys, ["verify-paper"])
    assert rc == 1
    assert out.strip().splitlines()[-1] == "criteria failed"
