import json

import pytest

from reconlab import report as rpt
from reconlab.claims import aggregate_over_matchings, verify_claims, verify_single_graph_claims
from reconlab.cli import main
from reconlab.graph6 import emit_graph6

from helpers import K2_K1, K3, P3, P4, all_labeled

P4_G6 = emit_graph6(P4)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_search_small(capsys):
    code, out, _ = run(capsys, "search", "--n", "2")
    assert code == 0
    assert "pairs=1" in out
    assert out.splitlines()[1].split() == ["A?", "A_"]
    code, out, _ = run(capsys, "search", "--n", "6")
    assert "classes=156" in out and "pairs=0" in out


def test_search_external_input(tmp_path, capsys):
    src = tmp_path / "n4.g6"
    src.write_text(">>graph6<<\n" + "\n".join(emit_graph6(G) for G in all_labeled(4)) + "\n")
    code, out, _ = run(capsys, "search", "--n", "4", "--input", str(src))
    assert code == 0 and "classes=11" in out and "pairs=0" in out


def test_search_respects_thread_env(monkeypatch, capsys):
    monkeypatch.setenv("RECON_LAB_THREADS", "2")
    code, out, _ = run(capsys, "search", "--n", "6")
    assert code == 0 and "pairs=0" in out


def test_deck(capsys):
    code, out, _ = run(capsys, "deck", "Bw")
    assert (code, out) == (0, "A_ x3\n")
    code, out, _ = run(capsys, "deck", emit_graph6(P3))
    assert out.splitlines() == ["A? x1", "A_ x2"]


def test_iso_and_hypo_exit_codes(capsys):
    assert run(capsys, "iso", "Bw", "Bw")[0] == 0
    assert run(capsys, "iso", "Bw", emit_graph6(P3))[0] == 3
    assert run(capsys, "hypo", "A_", "A?")[0] == 0
    assert run(capsys, "hypo", "Bw", emit_graph6(P3))[0] == 3
    code, out, _ = run(capsys, "hypo", P4_G6, P4_G6, "--matchings")
    assert out.splitlines()[1:] == ["0,1,2,3", "0,2,1,3", "3,1,2,0", "3,2,1,0"]


def test_paths(capsys):
    code, out, _ = run(capsys, "paths", "Bw", "--vertex", "0", "--length", "2", "--oracle")
    assert code == 0 and out.splitlines() == ["3", "oracle 3 agrees"]
    code, out, _ = run(capsys, "paths", P4_G6, "--vertex", "0", "--pair", "1", "--length", "2")
    assert out.strip() == "1"
    code, _, err = run(capsys, "paths", "Bw", "--vertex", "0", "--length", "3")
    assert code == 1 and "outside" in err


def test_verify_all_matchings_report(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", P4_G6, P4_G6, "--all-matchings", "--json", str(target))
    assert code == 0
    doc = json.loads(target.read_text())
    assert doc["version"] == 1 and doc["inputs"] == {"G": P4_G6, "H": P4_G6}
    claims = {c["claim"]: c for c in doc["quantified"]["claims"]}
    for cid in ("C9", "C10"):
        assert claims[cid]["holds_for_some"] and not claims[cid]["holds_for_all"]
    assert all(claims[c]["holds_for_all"] for c in ("C1", "C2", "C3", "C4", "C6", "C7", "C8"))
    assert "C9   [default] all=False some=True (2/4)" in out


def test_verify_single_matching_and_strict(capsys):
    code, out, _ = run(capsys, "verify", P4_G6, P4_G6, "--matching", "3,1,2,0")
    assert code == 0
    doc = json.loads(out)
    reps = {r["claim"]: r for r in doc["pair_claims"][0]["reports"]}
    assert reps["C9"]["verdict"] == "fail"
    assert reps["C9"]["witness"]["vertices"] == [0, 1]
    assert (reps["C9"]["witness"]["left"], reps["C9"]["witness"]["right"]) == (1, 0)
    assert run(capsys, "verify", P4_G6, P4_G6, "--matching", "3,1,2,0", "--strict")[0] == 2
    assert run(capsys, "verify", P4_G6, P4_G6, "--strict")[0] == 0


def test_verify_errors(capsys, tmp_path):
    assert run(capsys, "verify", P4_G6, P4_G6, "--matching", "1,0,2,3")[0] == 1
    assert run(capsys, "verify", P4_G6, P4_G6, "--matching", "0,0,1,2")[0] == 1
    assert run(capsys, "verify", "Bw", emit_graph6(P3))[0] == 1
    assert run(capsys, "verify", "B~", "Bw")[0] == 1
    assert run(capsys, "verify", "Bw", "Bw", "--bogus")[0] == 1
    assert run(capsys, "deck", str(tmp_path / "missing.g6"))[0] == 1
    assert run(capsys)[0] == 1


def test_deterministic_reports_are_byte_identical(tmp_path, capsys):
    outs = []
    for k in range(2):
        target = tmp_path / f"r{k}.json"
        run(capsys, "verify", P4_G6, P4_G6, "--all-matchings", "--deterministic", "--json", str(target))
        outs.append(target.read_bytes())
    assert outs[0] == outs[1]


def test_identity_command(capsys, tmp_path):
    g6 = emit_graph6(K2_K1)
    code, out, _ = run(capsys, "identity", g6)
    assert code == 0
    assert "C7b  [all-graphs] fail component_formula at [2]: 1 != 2" in out
    assert run(capsys, "identity", g6, "--strict")[0] == 2
    assert run(capsys, "identity", "Bw", "--strict")[0] == 0


def test_edge_list_file_input(tmp_path, capsys):
    src = tmp_path / "k3.txt"
    src.write_text("0 1\n1 2\n2 0\n")
    assert run(capsys, "iso", str(src), "Bw")[0] == 0


def test_report_schema_roundtrip():
    q = aggregate_over_matchings(P4, P4)
    pair = [verify_claims(P4, P4, (3, 1, 2, 0), extended=True)]
    single = {"G": verify_single_graph_claims(K2_K1)}
    doc = rpt.build_document({"G": P4_G6, "H": P4_G6}, pair, q, single)
    doc["future_field"] = {"ignored": True}
    parsed = rpt.parse_document(rpt.dumps(doc))
    assert parsed["pair_claims"] == pair
    assert parsed["single_graph"] == single
    assert parsed["quantified"] == json.loads(rpt.dumps(doc))["quantified"]


def test_report_rejects_foreign_documents():
    with pytest.raises(ValueError):
        rpt.parse_document(json.dumps({"schema": "other", "version": 1}))
