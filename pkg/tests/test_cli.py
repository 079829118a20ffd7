"""Command line behaviour: emitted documents, determinism, exit codes."""

from __future__ import annotations

import json
import re

import pytest

from clustertilt.cli import main


def _run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_hom_rank_one_shift_is_zero(capsys):
    rc, out, err = _run(capsys, "hom", "--quiver", "1", "--x", "0", "--y", "1")
    assert rc == 0
    assert out == '{"dims":{},"total":0}\n'
    assert err == ""


def test_hom_end_of_projective(capsys):
    rc, out, _ = _run(
        capsys, "hom", "--quiver", "1->2 2->3", "--x", "P1", "--y", "P1"
    )
    assert rc == 0
    assert json.loads(out) == {"dims": {"0": 1}, "total": 1}


def test_check_dynkin_d4(capsys):
    rc, out, _ = _run(capsys, "check-dynkin", "--quiver", "1->2 2->3 2->4")
    assert rc == 0
    doc = json.loads(out)
    assert doc["family"] == "D"
    assert doc["rank"] == 4
    assert doc["coxeterNumber"] == 6
    assert doc["vertices"] == [1, 2, 3, 4]


def test_verify_corollary_count_line(capsys):
    rc, out, _ = _run(capsys, "verify", "corollary-count", "--quiver", "1->2 2->3")
    assert rc == 0
    assert out == "14 tilting objects, all with 6 indecomposables; PASS\n"


def test_verify_theorem_a_line(capsys):
    rc, out, _ = _run(capsys, "verify", "theorem-a", "--quiver", "1->2")
    assert rc == 0
    assert out == "theorem-a: 5 tilting objects, each module category has 3 vertices; PASS\n"


def test_verify_theorem_b_sampled(capsys):
    rc, out, _ = _run(
        capsys,
        "verify",
        "theorem-b",
        "--quiver",
        "1->2 2->3",
        "--samples",
        "5",
    )
    assert rc == 0
    assert out == "theorem-b: 5 exchange pairs verified; PASS\n"


def test_verify_apr_line(capsys):
    rc, out, _ = _run(capsys, "verify", "apr", "--quiver", "1->2 2->3")
    assert rc == 0
    assert out == "apr: 1 sinks reversed hereditarily, 3 vertices mutated; PASS\n"


def test_endo_dot_is_a_three_cycle_with_relations(capsys):
    rc, out, _ = _run(
        capsys,
        "endo",
        "--quiver",
        "1->2 2->3",
        "--tilting",
        "S3,P1,S1",
        "--format",
        "dot",
    )
    assert rc == 0
    assert out.startswith("digraph endo {")
    arrow_lines = re.findall(r'"(\d)" -> "(\d)" \[label="a\d"\]', out)
    assert len(arrow_lines) == 3
    # the three solid arrows close into a single cycle on the three vertices
    nxt = {int(s): int(t) for s, t in arrow_lines}
    assert sorted(nxt) == [0, 1, 2]
    assert nxt[nxt[nxt[0]]] == 0 and nxt[0] != 0
    assert out.count("style=dashed") == 3
    assert out.count(" = 0") == 3


def test_tilting_enumeration_is_deterministic(capsys):
    rc1, out1, _ = _run(capsys, "tilting", "--quiver", "1->2")
    rc2, out2, _ = _run(capsys, "tilting", "--quiver", "1->2")
    assert rc1 == rc2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["count"] == 5
    assert len(doc["tilting"]) == 5
    assert all(len(t["summands"]) == 2 for t in doc["tilting"])


def test_ar_cluster_mode_counts(capsys):
    rc, out, _ = _run(capsys, "ar", "--quiver", "1->2 2->3")
    assert rc == 0
    doc = json.loads(out)
    assert doc["mode"] == "C"
    assert len(doc["vertices"]) == 9
    assert sum(1 for v in doc["vertices"] if v["shifted"]) == 3


def test_ar_gamma_mode_marks_deleted_vertices(capsys):
    rc, out, _ = _run(
        capsys,
        "ar",
        "--quiver",
        "1->2 2->3",
        "--mode",
        "gamma",
        "--tilting",
        "S3,P1,S1",
    )
    assert rc == 0
    doc = json.loads(out)
    assert len(doc["deleted"]) == 3
    assert len(doc["projectives"]) == 3
    assert len(doc["gammaDims"]) == 6


def test_ar_dot_output(capsys):
    rc, out, _ = _run(
        capsys, "ar", "--quiver", "1->2", "--mode", "H", "--format", "dot"
    )
    assert rc == 0
    assert out.startswith("digraph ar {")
    assert out.endswith("}\n")


def test_mutate_at_projective_reports_both_completions(capsys):
    rc, out, _ = _run(
        capsys,
        "mutate",
        "--quiver",
        "1->2 2->3",
        "--tilting",
        "P1,P2,P3",
        "--at",
        "P2",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["previous"]["summands"] == [2, 1, 0]
    assert doc["tilting"]["summands"] == [2, 0, 5]
    assert doc["completions"] == [1, 5]
    assert doc["current"] == 5
    assert {doc["exchange"]["M"], doc["exchange"]["Mstar"]} == {1, 5}
    assert doc["presentation"]["hasCycles"] is True
    assert len(doc["presentation"]["relations"]) == 3
    assert doc["ar"]["mode"] == "gamma"


def test_mutate_is_an_involution(capsys):
    _, first, _ = _run(
        capsys,
        "mutate",
        "--quiver",
        "1->2 2->3",
        "--tilting",
        "P1,P2,P3",
        "--at",
        "P2",
    )
    incoming = json.loads(first)["current"]
    rc, out, _ = _run(
        capsys,
        "mutate",
        "--quiver",
        "1->2 2->3",
        "--tilting",
        "S3,P1,S1",
        "--at",
        str(incoming),
    )
    assert rc == 0
    assert json.loads(out)["tilting"]["summands"] == [2, 1, 0]


def test_mutate_rejects_non_summand(capsys):
    rc, out, err = _run(
        capsys,
        "mutate",
        "--quiver",
        "1->2 2->3",
        "--tilting",
        "S3,P1,S1",
        "--at",
        "P2",
    )
    assert rc == 1
    assert out == ""
    doc = json.loads(err)
    assert doc["error"] == "ValidationError"
    assert "not a summand" in doc["message"]


def test_unknown_object_is_a_domain_error(capsys):
    rc, _, err = _run(capsys, "hom", "--quiver", "1->2", "--x", "P9", "--y", "P1")
    assert rc == 1
    assert json.loads(err)["error"] == "UnknownObject"


def test_not_dynkin_is_a_domain_error(capsys):
    rc, _, err = _run(capsys, "check-dynkin", "--quiver", "1->2 2->3 1->3")
    assert rc == 1
    assert json.loads(err)["error"] == "NotDynkin"


def test_usage_error_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["hom", "--quiver", "1->2", "--x", "P1"])
    assert exc.value.code == 2


def test_quiver_file_argument(tmp_path, capsys):
    path = tmp_path / "q.txt"
    path.write_text("1->2\n", encoding="utf-8")
    rc, out, _ = _run(capsys, "check-dynkin", "--quiver-file", str(path))
    assert rc == 0
    assert json.loads(out)["family"] == "A"
