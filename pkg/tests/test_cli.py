import json

import pytest

from chipfire.cli import ChipFire, CommandRequest, main

from .conftest import GSTAR_SPEC, SQUARE_SPEC, STAR_SPEC

STAR_UNWINNABLE = {"v1": 1, "v2": 0, "v3": 0, "v4": -1}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_winnable(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    divisor = write_json("d.json", STAR_UNWINNABLE)
    code, out, _ = run(capsys, "winnable", "--graph", graph, "--divisor", divisor)
    assert code == 0
    result = json.loads(out)
    assert result["winnable"] is False
    assert result["witness"] is None


def test_winnable_with_witness(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    divisor = write_json("d.json", {"v1": 1, "v2": 0, "v3": 2, "v4": -1})
    code, out, _ = run(capsys, "winnable", "--graph", graph, "--divisor", divisor)
    assert code == 0
    assert json.loads(out)["witness"] == {"v1": 1, "v2": 0, "v3": 1, "v4": 0}


def test_reduce_all(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    divisor = write_json("d.json", STAR_UNWINNABLE)
    code, out, _ = run(capsys, "reduce", "--graph", graph, "--divisor", divisor, "--q", "v4", "--all")
    assert code == 0
    result = json.loads(out)
    assert result["reduced"] == STAR_UNWINNABLE
    assert {json.dumps(r["divisor"], sort_keys=True) for r in result["representatives"]} == {
        json.dumps(STAR_UNWINNABLE, sort_keys=True),
        json.dumps({"v1": 0, "v2": 1, "v3": 0, "v4": -1}, sort_keys=True),
    }


def test_missing_q_is_input_error(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    divisor = write_json("d.json", STAR_UNWINNABLE)
    code, out, err = run(capsys, "reduce", "--graph", graph, "--divisor", divisor)
    assert code == 2
    assert out == ""
    assert "--q" in err


def test_unknown_vertex(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    divisor = write_json("d.json", {**STAR_UNWINNABLE, "v9": 1})
    code, _, err = run(capsys, "winnable", "--graph", graph, "--divisor", divisor)
    assert code == 2
    assert "v9" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "laplacian", "--graph", str(tmp_path / "absent.json"))
    assert code == 2


@pytest.mark.parametrize(
    "spec",
    [
        {"vertices": [1, 2]},
        {"vertices": 3},
        {"vertices": ["a", "b"], "edges": [7]},
        ["a", "b"],
    ],
)
def test_misshapen_graph_is_input_error(capsys, write_json, spec):
    code, out, err = run(capsys, "laplacian", "--graph", write_json("g.json", spec))
    assert code == 2
    assert out == ""
    assert err.count("\n") == 1


def test_burn_precondition(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    divisor = write_json("d.json", {"v1": -1, "v2": 0, "v3": 0, "v4": 5})
    code, _, _ = run(capsys, "burn", "--graph", graph, "--divisor", divisor, "--q", "v4")
    assert code == 4


def test_words_need_unit_charge(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    code, _, _ = run(capsys, "words", "--graph", graph, "--q", "v4")
    assert code == 4


def test_words(capsys, write_json):
    graph = write_json("gstar.json", GSTAR_SPEC)
    code, out, _ = run(capsys, "words", "--graph", graph, "--q", "v1")
    assert code == 0
    words = json.loads(out)["words"]
    assert len(words) == 12
    assert words[0]["word"] == ["v1", "v2", "v3", "v3", "v4"]


def test_maxunwin(capsys, write_json):
    graph = write_json("gstar.json", GSTAR_SPEC)
    code, out, _ = run(capsys, "maxunwin", "--graph", graph, "--q", "v1")
    assert code == 0
    result = json.loads(out)
    assert len(result["census"]["entries"]) == 5
    assert len(result["census"]["flagged"]) == 3
    assert result["census"]["unverified"] == []
    assert all(e["verified"] for e in result["census"]["entries"])
    assert result["pairing"]["canonical_matches"] == []


def test_equiv(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    d1 = write_json("d1.json", STAR_UNWINNABLE)
    d2 = write_json("d2.json", {"v1": 0, "v2": 1, "v3": 0, "v4": -1})
    zero = write_json("zero.json", {"v1": 0, "v2": 0, "v3": 0, "v4": 0})
    code, out, _ = run(capsys, "equiv", "--graph", graph, "--d1", d1, "--d2", d2)
    assert code == 0
    assert json.loads(out)["script"] == {"v1": 0, "v2": -1, "v3": -1, "v4": -1}
    code, out, _ = run(capsys, "equiv", "--graph", graph, "--d1", d1, "--d2", zero)
    assert code == 0
    assert json.loads(out) == {"equivalent": False, "script": "not-equivalent"}


def test_jacobian(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    code, out, _ = run(capsys, "jacobian", "--graph", graph)
    assert code == 0
    assert json.loads(out) == {"factors": [2], "order": 2, "group": "Z/2"}


class TestQuotient:
    @pytest.fixture
    def files(self, write_json):
        graph = write_json("square.json", SQUARE_SPEC)
        action = write_json("action.json", {"generators": [{"vertices": {"v1": "v4", "v4": "v1"}}]})
        return graph, action

    def test_output_is_a_graph_file(self, capsys, tmp_path, files):
        graph, action = files
        code, out, _ = run(capsys, "quotient", "--graph", graph, "--action", action)
        assert code == 0
        quotient = tmp_path / "quotient.json"
        quotient.write_text(out, encoding="utf-8")
        code, out, _ = run(capsys, "laplacian", "--graph", str(quotient))
        assert code == 0
        assert json.loads(out) == {
            "vertices": ["v1+v4", "v2", "v3"],
            "matrix": [[2, -2, -2], [-1, 3, -1], [-1, -1, 3]],
        }

    def test_pushforward(self, capsys, write_json, files):
        graph, action = files
        divisor = write_json("d.json", {"v1": 1, "v2": 1, "v3": -3, "v4": 1})
        code, out, _ = run(capsys, "quotient", "--graph", graph, "--action", action, "--divisor", divisor)
        assert code == 0
        assert json.loads(out)["pushforward"] == {"v1+v4": 2, "v2": 1, "v3": -3}

    def test_order_cap(self, capsys, files):
        graph, action = files
        code, _, _ = run(capsys, "quotient", "--graph", graph, "--action", action, "--order-cap", "1")
        assert code == 3

    def test_bad_action(self, capsys, write_json, files):
        graph, _ = files
        action = write_json("bad.json", {"generators": [{"vertices": {"v1": "v2", "v2": "v1"}}]})
        code, _, _ = run(capsys, "quotient", "--graph", graph, "--action", action)
        assert code == 2

    @pytest.mark.parametrize(
        "generator",
        [
            {"vertices": {"v1": "v4", "v4": "v1"}, "half_edges": ["e0a", "e2a"]},
            {"vertices": [["v1", "v4"]]},
            {"vertices": {"v1": ["v4"]}},
            "v1",
        ],
    )
    def test_misshapen_action(self, capsys, write_json, files, generator):
        graph, _ = files
        action = write_json("bad.json", {"generators": [generator]})
        code, out, _ = run(capsys, "quotient", "--graph", graph, "--action", action)
        assert code == 2
        assert out == ""

    def test_dot(self, capsys, files):
        graph, action = files
        code, out, _ = run(capsys, "quotient", "--graph", graph, "--action", action, "--format", "dot")
        assert code == 0
        assert out.startswith("graph G {")
        assert '"v2" [label="v2", weight=2, width=0.75, height=0.75];' in out


def test_reruns_are_byte_identical(capsys, write_json):
    graph = write_json("gstar.json", GSTAR_SPEC)
    _, first, _ = run(capsys, "maxunwin", "--graph", graph, "--q", "v1")
    _, second, _ = run(capsys, "maxunwin", "--graph", graph, "--q", "v1")
    assert first == second


def test_non_positive_cap(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    code, _, _ = run(capsys, "laplacian", "--graph", graph, "--round-cap", "0")
    assert code == 2


def test_argparse_errors_exit_with_input_code(capsys):
    with pytest.raises(SystemExit) as info:
        main(["reduce"])
    assert info.value.code == 2


def test_request_object(capsys, write_json):
    graph = write_json("star.json", STAR_SPEC)
    assert ChipFire().run(CommandRequest("laplacian", graph)) == 0
    assert json.loads(capsys.readouterr().out)["matrix"][3] == [0, 0, -1, 1]
