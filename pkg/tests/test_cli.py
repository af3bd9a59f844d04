"""
命令行工具测试
"""

import json

import pytest

from src.cli.chain_cli import main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestUsage:

    def test_no_command_prints_help(self, capsys):
        code, out, err = _run(capsys)
        assert code == 2
        assert "usage: chaindim" in err

    def test_argparse_errors_exit_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["tables", "3"])
        assert exc.value.code == 2

    @pytest.mark.parametrize("argv", [
        ["build", "even:8,9"],
        ["build", "triangle"],
        ["partition", "cycle:6"],
        ["invariants", "cycle:6"],
        ["invariants", "even:8,10,8", "--pd-method", "exact", "--max-vertices", "10"],
    ])
    def test_errors_exit_2(self, capsys, argv):
        code, out, err = _run(capsys, *argv)
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")


class TestBuild:

    def test_edge_list(self, capsys):
        code, out, _ = _run(capsys, "build", "even:8,10,8")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "24 26"
        assert len(lines) == 27

    def test_dot(self, capsys):
        code, out, _ = _run(capsys, "build", "odd:5,5", "--format", "dot")
        assert code == 0
        assert out.startswith("graph")
        assert '"v1_5=v2_1"' in out

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "c6.txt"
        code, out, _ = _run(capsys, "build", "cycle:6", "--out", str(target))
        assert code == 0
        assert out == ""
        assert target.read_text(encoding="utf-8").splitlines()[0] == "6 6"


class TestTables:

    def test_table_1_tsv(self, capsys):
        code, out, _ = _run(capsys, "tables", "1")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "label\tQ1\tQ2\tQ3"
        assert lines[1] == "v1_1\t0\t5\t3"
        assert len(lines) == 25

    def test_table_2_json(self, capsys):
        code, out, _ = _run(capsys, "tables", "2", "--format", "json")
        rows = json.loads(out)
        assert code == 0
        assert len(rows) == 15
        assert rows[0] == {'label': 'v1_1', 'representation': [0, 3, 2]}


class TestInvariants:

    def test_chain_defaults(self, capsys):
        code, out, _ = _run(capsys, "invariants", "even:4,4")
        data = json.loads(out)
        assert code == 0
        assert data['values'] == {'pd': 3, 'sdim': 3}
        assert data['certificates']['sdim_route'] == "cover"

    def test_exact_methods_on_cycle(self, capsys):
        code, out, _ = _run(capsys, "invariants", "cycle:6", "--pd-method", "exact",
                            "--sdim-method", "brute", "--with-dim")
        assert code == 0
        assert json.loads(out)['values'] == {'pd': 3, 'dim': 2, 'sdim': 3}

    def test_edge_list_file(self, capsys, tmp_path):
        path = tmp_path / "p4.txt"
        path.write_text("4 3\n0 1\n1 2\n2 3\n", encoding="utf-8")
        code, out, _ = _run(capsys, "invariants", f"file:{path}", "--pd-method", "exact")
        data = json.loads(out)
        assert code == 0
        assert data['values']['pd'] == 2
        assert data['values']['sdim'] == 1

    def test_witness_failure_exit_1(self, capsys):
        code, out, err = _run(capsys, "invariants", "even:4,4,4")
        assert code == 1
        assert "v2_2" in err


class TestVerify:

    def test_passing_sweep(self, capsys):
        code, out, err = _run(capsys, "verify", "--family", "even", "--ns", "6", "--ms", "2", "--seed", "5")
        data = json.loads(out)
        assert code == 0
        assert data['seed'] == 5
        assert data['summary'] == {'total': 1, 'passed': 1, 'failed': 0}
        assert "even sweep: 1/1 instances passed" in err

    def test_failing_sweep(self, capsys):
        code, out, err = _run(capsys, "verify", "--family", "even", "--ns", "4", "--ms", "3")
        assert code == 1
        assert json.loads(out)['passed'] is False
        assert "FAIL even:4,4,4" in err

    @pytest.mark.parametrize("ns, ms", [("3", "2"), ("5", "1"), ("5,x", "2")])
    def test_bad_ranges(self, capsys, ns, ms):
        code, out, err = _run(capsys, "verify", "--family", "odd", "--ns", ns, "--ms", ms)
        assert code == 2
        assert out == ""
        assert err.startswith("error: ")


class TestReports:

    def test_random(self, capsys):
        code, out, err = _run(capsys, "random", "--count", "3", "--seed", "1")
        data = json.loads(out)
        assert code == 0
        assert data['size'] == 3
        assert data['seed'] == 1
        assert "random suite: 3/3 graphs passed" in err

    def test_srg(self, capsys):
        code, out, _ = _run(capsys, "srg", "odd:5,5")
        data = json.loads(out)
        assert code == 0
        assert len(data['computed_edges']) == 10
        assert data['diff'] == {'missing': [], 'extra': []}
        assert data['dropped_literal'] == [["v1_2", "v1_4"], ["v1_4", "v2_4"]]
        assert data['alpha'] == 5
        assert "v1_5" in data['isolated_vertices']

    def test_srg_general_graph(self, capsys):
        code, out, _ = _run(capsys, "srg", "cycle:6")
        data = json.loads(out)
        assert code == 0
        assert 'diff' not in data
        assert len(data['computed_edges']) == 3
        assert data['alpha'] == 3

    def test_partition(self, capsys):
        code, out, _ = _run(capsys, "partition", "odd:5,7,5")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 3
        assert lines[0].split(",") == ["v1_1", "v1_2", "v1_5=v2_1"]

    def test_ledger(self, capsys):
        code, out, _ = _run(capsys, "ledger", "even:8,10,8")
        data = json.loads(out)
        assert code == 0
        assert any(m['label'] == "v3_8" for m in data['mismatches'])
