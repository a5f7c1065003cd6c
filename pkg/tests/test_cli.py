import io
import json
import os
import subprocess
import sys

import networkx as nx
import pytest

from implicitrep.cli import RunConfig, build_parser, main
from implicitrep.families import path, universal_chain
from implicitrep.io import write_graph


def run_cli(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture
def p7_file(tmp_path):
    f = tmp_path / "p7.g6"
    f.write_text(write_graph(path(7)) + "\n")
    return str(f)


class TestGen:
    def test_z5_golden(self, capsys, monkeypatch, golden_dir):
        code, out = run_cli(capsys, monkeypatch, ["gen", "--family", "zk", "--k", "5"])
        assert code == 0
        with open(os.path.join(golden_dir, "z5.g6")) as fh:
            assert out.strip() == fh.read().strip()
        h = nx.from_graph6_bytes(out.strip().encode())
        ref = nx.Graph()
        ref.add_nodes_from(range(10))
        ref.add_edges_from((i, 5 + j) for i in range(5) for j in range(5) if j >= i)
        assert nx.is_isomorphic(h, ref)

    def test_class_needs_seed(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["gen", "--class", "forest", "--n", "5"])
        assert code == 2 and json.loads(out)["error"] == "UsageError"

    def test_missing_family_param(self, capsys, monkeypatch):
        code, _ = run_cli(capsys, monkeypatch, ["gen", "--family", "path"])
        assert code == 2

    def test_seeded_sample_is_member(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["gen", "--class", "ftt", "--t", "2", "--n", "12", "--seed", "4"])
        assert code == 0
        code, res = run_cli(capsys, monkeypatch, ["member", "--class", "ftt", "--t", "2"], stdin=out)
        assert code == 0 and json.loads(res)["member"]

    def test_json_format_to_file(self, capsys, monkeypatch, tmp_path):
        target = tmp_path / "g.json"
        code, out = run_cli(capsys, monkeypatch, ["gen", "--family", "path", "--n", "3", "--format", "json",
                                                  "--out", str(target)])
        assert code == 0 and out == ""
        assert json.loads(target.read_text())["n"] == 3

    def test_unknown_family_is_usage_error(self, capsys, monkeypatch):
        assert run_cli(capsys, monkeypatch, ["gen", "--family", "nope"])[0] == 2


class TestMember:
    def test_y_not_y_free(self, capsys, monkeypatch):
        _, g6 = run_cli(capsys, monkeypatch, ["gen", "--family", "y"])
        code, out = run_cli(capsys, monkeypatch, ["member", "--class", "y-chordal"], stdin=g6)
        rep = json.loads(out)
        assert code == 1 and not rep["member"] and rep["witness"]

    def test_z5_is_chain(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["member", "--class", "chain"],
                            stdin=write_graph(universal_chain(5)))
        assert code == 0 and json.loads(out)["class"] == "chain"

    def test_malformed_graph6(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["member", "--class", "forest"], stdin="C~~~~\n")
        assert code == 2 and "error" in json.loads(out)

    def test_missing_file(self, capsys, monkeypatch, tmp_path):
        code, _ = run_cli(capsys, monkeypatch, ["member", "--class", "forest", "--in", str(tmp_path / "none")])
        assert code == 2


class TestLabelVerify:
    def test_ftt_p7_pipe(self, capsys, monkeypatch, p7_file):
        code, labels = run_cli(capsys, monkeypatch, ["label", "--scheme", "ftt", "--t", "2", "--in", p7_file])
        assert code == 0
        code, out = run_cli(capsys, monkeypatch, ["verify", "--in", p7_file], stdin=labels)
        rep = json.loads(out)
        assert code == 0 and rep["ok"] and rep["mismatches"] == [] and rep["pairs_checked"] == 21

    def test_subprocess_pipe(self, p7_file):
        cmd = [sys.executable, "-m", "implicitrep.cli"]
        lab = subprocess.run(cmd + ["label", "--scheme", "chain", "--in", p7_file], capture_output=True, text=True)
        # P7 contains 2K2
        assert lab.returncode == 1 and json.loads(lab.stdout)["error"] == "NotInClassError"
        lab = subprocess.run(cmd + ["label", "--scheme", "dk", "--k", "2", "--in", p7_file],
                             capture_output=True, text=True)
        assert lab.returncode == 0
        ver = subprocess.run(cmd + ["verify", "--in", p7_file], input=lab.stdout, capture_output=True, text=True)
        assert ver.returncode == 0 and json.loads(ver.stdout)["ok"]

    def test_tampered_labels_fail(self, capsys, monkeypatch, p7_file):
        _, labels = run_cli(capsys, monkeypatch, ["label", "--scheme", "ftt", "--t", "2", "--in", p7_file])
        doc = json.loads(labels)
        doc["labels"][0], doc["labels"][6] = doc["labels"][6], doc["labels"][0]
        doc["bits"][0], doc["bits"][6] = doc["bits"][6], doc["bits"][0]
        code, out = run_cli(capsys, monkeypatch, ["verify", "--in", p7_file], stdin=json.dumps(doc))
        assert code == 1 and json.loads(out)["mismatches"]

    def test_wrong_size(self, capsys, monkeypatch, p7_file, tmp_path):
        f = tmp_path / "p3.g6"
        f.write_text(write_graph(path(3)))
        _, labels = run_cli(capsys, monkeypatch, ["label", "--scheme", "ftt", "--t", "2", "--in", str(f)])
        code, _ = run_cli(capsys, monkeypatch, ["verify", "--in", p7_file], stdin=labels)
        assert code == 2

    def test_non_bipartite(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["label", "--scheme", "chain"], stdin="Bw\n")
        assert code == 2 and json.loads(out)["error"] == "NotBipartiteError"


class TestHypercube:
    def test_round_trip(self, capsys, monkeypatch):
        c4 = "Cr\n"
        code, csv = run_cli(capsys, monkeypatch, ["hypercube", "encode"], stdin=c4)
        entries = [int(x) for x in csv.strip().split(",")]
        assert code == 0 and len(entries) == 8 and all(1 <= x <= 4 for x in entries)
        code, g6 = run_cli(capsys, monkeypatch, ["hypercube", "decode", "--code", csv.strip()])
        assert code == 0
        assert nx.is_isomorphic(nx.from_graph6_bytes(g6.strip().encode()), nx.cycle_graph(4))

    def test_bad_code(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["hypercube", "decode", "--code", "1,1,3,1"])
        assert code == 2 and json.loads(out)["error"] == "CodeError"

    def test_not_embeddable(self, capsys, monkeypatch):
        code, _ = run_cli(capsys, monkeypatch, ["hypercube", "encode"], stdin="Bw\n")
        assert code == 1


class TestCountParamsSuite:
    def test_count_csv(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["count", "--class", "forest", "--n", "1", "2", "3", "4"])
        assert code == 0 and out == "n,count\n1,1\n2,2\n3,7\n4,38\n"

    def test_count_cap(self, capsys, monkeypatch):
        code, _ = run_cli(capsys, monkeypatch, ["count", "--class", "forest", "--n", "6", "--cap", "5"])
        assert code == 2

    def test_params(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["params", "--param", "h-index", "--param", "contiguity"],
                            stdin=write_graph(path(4)))
        rep = json.loads(out)
        assert code == 0 and rep["n"] == 4 and rep["edges"] == 3
        assert [(p["parameter"], p["value"]) for p in rep["parameters"]] == [("h_index", 2), ("contiguity", 1)]

    def test_params_skip_capped(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["params", "--param", "sd"], stdin=write_graph(path(16)))
        assert code == 0 and json.loads(out)["parameters"][0]["skipped"]["error"] == "CapExceeded"

    def test_suite_lemma1(self, capsys, monkeypatch):
        code, out = run_cli(capsys, monkeypatch, ["suite", "lemma1", "--max", "8"])
        rep = json.loads(out)
        assert code == 0 and rep["ok"] and rep["failures"] == []

    def test_suite_rejects_foreign_option(self, capsys, monkeypatch):
        assert run_cli(capsys, monkeypatch, ["suite", "speed", "--samples", "3"])[0] == 2

    def test_suite_output_deterministic(self, capsys, monkeypatch):
        argv = ["suite", "schemes", "--samples", "3", "--max", "2", "--seed", "5"]
        first = run_cli(capsys, monkeypatch, argv)
        second = run_cli(capsys, monkeypatch, argv)
        assert first == second and first[0] == 0
        assert "seconds" not in first[1]


class TestConfig:
    @pytest.mark.parametrize("argv", [
        ["gen", "--family", "f", "--t", "2", "--p", "3", "--copies", "2"],
        ["gen", "--class", "dk-chordal", "--k", "2", "--n", "10", "--seed", "3", "--edge-prob", "0.3"],
        ["member", "--class", "ftt", "--t", "3", "--side-a", "0,1"],
        ["params", "--param", "sd", "--param", "h-index"],
        ["label", "--scheme", "one-sided-ft1", "--t", "2", "--heavy-side", "B", "--no-check", "--in", "g.g6"],
        ["verify", "--in", "g.g6", "--labels", "l.json"],
        ["hypercube", "decode", "--code", "1,1", "--format", "json"],
        ["count", "--class", "chain", "--n", "2", "3", "--workers", "2"],
        ["suite", "ftt-sd", "--samples", "4", "--seed", "1"],
    ])
    def test_round_trip(self, argv):
        parser = build_parser()
        cfg = RunConfig.from_namespace(parser.parse_args(argv))
        assert RunConfig.from_namespace(parser.parse_args(cfg.to_argv())) == cfg

    def test_version_and_help_exit_zero(self, capsys):
        assert main(["--version"]) == 0
        assert main(["gen", "--help"]) == 0
