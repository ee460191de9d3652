from __future__ import annotations

import io
import json

import pytest

from knot21.canonical import is_isomorphic
from knot21.catalog import get
from knot21.cli import run
from knot21.formats import from_graph6


def call(*argv, stdin=""):
    out = io.StringIO()
    code = run(list(argv), stdout=out, stdin=io.StringIO(stdin))
    return code, out.getvalue()


def test_catalog_show_round_trip():
    code, out = call("catalog", "show", "C14", "--format", "g6")
    assert code == 0 and len(out.splitlines()) == 1
    assert is_isomorphic(from_graph6(out), get("C14").graph)


def test_catalog_formats_and_list():
    assert call("catalog", "show", "K4", "--format", "dot")[1].startswith("graph K4 {")
    assert json.loads(call("catalog", "show", "K4", "--format", "json")[1])["m"] == 6
    code, out = call("catalog", "list")
    assert code == 0 and "F13 (C14)" in out and "N'12" in out


def test_apex_on_k7():
    k7 = call("catalog", "show", "K7")[1]
    assert call("apex", "--k", "2", stdin=k7) == (0, "not-2-apex\n")
    assert call("apex", "--k", "2", "--name", "K6") == (0, "2-apex 0 1\n")


def test_piped_subcommands():
    c14 = call("catalog", "show", "C14")[1]
    assert call("planar", stdin=c14)[1].startswith("non-planar")
    assert json.loads(call("classify", stdin=c14)[1])["name"] == "C14"
    stats = json.loads(call("stats", "--pair", "0", "1", stdin=c14)[1])
    assert stats["count_bound"] >= 0
    code, out = call("reduce", "--pair", "0", "1", "--format", "json", stdin=c14)
    assert code == 0 and json.loads(out)["edges"] == stats["count_bound"]
    code, out = call("moves", "closure", "--op", "dy", "--name", "K7")
    assert len(out.splitlines()) == 14


def test_enum_and_shards(tmp_path):
    code, out = call("enum", "--degrees", "3^10")
    assert code == 0 and len(out.splitlines()) == 6
    lines = []
    for i in range(3):
        path = tmp_path / f"s{i}.g6"
        assert call("enum", "--degrees", "3^10", "--shards", "3", "--shard", str(i), "--out", str(path))[0] == 0
        lines += path.read_text().split()
    assert len(lines) == 6


def test_verify_writes_report(tmp_path, monkeypatch):
    monkeypatch.setenv("KNOT21_CACHE", str(tmp_path / "cache"))
    report = tmp_path / "r.json"
    assert call("verify", "--case", "4-9-2", "--report", str(report))[0] == 0
    data = json.loads(report.read_text())
    assert data["ok"] and data["survivors"] == []
    assert list((tmp_path / "cache").glob("*.g6"))
    # second run reads the cache and matches byte-for-byte outside timing
    assert call("verify", "--case", "4-9-2", "--diff", str(report))[0] == 0


def test_verify_mismatch_exit_code(tmp_path, monkeypatch):
    monkeypatch.setenv("KNOT21_CACHE", str(tmp_path))
    report = tmp_path / "r.json"
    call("verify", "--case", "4-9-2", "--report", str(report))
    data = json.loads(report.read_text())
    data["total"] += 1
    report.write_text(json.dumps(data))
    assert call("verify", "--case", "4-9-2", "--diff", str(report))[0] == 1


@pytest.mark.parametrize("argv, stdin", [
    (("catalog", "show", "K99"), ""),
    (("planar",), "C~~\n"),
    (("enum", "--degrees", "3^5"), ""),
    (("enum", "--degrees", "3^6", "--shards", "2", "--shard", "2"), ""),
    (("bogus",), ""),
    (("verify", "--case", "cubic", "--sequence", "5 5 4^8"), ""),
    (("reduce", "--pair", "0", "99", "--name", "K4"), ""),
])
def test_usage_errors(argv, stdin, capsys):
    assert call(*argv, stdin=stdin)[0] == 2
    assert "knot21" in capsys.readouterr().err


def test_config_file(tmp_path):
    cfg = tmp_path / "k.conf"
    cfg.write_text("# defaults\njobs = 2\n")
    assert call("--config", str(cfg), "catalog", "show", "K3")[0] == 0
    cfg.write_text("colour = red\n")
    assert call("--config", str(cfg), "catalog", "show", "K3")[0] == 2


def test_seed_corpus(tmp_path):
    code, out = call("seed-corpus", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "C14.g6").exists() and (tmp_path / "Np12.g6").exists()
