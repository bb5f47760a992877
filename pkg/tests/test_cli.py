"""Exit codes, JSON output, and the pinned report shape."""

import json
from pathlib import Path

import pytest

from topcube import GroundSet, subbase_correspondence_check
from topcube.cli import main
from topcube.report import INCONCLUSIVE, Stopwatch

GOLDEN = Path(__file__).parent / "golden"


def test_passing_check_exits_zero(capsys):
    assert main(["verify", "atom-closure", "--quiet"]) == 0
    assert main(["count", "--n", "2"]) == 0
    out = capsys.readouterr().out
    assert "count" in out and "pass" in out


def test_every_check_runs_clean():
    for name in (
        "interval-identity",
        "chain-completion",
        "trace-reconstruction",
        "trace-bijection",
        "subbase-correspondence",
        "ultra-cover",
        "embedding",
    ):
        assert main(["verify", name, "--n", "3", "--quiet"]) == 0, name
    assert main(["verify", "disjoint-closure", "--n", "3", "--seed", "7", "--quiet"]) == 0
    assert main(["verify", "disjoint-closure", "--fixture", "disjoint-pair", "--quiet"]) == 0


def test_failing_demo_exits_one(tmp_path, capsys):
    fix = {
        "gens": [{"pre": "0", "period": "1"}],
        "candidate": {"pre": "0", "period": "1"},
        "sample_points": [1, 2],
    }
    path = tmp_path / "tampered.json"
    path.write_text(json.dumps(fix), encoding="utf-8")
    assert main(["demo", "join-gap", "--fixture", str(path)]) == 1
    assert "candidate_is_member" in capsys.readouterr().out


def test_domain_errors_exit_two(capsys):
    assert main(["verify", "ultra-cover", "--n", "1", "--quiet"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["demo", "join-gap", "--fixture", "no-such-fixture", "--quiet"]) == 2


def test_usage_errors_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-check"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_bad_coords_file_exits_two(tmp_path, capsys):
    path = tmp_path / "coords.json"
    path.write_text('{"pre": "", "period": "1"}', encoding="utf-8")
    code = main(["demo", "initials-chain", "--coords", str(path), "--quiet"])
    assert code == 2
    assert "JSON list" in capsys.readouterr().err


def test_inconclusive_exits_three(monkeypatch, capsys):
    import topcube.cli as cli

    def stub(fix):
        return Stopwatch().report(
            check="stub", params={}, verdict=INCONCLUSIVE, witness={"open": True}
        )

    monkeypatch.setitem(cli.DEMOS, "join-gap", ("join-gap", stub))
    assert main(["demo", "join-gap"]) == 3
    assert "inconclusive" in capsys.readouterr().out


def test_json_report_file(tmp_path):
    out = tmp_path / "report.json"
    assert main(["count", "--n", "3", "--quiet", "--json", str(out)]) == 0
    payload = json.loads(out.read_text(encoding="utf-8"))
    assert payload["schema_version"] == 1
    assert payload["check"] == "count"
    assert payload["verdict"] == "pass"
    assert payload["elapsed_ms"] >= 0


def test_correspondence_report_matches_golden():
    got = subbase_correspondence_check(GroundSet(3), x=0).to_json()
    got["elapsed_ms"] = 0
    want = json.loads((GOLDEN / "subbase_correspondence_n3.json").read_text())
    assert got == want
