import os
from pathlib import Path

import pytest

import osgame

FIXTURES = Path(os.environ.get("OSGAME_FIXTURES_DIR", Path(__file__).resolve().parents[2] / "fixtures"))


def corpus(name):
    return (FIXTURES / "corpus" / f"{name}.slang").read_text()


def test_match_totals():
    rec = osgame.play_match(corpus("tft"), corpus("all_d"))
    assert rec["kind"] == "match"
    assert rec["totals"] == {"a": 9, "b": 14}
    assert [r["action_a"] for r in rec["rounds"]][:2] == ["C", "D"]


def test_match_is_deterministic():
    a = osgame.play_match(corpus("random"), corpus("tft"), rounds=20, seed=5)
    b = osgame.play_match(corpus("random"), corpus("tft"), rounds=20, seed=5)
    assert a == b


def test_coin_match_has_initial_state():
    src = (FIXTURES / "coin" / "greedy.slang").read_text()
    rec = osgame.play_match(src, src, game="coin", rounds=20, seed=1)
    assert "initial_state" in rec
    assert len(rec["rounds"]) == 20


def test_invalid_program_raises():
    with pytest.raises(ValueError, match="expected"):
        osgame.check_program("fn strategy( {")


def test_meta_game_switch():
    rec = osgame.meta_game([corpus("all_c"), corpus("all_d")], [corpus("tft")], meta_rounds=3)
    totals = [(r["match"]["totals"]["a"], r["match"]["totals"]["b"]) for r in rec["rounds"]]
    assert totals == [(30, 30), (14, 9), (14, 9)]


def test_metrics_and_label():
    m = osgame.metrics(corpus("all_c"))
    assert m["cyclomatic"] == 1
    assert m["halstead_effort"] == pytest.approx(8.0)
    assert osgame.metrics(corpus("similarity_comparator"))["osas"] == pytest.approx(2 / 3)
    assert osgame.label(corpus("tft"))["cooperative"] is True
    assert osgame.label(corpus("suspicious_tft"))["cooperative"] is False


def test_transforms():
    text, renames = osgame.transform("mask", corpus("majority"))
    assert dict(renames) == {"tally": "fn_1"}
    assert "fn_1" in text
    text, renames = osgame.transform("obfuscate", corpus("majority"), seed=3)
    assert all(set(new) <= {"I", "l"} for _, new in renames)
    assert osgame.label(text)["trace"] == osgame.label(corpus("majority"))["trace"]


def test_tournament_matrix():
    table = osgame.tournament({"AllC": corpus("all_c"), "AllD": corpus("all_d"), "TFT": corpus("tft")})
    assert table["mean"] == [[30, 0, 30], [50, 10, 14], [30, 9, 30]]


def test_replicator():
    a = [[30, 0, 30], [50, 10, 14], [30, 9, 30]]
    states = osgame.integrate(a, [1 / 3, 1 / 3, 1 / 3], dt=0.01, steps=100)
    assert len(states) == 101
    assert all(abs(sum(s) - 1) < 1e-9 for s in states)
    fp = osgame.fixed_points(a)
    assert any(p["x"] == pytest.approx([0, 16 / 17, 1 / 17], abs=1e-9) for p in fp["points"])
    assert len(osgame.flow_field(a)["samples"]) == 66
    with pytest.raises(ValueError):
        osgame.integrate(a, [0.5, 0.6, 0.0])


def test_run_cli_in_process(tmp_path):
    code, out, _ = osgame.run_cli(["match", str(FIXTURES / "corpus" / "tft.slang"),
                                   str(FIXTURES / "corpus" / "all_d.slang"), "--out", str(tmp_path)])
    assert code == 0
    assert "totals 9 14" in out
    assert (tmp_path / "record.json").exists()
    code, _, err = osgame.run_cli(["match", "nope.slang", "x.slang"])
    assert code == 2
