import json
import os

import pytest

from klow import cache, cli, kone


def _drop_memo():
    # force the next run to consult the on-disk cache
    kone.k1_level.cache_clear()
    kone._elementary_normal_set.cache_clear()


@pytest.fixture(autouse=True)
def _no_cache(monkeypatch):
    monkeypatch.delenv("KLOW_CACHE", raising=False)
    cache.configure(None)
    yield
    cache.configure(None)


def _run(argv, capsys):
    code = cli.dispatch(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_ring_list(capsys):
    code, out, _ = _run(["ring", "list"], capsys)
    assert code == 0
    report = json.loads(out)
    assert "F4" in report["results"]["rings"]


def test_ring_show(capsys):
    code, out, _ = _run(["ring", "show", "Z4"], capsys)
    assert code == 0
    res = json.loads(out)["results"]
    assert res["order"] == 4 and res["unital"] and res["commutative"]


def test_k1_f4(capsys):
    code, out, _ = _run(["k1", "F4"], capsys)
    assert code == 0
    assert json.loads(out)["results"]["k1"] == {"free_rank": 0,
                                                "torsion": [3]}


def test_unknown_ring_is_bad_input(capsys):
    code, _, err = _run(["k1", "NOPE"], capsys)
    assert code == 4
    assert json.loads(err)["error"] == "BadInput"


def test_swan_f2_exit_4(capsys):
    code, _, err = _run(["swan", "--field", "F2"], capsys)
    assert code == 4
    msg = json.loads(err)
    assert msg["error"] == "FieldTooSmall"
    assert "at least 3" in msg["message"]


def test_budget_exceeded_exit_3(tmp_path, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"budgets": {"tensor_dim": 10}}))
    code, _, err = _run(["--config", str(conf), "hc", "M2Q"], capsys)
    assert code == 3
    assert json.loads(err)["error"] == "BudgetExceeded"


def test_verify_cone_small_window(capsys):
    code, out, _ = _run(["verify", "cone", "--ring", "F2", "--window", "16"],
                        capsys)
    assert code == 0
    res = json.loads(out)["results"]["cone"]["F2"]
    assert all(r["pass"] for r in res)


def test_excision_verdict_reroutes_unital(capsys):
    code, out, _ = _run(["excision-verdict", "Qeps"], capsys)
    assert code == 0
    res = json.loads(out)["results"]
    assert res["rerouted"] and res["vanishes"]


def test_boundary_bad_element(capsys):
    code, _, err = _run(["boundary", "--extension", "Z4_mod2",
                         "--element", "nope"], capsys)
    assert code == 4


def test_timing_flag_only_difference(capsys):
    code, out1, _ = _run(["hc", "Q"], capsys)
    _, out2, _ = _run(["--timing", "hc", "Q"], capsys)
    assert code == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    assert "timing_s" not in r1 and "timing_s" in r2
    r2.pop("timing_s")
    r2["command"] = r1["command"]
    assert r1 == r2


def test_cache_hit_is_bit_identical(tmp_path, capsys):
    cdir = str(tmp_path / "cache")
    args = ["--cache-dir", cdir, "k1", "F3"]
    _drop_memo()
    code, out1, _ = _run(args, capsys)
    assert code == 0
    assert os.listdir(cdir)
    _drop_memo()
    code, out2, _ = _run(args, capsys)
    assert out1 == out2


def test_corrupt_cache_entry_evicted(tmp_path, capsys):
    cdir = tmp_path / "cache"
    args = ["--cache-dir", str(cdir), "k1", "F3"]
    _drop_memo()
    _, out1, _ = _run(args, capsys)
    entries = list(cdir.iterdir())
    assert entries
    entries[0].write_text("{ not json")
    _drop_memo()
    code, out2, err = _run(args, capsys)
    assert code == 0
    assert out1 == out2
    assert "evicting corrupt cache entry" in err


def test_cache_clear(tmp_path, capsys):
    cdir = str(tmp_path / "cache")
    _drop_memo()
    _run(["--cache-dir", cdir, "k1", "F3"], capsys)
    code, out, _ = _run(["--cache-dir", cdir, "cache", "clear"], capsys)
    assert code == 0
    assert json.loads(out)["results"]["cleared"] >= 1
    assert not os.listdir(cdir)
