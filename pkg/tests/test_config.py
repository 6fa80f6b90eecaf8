import json

import pytest

from nonsolvable.config import DEFAULT, Config


def test_round_trip(tmp_path):
    cfg = DEFAULT.with_(seed=9, mode="mc")
    f = tmp_path / "cfg.json"
    f.write_text(cfg.to_json())
    assert Config.load(f) == cfg


def test_with_ignores_none():
    assert DEFAULT.with_(seed=None, mode=None) == DEFAULT


@pytest.mark.parametrize("bad", [{"exact_cap": 0}, {"mode": "fast"}, {"colour": 1}])
def test_rejects_bad_values(bad):
    with pytest.raises(ValueError):
        Config.from_dict(bad)


def test_cli_reads_config(tmp_path, capsys):
    from nonsolvable.cli import EXIT_INPUT, main
    f = tmp_path / "cfg.json"
    f.write_text(json.dumps({"mode": "bogus"}))
    assert main(["--config", str(f), "class-l", "60"]) == EXIT_INPUT
