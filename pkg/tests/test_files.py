import json
from pathlib import Path

import pytest

from overrings import files
from overrings.errors import ConfigError

CONFIGS = Path(__file__).resolve().parents[1] / "configs"


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return p


def test_round_trip(tmp_path):
    cfg = files.load_config(CONFIGS / "exdedekind-B.cfg")
    p = write(tmp_path, "x.cfg", files.config_to_json(cfg))
    assert files.load_config(p) == cfg


def test_bad_json_location(tmp_path):
    p = write(tmp_path, "bad.cfg", '{"group": {"rank": 1,}\n}')
    with pytest.raises(ConfigError) as info:
        files.load_config(p)
    assert "bad.cfg:1:" in str(info.value)


@pytest.mark.parametrize(
    "data, where",
    [
        ({"group": {"rank": 1}, "kept_classes": [[1], [1, 2]]}, "kept_classes[1]"),
        ({"group": {"rank": 1}, "colour": 1}, "colour"),
        ({"kept_classes": []}, "group"),
        ({"group": {"rank": 0, "torsion": [1]}}, "group"),
        ({"group": {"rank": 1}, "finitely_generated": "yes"}, "finitely_generated"),
        ({"group": {"rank": "one"}}, "group.rank"),
    ],
)
def test_config_errors(data, where):
    with pytest.raises(ConfigError) as info:
        files.parse_config(data)
    assert info.value.location.startswith(where)


def test_system_parsing():
    sys = files.load_system(CONFIGS / "sum-equals-twice.sys")
    assert [list(r) for r in sys.coeffs] == [[1, 1, -2]]
    with pytest.raises(ConfigError, match="row_moduli"):
        files.parse_system({"coeffs": [[1, 2]], "row_moduli": [1]})
    with pytest.raises(ConfigError, match="var_domains"):
        files.parse_system({"coeffs": [[1, 2]], "var_domains": ["nonneg", "real"]})
    with pytest.raises(ConfigError, match="num_vars"):
        files.parse_system({"coeffs": []})


def test_report_with_marker(tmp_path):
    body = {"valid": True}
    p = write(tmp_path, "r.txt", "summary line\n" + files.REPORT_MARKER + "\n" + json.dumps(body))
    assert files.load_report(p) == body
    q = write(tmp_path, "r.json", json.dumps(body))
    assert files.load_report(q) == body
