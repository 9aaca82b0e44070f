import json

import pytest

from cosetlattice.config import Limits, limits, load_config, set_limits


def test_defaults_and_override():
    assert limits() == Limits()
    set_limits(max_faces=10, max_group_order=None)
    assert limits().max_faces == 10
    assert limits().max_group_order == Limits().max_group_order


def test_load_config(tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"max_group_order": 123}))
    assert load_config(p).max_group_order == 123
    p.write_text(json.dumps({"max_order": 1}))
    with pytest.raises(ValueError):
        load_config(p)
