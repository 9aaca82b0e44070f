import pytest

from cosetlattice import groups as gr
from cosetlattice.catalog import (
    HEADER,
    entry_from_group,
    find_entry,
    load_catalog,
    parse_catalog,
    safe_group,
    write_catalog,
)
from cosetlattice.errors import CatalogParseError, DuplicateIdError, IntransitiveError
from cosetlattice.perm import stabilizer


def test_fixture_entries(fixtures):
    e = find_entry(fixtures, 6, 1)
    assert e.group().order == 6
    for d, i, stab in ((21, 100, 8), (28, 100, 6)):
        G = find_entry(fixtures, d, i).group()
        assert G.order == 168
        assert stabilizer(G, 0).order == stab
    assert len({e.key for e in fixtures}) == len(fixtures)
    with pytest.raises(KeyError):
        find_entry(fixtures, 99, 99)


def test_round_trip(tmp_path):
    entries = [entry_from_group(gr.cyclic(6), 1, "C6"), entry_from_group(gr.symmetric(3), 2, "S3")]
    p = tmp_path / "a.cat"
    write_catalog(entries, p, comments=["test"])
    back = load_catalog(p)
    assert [(e.key, e.name, e.generators) for e in back] == [(e.key, e.name, e.generators) for e in entries]
    assert back[0].line == 3


def test_missing_header():
    with pytest.raises(CatalogParseError) as err:
        parse_catalog("2|1|S2|1,0\n")
    assert err.value.line == 1


@pytest.mark.parametrize(
    "line, fragment",
    [
        ("3|1|x|0,0,1", "bijection"),
        ("3|1|x|0,1", "images"),
        ("3|a|x|0,1,2", "integer"),
        ("3|1|x", "fields"),
        ("0|1|x|", "positive"),
    ],
)
def test_parse_errors(line, fragment):
    with pytest.raises(CatalogParseError) as err:
        parse_catalog(f"{HEADER}\n# c\n{line}\n")
    assert err.value.line == 3
    assert fragment in str(err.value)
    assert err.value.code == "PARSE_ERROR"


def test_intransitive():
    with pytest.raises(IntransitiveError) as err:
        parse_catalog(f"{HEADER}\n4|1|x|1,0,2,3;0,1,3,2\n")
    assert err.value.orbit == {0, 1}


def test_duplicate():
    with pytest.raises(DuplicateIdError):
        parse_catalog(f"{HEADER}\n2|1|a|1,0\n\n2|1|b|1,0\n")


def test_safe_group():
    e = entry_from_group(gr.symmetric(5), 5, "S5")
    assert safe_group(e, limit=10) is None
    assert safe_group(e).order == 120


def test_fixtures_reproducible(fixtures):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "scripts" / "make_fixtures.py"
    ls = importlib.util.spec_from_file_location("make_fixtures", path)
    mod = importlib.util.module_from_spec(ls)
    ls.loader.exec_module(mod)
    assert [e.to_line() for e in mod.build()] == [e.to_line() for e in fixtures]
