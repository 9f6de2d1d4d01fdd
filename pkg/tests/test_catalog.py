import json

import pytest

from painleve6.catalog import CatalogError, load_catalog, parse_catalog, parse_theta


def test_size_and_kinds(catalog):
    assert len(catalog) == 48
    kinds = {}
    for e in catalog:
        kinds[e.kind] = kinds.get(e.kind, 0) + 1
    assert kinds == {"family": 3, "unfolded": 30, "folded": 15}


def test_genus_tally(catalog):
    assert catalog.genus_tally() == {0: 23, 1: 19, "H2": 2, "H3": 1, "N3": 2, "N7": 1}


def test_families_have_parameters(catalog):
    assert [e.id for e in catalog if e.family_params] == ["II", "III", "IV"]


def test_round_trip(catalog):
    again = parse_catalog(json.loads(catalog.dumps()))
    assert again.ids() == catalog.ids()
    for a, b in zip(catalog, again):
        assert a.x == b.x and a.u == b.u and a.homographies == b.homographies
        assert a.theta("text") == b.theta("text")


def test_empty_file(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    with pytest.raises(CatalogError, match="empty"):
        load_catalog(p)


def test_bad_json(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{")
    with pytest.raises(CatalogError):
        load_catalog(p)


def test_bad_homography_index(catalog):
    data = catalog.to_dict()
    data["entries"][0]["homographies"] = [25]
    with pytest.raises(CatalogError, match="2..24"):
        parse_catalog(data)


def test_duplicate_ids(catalog):
    data = catalog.to_dict()
    data["entries"][1]["id"] = data["entries"][0]["id"]
    with pytest.raises(CatalogError, match="duplicate"):
        parse_catalog(data, validate=False)


def test_env_override(tmp_path, monkeypatch, catalog):
    data = catalog.to_dict()
    data["entries"] = [e for e in data["entries"] if e["id"] in ("I21", "K")]
    p = tmp_path / "small.json"
    p.write_text(json.dumps(data))
    monkeypatch.setenv("PVI_CATALOG", str(p))
    assert load_catalog().ids() == ["I21", "K"]


def test_parse_theta_forms():
    assert parse_theta("(0,0,1,2)/5") == parse_theta("0,0,1/5,2/5")
    th = parse_theta("(a,2*a,a,1/3)", {"a": 1})
    assert [str(v) for v in th] == ["1", "2", "1", "1/3"]


def test_sibling_links(catalog):
    for e in catalog:
        for s in e.siblings:
            assert e.id in catalog[s].siblings
