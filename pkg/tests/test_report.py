import pytest

from painleve6.report import COLUMNS, render_csv, render_markdown, table_row, verify_entry
from painleve6.reproduce import reproduce_row


def test_verify_entry_sources(catalog):
    r = verify_entry(catalog["K"])
    assert r.ok and r.verified_sources == ["table", "text"] and not r.flags


def test_verify_entry_text_only(catalog):
    r = verify_entry(catalog["I35"])
    assert r.verified_sources == ["text"]
    assert r.flags == ["table theta fails the residual"]


def test_klein_row(catalog):
    row = table_row(catalog["K"])
    assert row.ok and row.invariance_status == "PASS"
    d = row.as_dict()
    assert (d["b"], d["d_minus_b"], d["terms"]) == (7, 1, 12)
    assert d["homographies"] == "6,8,10,19,23"


def test_table_homography_row(catalog):
    row = table_row(catalog["I35"])
    assert row.stats.representative == "h2"
    assert row.stats.table == (12, 0, 25)
    assert "table theta holds for the h2 representative" in row.flags


def test_modular_row(catalog):
    r = reproduce_row(catalog["I52"])
    assert r.tier == "modular" and r.table == (72, 6, 975) and len(r.agreeing_primes) >= 3


def test_inconsistent_published_row_is_flagged(catalog):
    row = table_row(catalog["O12"])
    assert row.ok and row.invariance_status == "FLAG"
    assert any("internally inconsistent" in f for f in row.flags)
    assert "text states b=28, computed 12" in row.flags


def test_render(catalog):
    rows = [table_row(catalog[i]) for i in ("I21", "K")]
    csv_text = render_csv(rows)
    assert csv_text.splitlines()[0] == ",".join(COLUMNS)
    assert len(csv_text.splitlines()) == 3
    md = render_markdown(rows, compare=False)
    assert "expected" not in md.splitlines()[0] and md.count("\n") == 4


@pytest.mark.slow
def test_parallel_matches_serial(catalog):
    from painleve6.report import run_entries

    ids = ["I21", "K", "O08"]
    serial = [r.as_dict() for r in run_entries("verify", ids, None, 1)]
    par = [r.as_dict() for r in run_entries("verify", ids, None, 2)]
    for a, b in zip(serial, par):
        a.pop("seconds"), b.pop("seconds")
    assert serial == par
