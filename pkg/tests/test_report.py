"""
WHY: To keep every rendered output byte-stable.
WHAT: Tests for the table, oracle and verification renderers in text, JSON and CSV.
HOW: Renders small known inputs and compares against exact strings or parsed structures.
"""

import csv
import io
import json

from ktile.ktile_identities import verify_grid
from ktile.ktile_report import (
    REPORT_COLUMNS,
    error_payload,
    render_oracle,
    render_report,
    render_table,
    table_text,
)
from ktile.ktile_seqcore import table_rows
from ktile.ktile_tilings import count_oracle


def test_table_text_golden():
    """Verify: Three-column text table, byte for byte."""
    assert table_text([0, 1, 2], table_rows(0, 2)) == (
        "n       0  1  2\n"
        "F_n     1  2  3\n"
        "F(3,n)  1  2  3\n"
        "F(4,n)  1  2  3\n"
        "L_n     2  1  3\n"
        "L(3,n)  1  2  3\n"
        "L(4,n)  1  2  3\n"
    )


def test_table_text_alignment(reference_table):
    """Verify: Full table lines share one width and parse back to the reference values."""
    lines = render_table("text", list(range(12)), table_rows(0, 11)).splitlines()
    assert len({len(line) for line in lines}) == 1
    assert [int(v) for v in lines[0].split()[1:]] == reference_table["n"]
    for line in lines[1:]:
        label, *values = line.split()
        assert [int(v) for v in values] == reference_table[label]


def test_table_json_and_csv(reference_table):
    """Verify: JSON and CSV carry the same cells."""
    rows = table_rows(0, 11)
    data = json.loads(render_table("json", list(range(12)), rows))
    assert data["n"] == reference_table["n"]
    assert {row["label"]: row["values"] for row in data["rows"]}["L(4,n)"] == reference_table["L(4,n)"]

    parsed = list(csv.reader(io.StringIO(render_table("csv", list(range(12)), rows))))
    assert parsed[0] == ["row"] + [str(n) for n in range(12)]
    assert parsed[1] == ["F_n"] + [str(v) for v in reference_table["F_n"]]


def test_oracle_text():
    """Verify: One line per cell plus an agreement tally."""
    text = render_oracle("text", count_oracle([3], [10]))
    assert text == "k=3 n=10 type_a=60 F=60 type_b=46 L=46 ok\nagreed=1/1\n"


def test_oracle_json():
    """Verify: JSON records and the overall flag."""
    data = json.loads(render_oracle("json", count_oracle([2], [0, 1])))
    assert data["all_agree"] is True
    assert data["records"][1] == {"k": 2, "n": 1, "type_a": 2, "F": 2, "type_b": 2, "L": 2, "agree": True}


def test_report_csv_columns():
    """Verify: Fixed columns, lowercase booleans, convention filled only where it applies."""
    report = verify_grid(["I-4.2p", "I-4.5p"], [2], 5)
    rows = list(csv.reader(io.StringIO(render_report("csv", report))))
    assert tuple(rows[0]) == REPORT_COLUMNS
    assert rows[1] == ["I-4.2p", "as-printed", "2", "4", "8", "5", "false", ""]
    conventions = {row[-1] for row in rows[1:] if row[0] == "I-4.5p"}
    assert conventions == {"classic", "generalized"}


def test_report_json():
    """Verify: Grid, records and summary sections; integers stay numbers."""
    report = verify_grid(["I-3.7"], [2, 3], 8)
    data = json.loads(render_report("json", report))
    assert set(data) == {"grid", "records", "summary"}
    assert data["grid"]["k_values"] == [2, 3]
    assert data["records"][0]["lhs"] == 7
    assert data["summary"][0]["failed"] == 0


def test_report_text():
    """Verify: One verdict line per identity with the first counterexample, then a footer."""
    text = render_report("text", verify_grid(["I-4.2p"], [2], 10))
    assert "I-4.2p" in text and "FAIL" in text
    assert "first counterexample k=2 n=4: 8 != 5" in text
    assert text.endswith("mismatches found\n")


def test_report_text_not_evaluated():
    """Verify: An identity with no grid point is flagged in its line and in the footer."""
    text = render_report("text", verify_grid(["I-4.3p", "I-3.1"], [3], 12))
    lines = text.splitlines()
    assert lines[0].startswith("I-3.1") and "PASS" in lines[0]
    assert lines[1].startswith("I-4.3p") and "not evaluated  passed=0 failed=0" in lines[1]
    assert lines[-1] == f"{12 - 6 + 1} evaluations, all identities matched, 1 not evaluated"


def test_error_payload():
    """Verify: One-line JSON error object."""
    assert json.loads(error_payload("UnknownIdentityError", "nope")) == {
        "status": "error", "type": "UnknownIdentityError", "message": "nope"}
