"""
WHY: To keep every user-visible output byte-deterministic and in one place.
WHAT: Text, JSON and CSV renderings for the reference table, the counting oracle and verification reports.
HOW: Pure functions from result objects to strings; JSON with sorted keys, CSV through the csv module.
"""

import csv
import io
import json
from typing import Dict, List, Sequence, Tuple

from .ktile_identities import VerificationReport
from .ktile_tilings import OracleRecord

TEXT, JSON, CSV = "text", "json", "csv"
FORMATS = (TEXT, JSON, CSV)

REPORT_COLUMNS = ("identity_id", "variant", "k", "n", "lhs", "rhs", "matched", "convention")


def _dumps(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _flag(value: bool) -> str:
    return "true" if value else "false"


# Reference table

def table_text(columns: Sequence[int], rows: Sequence[Tuple[str, List[int]]]) -> str:
    """Aligned grid: labels left-justified, numbers right-justified, two-space gaps."""
    label_width = max([len("n")] + [len(label) for label, _ in rows])
    widths = [max([len(str(n))] + [len(str(values[i])) for _, values in rows])
              for i, n in enumerate(columns)]

    def line(label: str, cells: Sequence[object]) -> str:
        return label.ljust(label_width) + "".join(
            "  " + str(cell).rjust(width) for cell, width in zip(cells, widths))

    out = [line("n", columns)] + [line(label, values) for label, values in rows]
    return "\n".join(out) + "\n"


def table_json(columns: Sequence[int], rows: Sequence[Tuple[str, List[int]]]) -> str:
    return _dumps({"n": list(columns), "rows": [{"label": label, "values": values} for label, values in rows]})


def table_csv(columns: Sequence[int], rows: Sequence[Tuple[str, List[int]]]) -> str:
    return _csv(["row"] + [str(n) for n in columns], [[label] + values for label, values in rows])


def render_table(fmt: str, columns: Sequence[int], rows: Sequence[Tuple[str, List[int]]]) -> str:
    return {TEXT: table_text, JSON: table_json, CSV: table_csv}[fmt](columns, rows)


# Counting oracle

def oracle_text(records: Sequence[OracleRecord]) -> str:
    out = [f"k={r.k} n={r.n} type_a={r.count_a} F={r.fib} type_b={r.count_b} L={r.lucas} "
           f"{'ok' if r.ok else 'MISMATCH'}" for r in records]
    agreed = sum(1 for r in records if r.ok)
    out.append(f"agreed={agreed}/{len(records)}")
    return "\n".join(out) + "\n"


def oracle_json(records: Sequence[OracleRecord]) -> str:
    return _dumps({
        "records": [r.to_dict() for r in records],
        "all_agree": all(r.ok for r in records),
    })


def oracle_csv(records: Sequence[OracleRecord]) -> str:
    return _csv(["k", "n", "type_a", "F", "type_b", "L", "agree"],
                [[r.k, r.n, r.count_a, r.fib, r.count_b, r.lucas, _flag(r.ok)] for r in records])


def render_oracle(fmt: str, records: Sequence[OracleRecord]) -> str:
    return {TEXT: oracle_text, JSON: oracle_json, CSV: oracle_csv}[fmt](records)


# Verification reports

def report_json(report: VerificationReport) -> str:
    return _dumps(report.to_dict())


def report_csv(report: VerificationReport) -> str:
    """Fixed columns; `convention` is blank except for multi-convention identities."""
    return _csv(REPORT_COLUMNS, [
        [r.identity_id, r.variant.value, r.k, r.n, r.lhs, r.rhs, _flag(r.matched), r.convention]
        for r in report.records
    ])


def report_text(report: VerificationReport) -> str:
    out: List[str] = []
    width = max([len(s.label) for s in report.summaries] + [8])
    for s in report.summaries:
        verdict = ("PASS" if s.ok else "FAIL") if s.evaluated else "not evaluated"
        line = f"{s.label.ljust(width)}  {s.variant.value:<10}  {verdict}  passed={s.passed} failed={s.failed}"
        if s.first_counterexample is not None:
            c = s.first_counterexample
            line += f"  first counterexample k={c.k} n={c.n}: {c.lhs} != {c.rhs}"
        out.append(line)
        if report.grid.explore and (s.explored_passed or s.explored_failed):
            holds = " ".join(f"({k},{n})" for k, n in s.explored_holds) or "-"
            out.append(f"{''.ljust(width)}  explored passed={s.explored_passed} "
                       f"failed={s.explored_failed} holds at {holds}")
    verdict = "all identities matched" if report.all_matched else "mismatches found"
    skipped = sum(1 for s in report.summaries if not s.evaluated)
    if skipped:
        verdict += f", {skipped} not evaluated"
    out.append(f"{len(report.records)} evaluations, {verdict}")
    return "\n".join(out) + "\n"


def render_report(fmt: str, report: VerificationReport) -> str:
    return {TEXT: report_text, JSON: report_json, CSV: report_csv}[fmt](report)


def error_payload(kind: str, message: str) -> str:
    """One-line JSON error object, as printed by the CLI on failure."""
    payload: Dict[str, str] = {"status": "error", "type": kind, "message": message}
    return json.dumps(payload)
