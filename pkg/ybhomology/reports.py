# --- ybhomology/reports.py ---
"""Render suite reports as JSON, CSV or a pretty table, and save them to disk."""
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Union

import pandas as pd

from ybhomology import settings
from ybhomology.paths import report_path
from ybhomology.schemas import (
    CheckReport,
    DecompositionPayload,
    HomologyReport,
    KernelReport,
    KoszulReport,
)

LOGGER = logging.getLogger(__name__)

Report = Union[CheckReport, KernelReport, DecompositionPayload, HomologyReport, KoszulReport]

SUFFIXES = {"json": "json", "csv": "csv", "pretty": "txt"}


def _failed(checks) -> str:
    return ",".join(name for name, ok in checks.items() if not ok)


def _verdicts(checks) -> pd.DataFrame:
    return pd.DataFrame({"check": list(checks), "passed": list(checks.values())}, columns=["check", "passed"])


def report_frame(report: Report) -> pd.DataFrame:
    """One row per degree (or per check) in report order."""
    if isinstance(report, CheckReport):
        return _verdicts(report.checks)
    if isinstance(report, KoszulReport):
        return _verdicts({**report.squares, **report.delta_exact})
    if isinstance(report, DecompositionPayload):
        return pd.DataFrame([p.model_dump(exclude={"basis"}) for p in report.parts], columns=["k", "dim", "eigenvalue"])
    if isinstance(report, KernelReport):
        rows = []
        for r in report.records:
            rows.append({
                "n": r.n, "M": r.M, "M_recurrence": r.M_recurrence,
                "tilde_dim": r.tilde_dim, "b": r.b, "failed": _failed(r.checks),
            })
        return pd.DataFrame(rows, columns=["n", "M", "M_recurrence", "tilde_dim", "b", "failed"])
    columns = ["n", "total_degree", "dim_C", "rank_out", "rank_in", "dim_H", "betti_formula", "failed"]
    rows = []
    for r in report.records:
        row = r.model_dump(exclude={"checks"})
        row["failed"] = _failed(r.checks)
        rows.append(row)
    df = pd.DataFrame(rows, columns=columns)
    if report.kind == "finite":
        df = df.drop(columns=["total_degree"])
    return df


def _headline(report: Report) -> str:
    if isinstance(report, DecompositionPayload):
        verdict = "passed" if report.passed else "failed"
        return f"decompose m={report.m} n={report.n}: dims sum to {report.dims_sum} ({verdict})"
    name = getattr(report, "module", None) or f"m={report.m}"
    line = f"{report.command} {name} [{report.rank_mode}]: {'passed' if report.passed else 'failed'}"
    if isinstance(report, CheckReport) and report.first_failure:
        line += f" (first failure: {report.first_failure})"
    if isinstance(report, HomologyReport) and report.r is not None:
        line += f"\nr = {tuple(report.r)}, stacked r = {tuple(report.r_stacked or ())}"
    return line


def render(report: Report, output: str = "json") -> str:
    if output == "json":
        return report.model_dump_json(indent=2)
    df = report_frame(report)
    if output == "csv":
        return df.to_csv(index=False)
    if output == "pretty":
        table = df.to_string(index=False) if not df.empty else "(no rows)"
        return f"{_headline(report)}\n{table}"
    raise ValueError(f"unknown output format {output!r}")


def save_report(report: Report, output: str = "json", base: Optional[Path] = None) -> Path:
    path = report_path(report.command, report.m, SUFFIXES[output], base=base or settings.REPORTS_PATH)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(render(report, output))
    LOGGER.info("saved %s report to %s", report.command, path)
    return path
