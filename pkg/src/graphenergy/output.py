"""Flat output rows and their CSV / JSON serializations.

Reals are written with 17 significant digits, so parsing a CSV row back
recovers every double bit for bit.  Missing values are empty in CSV and
``null`` in JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
from typing import Any, Iterable, Sequence

from .experiments import ExperimentRecord, SummaryRow

RECORD_BASE = ("n", "p", "index", "alpha", "trial", "energy", "predicted_t3", "predicted_cor",
               "ratio_t3", "ks", "ks_raw")
RECORD_TAIL = ("wall_ms", "status", "reason")
SUMMARY_COLUMNS = ("n", "p", "index", "alpha", "trials", "failed", "mean_ratio_t3",
                   "std_ratio_t3", "median_abs_dev", "mean_ks", "std_ks", "mean_energy",
                   "predicted_t3", "predicted_cor")
PREDICT_COLUMNS = ("index", "alpha", "n", "p", "predicted_t3", "predicted_cor",
                   "paper_displayed", "leading_exponent")
ARGMAX_COLUMNS = ("index", "alpha", "p_star", "trend", "closed_form", "source")
ESD_COLUMNS = ("x", "esd", "semicircle_cdf")

_INT_COLUMNS = {"n", "trial", "trials", "failed"}
_STR_COLUMNS = {"index", "status", "reason", "trend", "source"}


def record_columns(moment_orders: Sequence[int] = (2, 4)) -> tuple[str, ...]:
    return RECORD_BASE + tuple(f"m{k}" for k in moment_orders) + RECORD_TAIL


def record_row(r: ExperimentRecord, moment_orders: Sequence[int] = (2, 4)) -> dict[str, Any]:
    row = {
        "n": r.n, "p": r.p, "index": r.index_id, "alpha": r.alpha, "trial": r.trial_index,
        "energy": r.energy, "predicted_t3": r.predicted_t3, "predicted_cor": r.predicted_cor,
        "ratio_t3": r.ratio_t3, "ks": r.ks, "ks_raw": r.ks_raw,
    }
    for k in moment_orders:
        row[f"m{k}"] = r.moments.get(k)
    row.update(wall_ms=r.wall_ms, status=r.status, reason=r.reason)
    return row


def summary_row(s: SummaryRow) -> dict[str, Any]:
    return {
        "n": s.n, "p": s.p, "index": s.index_id, "alpha": s.alpha, "trials": s.trials,
        "failed": s.failed, "mean_ratio_t3": s.mean_ratio_t3, "std_ratio_t3": s.std_ratio_t3,
        "median_abs_dev": s.median_abs_dev, "mean_ks": s.mean_ks, "std_ks": s.std_ks,
        "mean_energy": s.mean_energy, "predicted_t3": s.predicted_t3,
        "predicted_cor": s.predicted_cor,
    }


def format_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        if math.isnan(v):
            return "nan"
        return f"{v:.17g}"
    return str(v)


def parse_value(column: str, text: str):
    if text == "":
        return None
    if column in _STR_COLUMNS:
        return text
    if column in _INT_COLUMNS:
        return int(text)
    return float(text)


def to_csv(rows: Iterable[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_value(row.get(c)) for c in columns])
    return buf.getvalue()


def from_csv(text: str) -> list[dict]:
    """Parse one CSV table written by :func:`to_csv` back into typed rows."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    return [{c: parse_value(c, v) for c, v in zip(header, line)} for line in reader if line]


def _json_clean(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(obj) -> str:
    def clean(o):
        if isinstance(o, dict):
            return {k: clean(v) for k, v in o.items()}
        if isinstance(o, list):
            return [clean(v) for v in o]
        return _json_clean(o)

    return json.dumps(clean(obj), indent=2) + "\n"
