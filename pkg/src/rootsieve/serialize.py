"""CSV and JSON output for sweep tables and separation results.

Floats are written with ``repr`` so JSON documents round-trip bit-exactly.
Suppressed table cells are written as the literal 0 next to a boolean
``suppressedK`` column.
"""
from __future__ import annotations

import csv
import io
import json
import math

from .sweep import GridSpec, PredicateRun, RootReport, SeparationResult, SweepTable


def _grid_dict(grid: GridSpec) -> dict:
    return {"lo": grid.lo, "hi": grid.hi, "n": grid.n, "h": grid.h}


def _grid_from(d: dict) -> GridSpec:
    return GridSpec(d["lo"], d["hi"], d["n"])


# -- sweep tables ----------------------------------------------------------

def table_to_csv(table: SweepTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    R = table.depths
    w.writerow(["i", "x"] + [f"depth{r + 1}" for r in range(R)]
               + [f"suppressed{r + 1}" for r in range(R)])
    shown = table.rendered()
    for i, x in enumerate(table.x):
        w.writerow([i, repr(float(x))]
                   + [repr(float(v)) if not s else "0" for v, s in zip(shown[i], table.suppressed[i])]
                   + [str(bool(s)).lower() for s in table.suppressed[i]])
    return buf.getvalue()


def table_to_dict(table: SweepTable, runs=None, config=None) -> dict:
    shown = table.rendered()
    rows = [{"i": i, "x": float(x),
             "values": [float(v) for v in shown[i]],
             "suppressed": [bool(s) for s in table.suppressed[i]]}
            for i, x in enumerate(table.x)]
    out = {"config": config or {}, "grid": _grid_dict(table.grid),
           "depths": table.depths, "rows": rows}
    if runs is not None:
        out["runs"] = [_run_dict(r) for r in runs]
    return out


# -- separation results ----------------------------------------------------

def _run_dict(run: PredicateRun) -> dict:
    return {"lo": run.lo, "hi": run.hi,
            "indices": [run.first_index, run.last_index],
            "points": list(run.points), "values": list(run.values)}


def _run_from(d: dict) -> PredicateRun:
    a, b = d["indices"]
    return PredicateRun(a, b, d["lo"], d["hi"], tuple(d["points"]), tuple(d["values"]))


def _report_dict(rep: RootReport, run_index: int) -> dict:
    residual = rep.residual if math.isfinite(rep.residual) else None
    return {"run": run_index, "root": rep.root, "residual": residual,
            "depth": rep.depth, "invariant": rep.invariant,
            "possibly_multiple": rep.possibly_multiple, "is_root": rep.is_root,
            "diagnostic": rep.diagnostic}


def _report_from(d: dict, runs) -> RootReport:
    residual = math.inf if d["residual"] is None else d["residual"]
    return RootReport(runs[d["run"]], d["root"], residual, d["depth"],
                      d["invariant"], d["possibly_multiple"], d["is_root"], d["diagnostic"])


def result_to_dict(result: SeparationResult) -> dict:
    index = {id(r): i for i, r in enumerate(result.runs)}
    # reports loaded from JSON hold equal (not identical) runs
    lookup = {(r.first_index, r.last_index): i for i, r in enumerate(result.runs)}

    def run_index(rep):
        i = index.get(id(rep.run))
        return i if i is not None else lookup[(rep.run.first_index, rep.run.last_index)]

    return {
        "config": result.config,
        "grid": _grid_dict(result.grid),
        "runs": [_run_dict(r) for r in result.runs],
        "reports": [_report_dict(r, run_index(r)) for r in result.reports],
        "rejected": [_report_dict(r, run_index(r)) for r in result.rejected],
    }


def result_from_dict(d: dict) -> SeparationResult:
    runs = [_run_from(r) for r in d["runs"]]
    return SeparationResult(
        d["config"], _grid_from(d["grid"]), runs,
        [_report_from(r, runs) for r in d["reports"]],
        [_report_from(r, runs) for r in d.get("rejected", [])],
    )


def dumps(obj: dict) -> str:
    return json.dumps(obj, indent=1, allow_nan=False) + "\n"


def result_to_json(result: SeparationResult) -> str:
    return dumps(result_to_dict(result))


def result_from_json(text: str) -> SeparationResult:
    return result_from_dict(json.loads(text))


def reports_to_csv(result: SeparationResult) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["root", "residual", "depth", "invariant", "possibly_multiple",
                "run_lo", "run_hi", "first_index", "last_index", "diagnostic"])
    for r in result.reports:
        w.writerow([repr(r.root), repr(r.residual), r.depth, str(r.invariant).lower(),
                    str(r.possibly_multiple).lower(), repr(r.run.lo), repr(r.run.hi),
                    r.run.first_index, r.run.last_index, r.diagnostic])
    return buf.getvalue()
