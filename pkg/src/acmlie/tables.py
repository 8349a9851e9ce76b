"""Computed-versus-expected comparison of the Ricci and eta-Einstein tables.

Each row is evaluated at every documented sample of its fixture.  A cell
matches only on exact equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import catalog
from .riemannian import frame_ricci
from .structures import classify


@dataclass(frozen=True)
class TableRow:
    table: str
    label: str
    fixture: str
    compute: Callable  # fixture output -> {cell: value}
    expected: Callable  # params -> {cell: value}


@dataclass(frozen=True)
class Cell:
    table: str
    row: str
    params: str
    cell: str
    expected: object
    computed: object

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def _ricci_cells(K) -> dict:
    diag = frame_ricci(K.M).diagonal()
    return {f"Ric{i + 1}{i + 1}": v for i, v in enumerate(diag)}


def _ricci_expected(name):
    def expected(p):
        diag = catalog.get_fixture(name).expected(p)["frame_ricci_diag"]
        return {f"Ric{i + 1}{i + 1}": v for i, v in enumerate(diag)}
    return expected


def _eta_cells(S) -> dict:
    rep = classify(S)
    return {
        "exact": rep.eta_einstein,
        "lambda": rep.eta_einstein_lambda,
        "mu": rep.eta_einstein_mu,
        "mu != 0": rep.eta_einstein_mu is not None and rep.eta_einstein_mu != 0,
        "qS": rep.quasi_sasakian,
        "aS": rep.alpha_sasakian,
    }


def _eta_expected(name):
    def expected(p):
        e = catalog.get_fixture(name).expected(p)
        return {
            "exact": True,
            "lambda": e["eta_einstein_lambda"],
            "mu": e["eta_einstein_mu"],
            "mu != 0": True,
            "qS": e["quasi_sasakian"],
            "aS": e["alpha_sasakian"],
        }
    return expected


def ricci_rows() -> list[TableRow]:
    return [
        TableRow("ricci", row, f"table1_{row}", _ricci_cells, _ricci_expected(f"table1_{row}"))
        for row in catalog.TABLE1
    ]


def eta_einstein_rows() -> list[TableRow]:
    return [
        TableRow("eta-einstein", row, f"eta_{row}", _eta_cells, _eta_expected(f"eta_{row}"))
        for row in catalog.ETA_ROWS
    ]


def default_rows() -> list[TableRow]:
    return ricci_rows() + eta_einstein_rows()


def _params_text(p: dict) -> str:
    return ",".join(f"{k}={v}" for k, v in p.items())


def compare(rows: list[TableRow] | None = None) -> list[Cell]:
    cells = []
    for row in rows if rows is not None else default_rows():
        fx = catalog.get_fixture(row.fixture)
        for sample in fx.samples:
            p = fx.resolve(sample)
            got = row.compute(fx.build(p))
            want = row.expected(p)
            for key, value in want.items():
                cells.append(Cell(row.table, row.label, _params_text(p), key, value, got.get(key)))
    return cells


def _show(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    return str(v)


def render_text(cells: list[Cell]) -> str:
    lines = []
    groups: dict[tuple, list[Cell]] = {}
    for c in cells:
        groups.setdefault((c.table, c.row, c.params), []).append(c)
    current = None
    for (table, row, params), group in groups.items():
        if table != current:
            current = table
            head = "Ricci curvature, orthonormal frame" if table == "ricci" else "eta-Einstein extensions"
            lines.append(f"== {head} ==")
        computed = " ".join(f"{c.cell}={_show(c.computed)}" for c in group)
        bad = [c for c in group if not c.ok]
        status = "OK" if not bad else "MISMATCH " + "; ".join(
            f"{c.cell}: expected {_show(c.expected)}, computed {_show(c.computed)}" for c in bad)
        lines.append(f"{row:<15} [{params}]  {computed}  {status}")
    total = len(cells)
    failed = sum(not c.ok for c in cells)
    lines.append(f"{total - failed}/{total} cells match")
    return "\n".join(lines) + "\n"


def _json_value(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def render_json(cells: list[Cell]) -> str:
    doc = {
        "ok": all(c.ok for c in cells),
        "cells": [
            {"table": c.table, "row": c.row, "params": c.params, "cell": c.cell,
             "expected": _json_value(c.expected), "computed": _json_value(c.computed), "ok": c.ok}
            for c in cells
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
