"""Serialisation of quiver tables and root quivers (CSV, JSON, DOT)."""
from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .lie import LieData
from .quiver import QuiverTable, is_position, root_placement


def fraction_str(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def table_to_csv(table: QuiverTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["n"] + [str(b) for b in range(1, table.ncols + 1)])
    for n, row in enumerate(table.rows, start=1):
        w.writerow([n] + ["" if v is None else _plain(v) for v in row])
    return buf.getvalue()


def _plain(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def table_to_dict(table: QuiverTable) -> dict:
    return {
        "type": str(table.lie),
        "weight": [fraction_str(c) for c in table.weight],
        "half": table.half,
        "scaled": table.scaled,
        "entries": [[n, b, fraction_str(v)] for (n, b), v in table.items()],
    }


def table_to_json(table: QuiverTable) -> str:
    return json.dumps(table_to_dict(table), indent=2)


def table_from_dict(obj: dict, data: LieData) -> QuiverTable:
    """Inverse of table_to_dict (the Lie data supplies the checkerboard)."""
    half = bool(obj["half"])
    nrows = data.coxeter if half else 2 * data.coxeter
    rows = [[None] * data.rank for _ in range(nrows)]
    for n, b, v in obj["entries"]:
        if not is_position(data, n, b):
            raise ValueError(f"entry at empty cell {(n, b)}")
        rows[n - 1][b - 1] = Fraction(v)
    return QuiverTable(
        data.type,
        tuple(Fraction(c) for c in obj["weight"]),
        half,
        bool(obj.get("scaled", False)),
        tuple(tuple(r) for r in rows),
    )


def root_quiver_rows(data: LieData) -> list:
    """[(n, b, coefficients)] for every root, sorted by position."""
    return [(n, b, root.coeffs) for (n, b), root in sorted(root_placement(data).items())]


def root_quiver_to_dot(data: LieData) -> str:
    """Arrows (n, b) -> (n+1, c) whenever b and c are linked in the diagram (period 2N)."""
    placement = root_placement(data)
    N2 = 2 * data.coxeter
    G = data.adjacency
    lines = [f'digraph "{data.type}" {{', "  node [shape=plaintext];"]
    for (n, b), root in sorted(placement.items()):
        label = "".join(str(c) for c in root.coeffs) if root.height > 0 else (
            "-" + "".join(str(-c) for c in root.coeffs)
        )
        lines.append(f'  "{n},{b}" [label="{label}", pos="{b},{-n}!"];')
    for (n, b) in sorted(placement):
        m = n % N2 + 1
        for c in range(1, data.rank + 1):
            if G[b - 1][c - 1] and (m, c) in placement:
                lines.append(f'  "{n},{b}" -> "{m},{c}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
