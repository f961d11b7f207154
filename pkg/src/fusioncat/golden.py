"""Reference tables shipped with the package (see data/golden/*.txt).

Each file is a whitespace-separated grid; ``.`` marks an empty cell and lines
starting with ``#`` are comments.
"""
from __future__ import annotations

from fractions import Fraction
from importlib import resources

import numpy as np


def _lines(name: str) -> list:
    text = resources.files("fusioncat").joinpath("data", "golden", name).read_text()
    return [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def available() -> list:
    root = resources.files("fusioncat").joinpath("data", "golden")
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".txt"))


def load_table(name: str) -> tuple:
    """Rows of Fractions with None for empty cells."""
    return tuple(
        tuple(None if c == "." else Fraction(c) for c in row) for row in _lines(name)
    )


def load_matrix(name: str) -> np.ndarray:
    return np.array([[int(c) for c in row] for row in _lines(name)], dtype=np.int64)


def load_root_quiver(name: str) -> dict:
    """{(n, b): coefficient tuple} for every non-empty cell."""
    out = {}
    for n, row in enumerate(_lines(name), start=1):
        for b, c in enumerate(row, start=1):
            if c != ".":
                out[(n, b)] = tuple(int(x) for x in c.split(","))
    return out


RHO_ROOT_TABLES = {
    "E6": "E6_rho_coroots.txt",  # simply laced: roots and coroots agree
    "E7": "E7_rho_roots.txt",
    "E8": "E8_rho_roots.txt",
    "F4": "F4_rho_roots.txt",
    "G2": "G2_rho_roots.txt",
    "A6": "A6_rho_roots.txt",
    "B6": "B6_rho_roots.txt",
    "C6": "C6_rho_roots.txt",
    "D6": "D6_rho_roots.txt",
}
RHO_COROOT_TABLES = {"E6": "E6_rho_coroots.txt", "F4": "F4_rho_coroots.txt"}
