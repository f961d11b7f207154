"""Conformal embeddings (G, k) in (J, 1) and the global dimension of their modules.

An embedding is conformal when the central charges agree,

    sum_i dim(G_i) k_i / (k_i + N_dual(G_i)) = dim(J) / (1 + N_dual(J)),

and the associated module category E over A_k(G) then has
|E| = sqrt(|A_k(G)| * |A_1(J)|).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import mpmath
from mpmath import mp

from .lie import LieType, dual_coxeter_number, group_dimension
from .moddim import category, global_dim

TAGS = ("antisymmetric", "adjoint", "symmetric", "sporadic")
DEFAULT_RANK_CAP = 8


@dataclass(frozen=True)
class EmbeddingRecord:
    inner: tuple  # ((LieType, level), ...)
    outer: LieType
    tag: str
    dynkin_index: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag!r}")
        if not self.inner:
            raise ValueError("at least one inner factor is needed")
        for t, k in self.inner:
            if k < 1:
                raise ValueError("levels must be positive")

    @property
    def central_charge(self) -> Fraction:
        return inner_central_charge(self)

    def __str__(self) -> str:
        inner = " x ".join(f"{t}_{k}" for t, k in self.inner)
        return f"{inner} < {self.outer}_1 [{self.tag}]"


def central_charge(t: LieType, k: int) -> Fraction:
    return Fraction(group_dimension(t) * k, k + dual_coxeter_number(t))


def inner_central_charge(rec: EmbeddingRecord) -> Fraction:
    return sum((central_charge(t, k) for t, k in rec.inner), Fraction(0))


def central_charge_check(rec: EmbeddingRecord) -> tuple:
    c_in = inner_central_charge(rec)
    c_out = central_charge(rec.outer, 1)
    return c_in, c_out, c_in == c_out


def spin(m: int) -> LieType:
    """Spin(m) as B_{(m-1)/2} or D_{m/2}."""
    if m % 2:
        return LieType("B", (m - 1) // 2)
    return LieType("D", m // 2)


def su(n: int) -> LieType:
    return LieType("A", n - 1)


_SPORADIC = [
    (2, 10, spin(5)),
    (2, 28, LieType("G2", 2)),
    (3, 9, LieType("E6", 6)),
    (3, 21, LieType("E7", 7)),
    (4, 8, spin(20)),
    (6, 6, LieType("C", 10)),  # Sp(10) read as the rank-10 symplectic group
    (8, 1, LieType("E7", 7)),
    (8, 10, spin(70)),
    (9, 1, LieType("E8", 8)),
]


def _all_types(rank_cap: int):
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for r in range(lo, rank_cap + 1):
            yield LieType(fam, r)
    for fam, r in (("E6", 6), ("E7", 7), ("E8", 8), ("F4", 4), ("G2", 2)):
        if r <= rank_cap:
            yield LieType(fam, r)


def catalog(rank_cap: int = DEFAULT_RANK_CAP) -> list:
    """Built-in embeddings: SU(N) regular series and sporadics, adjoint for all types.

    rank_cap bounds the rank of the inner group for the infinite families.
    """
    out = []
    for N in range(2, rank_cap + 2):
        if N >= 4:
            out.append(EmbeddingRecord(((su(N), N - 2),), su(N * (N - 1) // 2), "antisymmetric"))
        out.append(EmbeddingRecord(((su(N), N + 2),), su(N * (N + 1) // 2), "symmetric"))
    for t in _all_types(rank_cap):
        dim = group_dimension(t)
        # Spin(3) is not a valid outer group, so SU(2) has no adjoint record
        if dim < 5:
            continue
        out.append(EmbeddingRecord(((t, dual_coxeter_number(t)),), spin(dim), "adjoint"))
    for N, k, J in _SPORADIC:
        out.append(EmbeddingRecord(((su(N), k),), J, "sporadic"))
    return out


def find(catalog_: list, inner: LieType, level: int, outer: LieType | None = None) -> EmbeddingRecord:
    for rec in catalog_:
        if rec.inner == ((inner, level),) and (outer is None or rec.outer == outer):
            return rec
    raise KeyError(f"no embedding of {inner} at level {level}")


def _type_from_json(obj: dict) -> LieType:
    fam = obj["family"]
    rank = obj.get("rank")
    if rank is None:
        return LieType.parse(fam)
    return LieType(fam, int(rank)) if fam in ("A", "B", "C", "D") else LieType.parse(fam)


def record_from_dict(obj: dict) -> EmbeddingRecord:
    inner = tuple((_type_from_json(f), int(f["level"])) for f in obj["inner"])
    return EmbeddingRecord(inner, _type_from_json(obj["outer"]), obj.get("tag", "sporadic"))


def record_to_dict(rec: EmbeddingRecord) -> dict:
    return {
        "inner": [{"family": t.family, "rank": t.rank, "level": k} for t, k in rec.inner],
        "outer": {"family": rec.outer.family, "rank": rec.outer.rank},
        "tag": rec.tag,
    }


def load_catalog(path) -> list:
    return [record_from_dict(o) for o in json.loads(Path(path).read_text())]


def module_global_dim(rec: EmbeddingRecord, precision: int = 0):
    """sqrt(prod_i |A_{k_i}(G_i)| * |A_1(J)|)."""
    cats = [category(t, k, precision) for t, k in rec.inner]
    outer = category(rec.outer, 1, precision)
    with mp.workprec(outer.precision):
        a = mpmath.mpf(1)
        for c in cats:
            a *= global_dim(c)
        return mp.sqrt(a * global_dim(outer))
