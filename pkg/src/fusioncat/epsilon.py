"""Scalar products <rho, alpha> computed in the orthonormal epsilon basis.

This is an oracle that never touches a Cartan matrix or the fusion
matrices: fundamental weights and positive roots of the classical series
are written as explicit vectors, rho is summed from the fundamental weights
and the scalar products come from the Euclidean dot product.

For C_r every vector carries a hidden factor 1/sqrt(2) so that long roots
have norm 2; we store the integer vectors and halve all dot products.
"""
from __future__ import annotations

from fractions import Fraction

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


def _unit(i: int, dim: int) -> list:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


def _add(u, v, sign=1):
    return [a + sign * b for a, b in zip(u, v)]


def _prefix(i: int, dim: int, coef=Fraction(1)) -> list:
    """coef * (eps_1 + ... + eps_i)."""
    return [coef if p < i else Fraction(0) for p in range(dim)]


def _fundamental_weights(family: str, r: int) -> list:
    if family == "A":
        dim = r + 1
        return [
            [Fraction(1 if p < i else 0) - Fraction(i, r + 1) for p in range(dim)]
            for i in range(1, r + 1)
        ]
    if family == "B":
        return [_prefix(i, r) for i in range(1, r)] + [_prefix(r, r, Fraction(1, 2))]
    if family == "C":
        return [_prefix(i, r) for i in range(1, r + 1)]
    if family == "D":
        last = _prefix(r, r, Fraction(1, 2))
        minus = list(last)
        minus[r - 1] = -minus[r - 1]
        return [_prefix(i, r) for i in range(1, r - 1)] + [minus, last]
    raise ValueError(f"no epsilon model for family {family!r}")


def positive_root_families(family: str, r: int) -> dict:
    """{"(1)": [...], "(2)": [...], "(3)": [...]} of (i, j, vector) triples (1-based)."""
    if family == "A":
        dim = r + 1
        return {
            "(2)": [
                (i + 1, j + 1, _add(_unit(i, dim), _unit(j, dim), -1))
                for i in range(dim)
                for j in range(i + 1, dim)
            ]
        }
    pairs = [(i, j) for i in range(r) for j in range(i + 1, r)]
    out = {
        "(1)": [(i + 1, j + 1, _add(_unit(i, r), _unit(j, r))) for i, j in pairs],
        "(2)": [(i + 1, j + 1, _add(_unit(i, r), _unit(j, r), -1)) for i, j in pairs],
    }
    if family == "B":
        out["(3)"] = [(i + 1, None, _unit(i, r)) for i in range(r)]
    elif family == "C":
        out["(3)"] = [(i + 1, None, [2 * x for x in _unit(i, r)]) for i in range(r)]
    return out


def _dot(u, v, family: str) -> Fraction:
    s = sum((a * b for a, b in zip(u, v)), Fraction(0))
    return s / 2 if family == "C" else s


def weyl_vector(family: str, r: int) -> list:
    rho = None
    for w in _fundamental_weights(family, r):
        rho = w if rho is None else _add(rho, w)
    return rho


def _check(family: str, r: int) -> None:
    if family not in _MIN_RANK:
        raise ValueError(f"no epsilon model for family {family!r}")
    if r < _MIN_RANK[family]:
        raise ValueError(f"{family}{r} is below the minimal rank {_MIN_RANK[family]}")


def scalar_product_tuples(family: str, r: int) -> dict:
    """For each root family and each first index i, the tuple (<rho, alpha_{i,j}>)_j."""
    _check(family, r)
    rho = weyl_vector(family, r)
    out = {}
    for name, roots in positive_root_families(family, r).items():
        groups: dict = {}
        for i, _, v in roots:
            groups.setdefault(i, []).append(_dot(rho, v, family))
        if name == "(3)":
            out[name] = tuple(g[0] for g in groups.values())
        else:
            out[name] = tuple(tuple(g) for g in groups.values())
    return out


def epsilon_scalar_products(family: str, r: int) -> list:
    """Sorted multiset {<rho, alpha> : alpha > 0}."""
    _check(family, r)
    rho = weyl_vector(family, r)
    vals = [
        _dot(rho, v, family)
        for roots in positive_root_families(family, r).values()
        for _, _, v in roots
    ]
    return sorted(vals)


def root_norms(family: str, r: int) -> list:
    """Sorted multiset of <alpha, alpha> over positive roots (sanity check of the metric)."""
    _check(family, r)
    return sorted(
        _dot(v, v, family)
        for roots in positive_root_families(family, r).values()
        for _, _, v in roots
    )
