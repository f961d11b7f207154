"""Cross-module oracle checks, grouped in suites (used by ``fusioncat verify``)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

import mpmath
from mpmath import mp

from . import golden
from .embeddings import catalog, central_charge_check, find, module_global_dim, su
from .epsilon import epsilon_scalar_products
from .lie import LieType, Root, lie_data
from .moddim import (
    brute_force_global_dim,
    category,
    e6_explicit_check,
    e6_trigonometric_product,
    global_dim,
    level_rank_check,
    nimrep_global_dim,
    s11,
    su2_verlinde_check,
    verlinde_check,
    zeta_report,
)
from .qnum import QContext, default_precision
from .quiver import (
    coxeter_consistency,
    direct_weyl_denominator,
    essential_table,
    fusion_sequence,
    fusion_sequence_invariants,
    local_chebyshev_check,
    path_matrix,
    path_matrix_product,
    rho_table,
    root_placement,
    fusion_denominator_squared,
    weyl_denominator,
)

SUITES = ("quiver", "dims", "embeddings")

BRUTE_FORCE_SWEEP = (
    ("A1", 10), ("A2", 8), ("A3", 5),
    ("B2", 4), ("B3", 4), ("C2", 4), ("C3", 4),
    ("G2", 4), ("F4", 2), ("E6", 2),
)


@dataclass(frozen=True)
class Check:
    name: str
    status: str  # "pass", "fail" or "report"
    residual: object = None

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def _exact(name: str, ok: bool) -> Check:
    return Check(name, "pass" if ok else "fail", 0 if ok else None)


def _approx(name: str, residual, tol) -> Check:
    return Check(name, "pass" if residual < tol else "fail", residual)


def types_up_to(max_rank: int, min_rank: int = 2) -> list:
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)):
        for r in range(max(lo, min_rank), max_rank + 1):
            out.append(LieType(fam, r))
    for name in ("G2", "F4", "E6", "E7", "E8"):
        t = LieType.parse(name)
        if t.rank <= max_rank:
            out.append(t)
    return out


def sfac_classical(data) -> Fraction:
    return data.varpi * prod(factorial(s) for s in data.exponents)


def denominator_triple(t) -> tuple:
    """(table product, direct product, fusion-matrix square, superfactorial)."""
    data = lie_data(t)
    cl = QContext.classical_mode()
    return (
        weyl_denominator(data, cl),
        direct_weyl_denominator(data, cl),
        fusion_denominator_squared(data),
        sfac_classical(data),
    )


def denominator_triple_ok(t) -> bool:
    a, b, sq, s = denominator_triple(t)
    return a == b == s and sq == s * s and a > 0


def golden_checks() -> list:
    out = []
    for name, fname in golden.RHO_ROOT_TABLES.items():
        out.append(_exact(f"golden f+(rho) {name}", rho_table(lie_data(name)).rows == golden.load_table(fname)))
    for name, fname in golden.RHO_COROOT_TABLES.items():
        data = lie_data(name)
        out.append(_exact(f"golden e+(rho) {name}", rho_table(data, scaled=False).rows == golden.load_table(fname)))
    for name, r in (("E6", 6), ("F4", 4)):
        data = lie_data(name)
        ok = all(
            essential_table([int(a == b) for b in range(1, r + 1)], data, half=True).rows
            == golden.load_table(f"{name}_e{a}.txt")
            for a in range(1, r + 1)
        )
        out.append(_exact(f"golden e+_a {name}", ok))
    e6 = lie_data("E6")
    a3 = e6.root_as_weight(Root((0, 0, 1, 0, 0, 0)))
    out.append(_exact("golden e(alpha_3) E6", essential_table(a3, e6).rows == golden.load_table("E6_alpha3_full.txt")))
    placement = {p: r.coeffs for p, r in root_placement(e6).items()}
    out.append(_exact("golden root quiver E6", placement == golden.load_root_quiver("E6_root_quiver.txt")))
    a11 = lie_data("A11")
    out.append(_exact("golden A11 F_4", (fusion_sequence(a11)[4] == golden.load_matrix("A11_F4.txt")).all()))
    out.append(_exact("golden A11 path matrix", (path_matrix(a11) == golden.load_matrix("A11_path_matrix.txt")).all()))
    return out


def quiver_suite(max_rank: int = 8) -> list:
    out = []
    for t in types_up_to(max_rank):
        data = lie_data(t)
        out.append(_exact(f"denominator triple {t}", denominator_triple_ok(t)))
        inv = fusion_sequence_invariants(data)
        out.append(_exact(f"fusion sequence {t}", all(inv.values())))
        out.append(_exact(f"local recurrence {t}", local_chebyshev_check(essential_table(data.weyl_vector, data), data)))
        if t.family in ("A", "B", "C", "D"):
            eps = epsilon_scalar_products(t.family, t.rank)
            out.append(_exact(f"epsilon multiset {t}", sorted(rho_table(data).values()) == eps))
        placement = root_placement(data)
        out.append(_exact(
            f"root placement {t}",
            len(placement) == 2 * len(data.positive_roots)
            and all(n <= data.coxeter for (n, _), a in placement.items() if a.height > 0)
            and coxeter_consistency(data),
        ))
    for r in range(1, max_rank + 1):
        data = lie_data(LieType("A", r))
        sf = prod(factorial(s) for s in range(1, r + 1))
        out.append(_exact(f"path matrix product A{r}", path_matrix_product(data) == 2**r * sf**2))
    out.extend(golden_checks())
    return out


def dims_suite(precision: int = 0) -> list:
    prec = precision or default_precision()
    tol = mpmath.mpf(2) ** -(prec - 16)
    out = []
    with mp.workprec(prec):
        for name, kmax in BRUTE_FORCE_SWEEP:
            worst = mpmath.mpf(0)
            for k in range(1, kmax + 1):
                cat = category(name, k, prec)
                g = global_dim(cat)
                worst = max(worst, abs(brute_force_global_dim(cat) - g) / g)
                worst = max(worst, abs(g * s11(cat) ** 2 - 1))
            out.append(_approx(f"brute force vs closed {name} k<={kmax}", worst, tol))
        spots = [
            ("A1", 2, mpmath.mpf(4)),
            ("B2", 1, mpmath.mpf(4)),
            ("G2", 1, (5 + mp.sqrt(5)) / 2),
        ] + [(f"A{p - 1}", 1, mpmath.mpf(p)) for p in range(2, 9)]
        for name, k, expected in spots:
            v = brute_force_global_dim(category(name, k, prec))
            out.append(_approx(f"|A_{k}({name})|", abs(v - expected) / expected, tol))
        worst = max(level_rank_check(N, k, prec)[2] for N in range(2, 7) for k in range(2, 7))
        out.append(_approx("level-rank 2<=N,k<=6", worst, tol))
        vtol = mpmath.mpf(2) ** -(prec - 28)
        for t in types_up_to(8, min_rank=1):
            if t.simply_laced:
                out.append(_approx(f"Verlinde {t}", verlinde_check(lie_data(t), prec), vtol))
        worst = max(su2_verlinde_check(r, prec) for r in range(1, 9))
        out.append(_approx("Verlinde A_r with Psi = S", worst, vtol))
        out.append(_approx("E6 explicit Psi", e6_explicit_check(prec), vtol))
        target = mpmath.mpf(prod(factorial(s) for s in (1, 4, 5, 7, 8, 11)) ** 2)
        out.append(_approx("E6 trigonometric product", abs(e6_trigonometric_product(prec) - target) / target, vtol))
        for row in zeta_report(precision=prec, threshold_bits=prec - 28):
            status = "pass" if row.agrees else ("fail" if row.p == 2 else "report")
            out.append(Check(f"zeta SU(2) p={row.p} k={row.k}", status, row.rel_error))
    return out


def embeddings_suite(precision: int = 0) -> list:
    prec = precision or default_precision()
    tol = mpmath.mpf(2) ** -(prec - 16)
    out = []
    cat_ = catalog()
    for rec in cat_:
        c_in, c_out, ok = central_charge_check(rec)
        out.append(_exact(f"central charge {rec}", ok))
    with mp.workprec(prec):
        for k, graph in ((4, "D4"), (10, "E6"), (28, "E8")):
            rec = find(cat_, su(2), k)
            e = module_global_dim(rec, prec)
            a = global_dim(category(su(2), k, prec))
            j = global_dim(category(rec.outer, 1, prec))
            out.append(_approx(f"|E|^2 = |A||J| SU(2)_{k}", abs(e**2 - a * j) / (a * j), tol))
            direct = nimrep_global_dim(lie_data(graph), prec)
            out.append(_approx(f"|E| vs {graph} nimrep SU(2)_{k}", abs(e - direct) / direct, tol))
        e = module_global_dim(find(cat_, su(2), 4), prec)
        out.append(_approx("D4 module dimension = 6", abs(e - 6) / 6, tol))
    return out


def run_suite(name: str, max_rank: int = 8, precision: int = 0) -> list:
    if name == "all":
        return run_suite("quiver", max_rank, precision) + run_suite("dims", max_rank, precision) + run_suite(
            "embeddings", max_rank, precision
        )
    if name == "quiver":
        return quiver_suite(max_rank)
    if name == "dims":
        return dims_suite(precision)
    if name == "embeddings":
        return embeddings_suite(precision)
    raise ValueError(f"unknown suite {name!r}")
