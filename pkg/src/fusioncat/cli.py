"""Command-line interface: every command prints one JSON envelope

    {"command", "inputs", "precision_bits", "results", "checks"}

Exact rationals are written {"exact": "p/q"}; real numbers are written
{"approx": {"value": <precision/4 significant digits>, "precision_bits": p}}.
Exit codes: 0 success, 1 failed check, 2 usage error, 3 alcove too large.
"""
from __future__ import annotations

import json
import sys
from fractions import Fraction

import click
import mpmath
from mpmath import mp

from . import checks as checks_mod
from .embeddings import (
    catalog,
    central_charge_check,
    load_catalog,
    module_global_dim,
    record_to_dict,
)
from .export import fraction_str, root_quiver_rows, root_quiver_to_dot, table_to_csv, table_to_dict
from .lie import InvalidLieType, LieType, Weight, lie_data
from .moddim import (
    DEFAULT_MAX_OBJECTS,
    AlcoveTooLarge,
    brute_force_global_dim,
    category,
    classical_limit,
    global_dim,
    large_rank_asymptote,
    level_rank_check,
    s11,
    su2_s_matrix,
    zeta,
    zeta_report,
)
from .qnum import QContext, default_precision, superfactorial, superfactorial_arguments
from .quiver import direct_weyl_denominator, essential_table, scaled_table, weyl_denominator

EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 1, 2, 3


class Output:
    def __init__(self, command: str, inputs: dict, precision: int):
        self.command = command
        self.inputs = inputs
        self.precision = precision
        self.results: dict = {}
        self.checks: list = []

    def num(self, x):
        if isinstance(x, (int, Fraction)):
            return {"exact": fraction_str(x)}
        with mp.workprec(self.precision):
            return {
                "approx": {
                    "value": mpmath.nstr(x, max(1, self.precision // 4)),
                    "precision_bits": self.precision,
                }
            }

    def check(self, name: str, status: str, residual=None) -> None:
        self.checks.append({"name": name, "status": status, "residual": None if residual is None else self.num(residual)})

    def emit(self) -> int:
        env = {
            "command": self.command,
            "inputs": self.inputs,
            "precision_bits": self.precision,
            "results": self.results,
            "checks": self.checks,
        }
        click.echo(json.dumps(env, indent=2))
        return EXIT_FAIL if any(c["status"] == "fail" for c in self.checks) else 0


def _finish(out: Output) -> None:
    code = out.emit()
    if code:
        sys.exit(code)


def resolve_type(family: str, rank: int | None) -> LieType:
    text = family.strip().upper()
    try:
        if rank is not None and text in ("A", "B", "C", "D"):
            return LieType(text, rank)
        return LieType.parse(text)
    except (InvalidLieType, ValueError) as exc:
        raise click.BadParameter(str(exc), param_hint="--type/--rank")


def parse_weight(text: str, data) -> Weight:
    if text.strip().lower() == "rho":
        return data.weyl_vector
    try:
        coords = tuple(Fraction(c) for c in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise click.BadParameter(f"cannot parse weight {text!r}", param_hint="--weight")
    if len(coords) != data.rank:
        raise click.BadParameter(f"weight needs {data.rank} labels, got {len(coords)}", param_hint="--weight")
    return Weight(coords)


def _prec(prec: int | None) -> int:
    return prec or default_precision()


type_opt = click.option("--type", "family", required=True, help="Family letter (A-D) or E6, E7, E8, F4, G2; also accepts e.g. A3.")
rank_opt = click.option("--rank", type=int, default=None, help="Rank for the classical families.")
prec_opt = click.option("--prec", type=click.IntRange(min=24), default=None, help="Significand bits (default 128 or $FUSIONCAT_PREC).")


@click.group()
def main():
    """Quantum Weyl denominators, quiver tables and global dimensions."""


@main.command("global-dim")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), required=True)
@prec_opt
@click.option("--brute-force", is_flag=True, help="Also sum squared quantum dimensions over the alcove.")
@click.option("--max-objects", type=int, default=DEFAULT_MAX_OBJECTS, show_default=True)
def global_dim_cmd(family, rank, level, prec, brute_force, max_objects):
    t = resolve_type(family, rank)
    p = _prec(prec)
    out = Output("global-dim", {"type": str(t), "level": level, "brute_force": brute_force}, p)
    cat = category(t, level, p)
    with mp.workprec(p):
        g = global_dim(cat)
        out.results["global_dim"] = out.num(g)
        out.results["s11"] = out.num(s11(cat))
        if brute_force:
            try:
                bf = brute_force_global_dim(cat, max_objects)
            except AlcoveTooLarge as exc:
                click.echo(str(exc), err=True)
                sys.exit(EXIT_GUARD)
            res = abs(bf - g) / g
            out.results["brute_force"] = out.num(bf)
            out.check("brute force vs closed formula", "pass" if res < cat.ctx.tolerance() else "fail", res)
    _finish(out)


@main.command("quiver")
@type_opt
@rank_opt
@click.option("--weight", default="rho", show_default=True, help="'rho' or comma-separated Dynkin labels.")
@click.option("--half", is_flag=True, help="Only rows 1..N (positive roots).")
@click.option("--scaled", is_flag=True, help="Scale columns by the symmetrizer (pair with roots, not coroots).")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "dot"]), default="json", show_default=True)
@click.option("--roots", is_flag=True, help="Emit the root placement instead of a weight table.")
def quiver_cmd(family, rank, weight, half, scaled, fmt, roots):
    t = resolve_type(family, rank)
    data = lie_data(t)
    if roots or fmt == "dot":
        if fmt == "dot":
            click.echo(root_quiver_to_dot(data), nl=False)
            return
        rows = root_quiver_rows(data)
        if fmt == "csv":
            click.echo("n,b," + ",".join(f"c{i}" for i in range(1, data.rank + 1)))
            for n, b, c in rows:
                click.echo(f"{n},{b}," + ",".join(str(x) for x in c))
            return
        out = Output("quiver", {"type": str(t), "roots": True}, _prec(None))
        out.results["roots"] = [[n, b, list(c)] for n, b, c in rows]
        _finish(out)
        return
    w = parse_weight(weight, data)
    table = (scaled_table if scaled else essential_table)(w, data, half=half)
    if fmt == "csv":
        click.echo(table_to_csv(table), nl=False)
        return
    out = Output("quiver", {"type": str(t), "weight": weight, "half": half, "scaled": scaled}, _prec(None))
    out.results["table"] = table_to_dict(table)
    _finish(out)


@main.command("verify")
@click.option("--suite", type=click.Choice(["all", *checks_mod.SUITES]), default="all", show_default=True)
@click.option("--max-rank", type=click.IntRange(min=1), default=8, show_default=True)
@prec_opt
def verify_cmd(suite, max_rank, prec):
    p = _prec(prec)
    out = Output("verify", {"suite": suite, "max_rank": max_rank}, p)
    results = checks_mod.run_suite(suite, max_rank, p)
    for c in results:
        out.check(c.name, c.status, c.residual)
    out.results["summary"] = {
        s: sum(1 for c in results if c.status == s) for s in ("pass", "fail", "report")
    }
    _finish(out)


@main.command("denominator")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), default=None, help="Quantum denominator at this level; classical if omitted.")
@prec_opt
def denominator_cmd(family, rank, level, prec):
    t = resolve_type(family, rank)
    data = lie_data(t)
    p = _prec(prec)
    ctx = QContext.classical_mode(p) if level is None else QContext.at_level(data.dual_coxeter, level, p)
    out = Output("denominator", {"type": str(t), "level": level}, p)
    with mp.workprec(p):
        a = weyl_denominator(data, ctx)
        b = direct_weyl_denominator(data, ctx)
        out.results["from_quiver"] = out.num(a)
        out.results["from_roots"] = out.num(b)
        if ctx.classical:
            out.check("quiver = roots", "pass" if a == b else "fail", 0 if a == b else None)
        else:
            res = abs(a - b) / abs(b)
            out.check("quiver = roots", "pass" if res < ctx.tolerance() else "fail", res)
    _finish(out)


@main.command("superfactorial")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), default=None)
@prec_opt
def superfactorial_cmd(family, rank, level, prec):
    t = resolve_type(family, rank)
    data = lie_data(t)
    p = _prec(prec)
    ctx = QContext.classical_mode(p) if level is None else QContext.at_level(data.dual_coxeter, level, p)
    out = Output("superfactorial", {"type": str(t), "level": level}, p)
    with mp.workprec(p):
        out.results["arguments"] = [fraction_str(x) for x in superfactorial_arguments(t)]
        out.results["value"] = out.num(superfactorial(t, ctx))
    _finish(out)


@main.command("zeta")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), default=None)
@click.option("--s", "s", type=int, default=-2, show_default=True, help="Exponent in sum of mu^(-s).")
@click.option("--report", is_flag=True, help="SU(2) closed-form comparison for p in {2,4,6}, k <= 20.")
@prec_opt
@click.option("--max-objects", type=int, default=DEFAULT_MAX_OBJECTS, show_default=True)
def zeta_cmd(family, rank, level, s, report, prec, max_objects):
    t = resolve_type(family, rank)
    p = _prec(prec)
    out = Output("zeta", {"type": str(t), "level": level, "s": s, "report": report}, p)
    if report:
        if t != LieType("A", 1):
            raise click.BadParameter("the report is only available for SU(2)", param_hint="--type")
        with mp.workprec(p):
            rows = zeta_report(precision=p, threshold_bits=p - 28)
            out.results["rows"] = [
                {"p": r.p, "k": r.k, "direct": out.num(r.direct), "closed_form": out.num(r.closed)} for r in rows
            ]
            for r in rows:
                out.check(f"p={r.p} k={r.k}", "pass" if r.agrees else "report", r.rel_error)
        _finish(out)
        return
    if level is None:
        raise click.BadParameter("--level is required unless --report is given", param_hint="--level")
    try:
        with mp.workprec(p):
            out.results["zeta"] = out.num(zeta(category(t, level, p), s, max_objects))
    except AlcoveTooLarge as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_GUARD)
    _finish(out)


@main.command("level-rank")
@click.option("--N", "n", type=click.IntRange(min=2), default=None)
@click.option("--k", "k", type=click.IntRange(min=2), default=None)
@click.option("--max", "nmax", type=click.IntRange(min=2), default=6, show_default=True, help="Sweep bound when N, k are omitted.")
@prec_opt
def level_rank_cmd(n, k, nmax, prec):
    p = _prec(prec)
    out = Output("level-rank", {"N": n, "k": k, "max": nmax}, p)
    pairs = [(n, k)] if n and k else [(a, b) for a in range(2, nmax + 1) for b in range(2, nmax + 1)]
    tol = QContext.classical_mode(p).tolerance()
    rows = []
    with mp.workprec(p):
        for a, b in pairs:
            lhs, rhs, err = level_rank_check(a, b, p)
            rows.append({"N": a, "k": b, "lhs": out.num(lhs), "rhs": out.num(rhs)})
            out.check(f"N={a} k={b}", "pass" if err < tol else "fail", err)
    out.results["rows"] = rows
    _finish(out)


@main.command("asymptote")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), required=True)
@click.option("--large-rank", is_flag=True, help="Also give the fixed-level, large-rank asymptote (type A only).")
@prec_opt
def asymptote_cmd(family, rank, level, large_rank, prec):
    t = resolve_type(family, rank)
    p = _prec(prec)
    out = Output("asymptote", {"type": str(t), "level": level, "large_rank": large_rank}, p)
    with mp.workprec(p):
        asym, ratio = classical_limit(t, level, p)
        out.results["asymptote"] = out.num(asym)
        out.results["ratio"] = out.num(ratio)
        if large_rank:
            if t.family != "A":
                raise click.BadParameter("the large-rank asymptote is for type A", param_hint="--type")
            out.results["fixed_level_large_rank"] = out.num(large_rank_asymptote(t.rank, level, p))
    _finish(out)


@main.group("embeddings")
def embeddings_group():
    """Conformal embeddings catalog."""


@embeddings_group.command("list")
@click.option("--catalog", "path", type=click.Path(exists=True, dir_okay=False), default=None, help="JSON catalog to use instead of the built-in one.")
@click.option("--rank-cap", type=click.IntRange(min=1), default=8, show_default=True)
def embeddings_list(path, rank_cap):
    recs = load_catalog(path) if path else catalog(rank_cap)
    out = Output("embeddings list", {"catalog": path, "rank_cap": rank_cap}, _prec(None))
    rows = []
    for rec in recs:
        c_in, c_out, ok = central_charge_check(rec)
        d = record_to_dict(rec)
        d["central_charge"] = {"inner": out.num(c_in), "outer": out.num(c_out)}
        rows.append(d)
        out.check(f"central charge {rec}", "pass" if ok else "fail", 0 if ok else None)
    out.results["embeddings"] = rows
    _finish(out)


@embeddings_group.command("dim")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), required=True)
@click.option("--outer", default=None, help="Outer group, e.g. B2 or G2 (needed when several embeddings share G, k).")
@click.option("--catalog", "path", type=click.Path(exists=True, dir_okay=False), default=None)
@prec_opt
def embeddings_dim(family, rank, level, outer, path, prec):
    t = resolve_type(family, rank)
    outer_t = resolve_type(outer, None) if outer else None
    recs = load_catalog(path) if path else catalog(max(8, t.rank))
    matches = [r for r in recs if r.inner == ((t, level),) and (outer_t is None or r.outer == outer_t)]
    if not matches:
        raise click.BadParameter(f"no embedding of {t} at level {level} in the catalog", param_hint="--type/--level")
    p = _prec(prec)
    out = Output("embeddings dim", {"type": str(t), "level": level, "outer": outer}, p)
    rows = []
    with mp.workprec(p):
        for rec in matches:
            c_in, c_out, ok = central_charge_check(rec)
            out.check(f"central charge {rec}", "pass" if ok else "fail", 0 if ok else None)
            rows.append({"embedding": str(rec), "outer": str(rec.outer), "module_global_dim": out.num(module_global_dim(rec, p))})
    out.results["modules"] = rows
    _finish(out)


@main.command("s-matrix")
@type_opt
@rank_opt
@click.option("--level", type=click.IntRange(min=1), required=True)
@prec_opt
def s_matrix_cmd(family, rank, level, prec):
    t = resolve_type(family, rank)
    if t != LieType("A", 1):
        raise click.BadParameter("only the SU(2) S matrix is available", param_hint="--type/--rank")
    p = _prec(prec)
    out = Output("s-matrix", {"type": str(t), "level": level}, p)
    with mp.workprec(p):
        S = su2_s_matrix(level, p)
        out.results["S"] = [[out.num(S[i, j]) for j in range(S.cols)] for i in range(S.rows)]
        res = max(abs((S * S)[i, j] - (1 if i == j else 0)) for i in range(S.rows) for j in range(S.cols))
        out.check("S^2 = 1", "pass" if res < QContext.classical_mode(p).tolerance() else "fail", res)
        cat = category(t, level, p)
        res11 = abs(S[0, 0] - s11(cat))
        out.check("S_11 closed formula", "pass" if res11 < cat.ctx.tolerance() else "fail", res11)
    _finish(out)


if __name__ == "__main__":
    main()
