"""Quantum dimensions and global dimensions of the fusion categories A_k(G).

Two independent routes to |A_k(G)| are provided:

* ``global_dim``: the closed formula
      ell^r / (2^{rN} Delta sin^{rN}(pi/ell) sfac_G[q]^2),   ell = k + N_dual,
  which only needs the Lie superfactorial;
* ``brute_force_global_dim``: the sum of squared quantum dimensions over the
  alcove of integrable weights, each quantum dimension coming from the
  q-deformed Weyl dimension formula.

The module also holds the SU(2) S matrix, higher zeta sums, level-rank
duality, the large-level asymptote and the diagonalisation (Verlinde) checks
of the fusion matrices.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, prod

import mpmath
import numpy as np
from mpmath import mp

from .lie import LieData, LieType, Weight, lie_data
from .qnum import QContext, qnumber, superfactorial
from .quiver import fusion_sequence

DEFAULT_MAX_OBJECTS = 10**7


class AlcoveTooLarge(RuntimeError):
    pass


class OutsideAlcove(ValueError):
    pass


@dataclass(frozen=True)
class FusionCategoryId:
    lie: LieData
    level: int
    ctx: QContext

    def __post_init__(self):
        if self.ctx.classical:
            return
        if self.ctx.ell != self.level + self.lie.dual_coxeter:
            raise ValueError("ctx.ell must equal level + dual Coxeter number")

    @property
    def ell(self) -> int:
        return self.ctx.ell

    @property
    def precision(self) -> int:
        return self.ctx.precision

    def __str__(self) -> str:
        return f"A_{self.level}({self.lie.type})"


def category(t, k: int, precision: int = 0, classical: bool = False) -> FusionCategoryId:
    data = lie_data(t)
    if classical:
        ctx = QContext.classical_mode(precision)
    else:
        ctx = QContext.at_level(data.dual_coxeter, k, precision)
    return FusionCategoryId(data, k, ctx)


def pairwise_sum(values):
    """Tree summation in the given order (deterministic, small rounding growth)."""
    vals = list(values)
    if not vals:
        return mpmath.mpf(0)
    while len(vals) > 1:
        nxt = [vals[i] + vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


# -- alcove and quantum dimensions ------------------------------------------


def _marks(data: LieData) -> list:
    """<omega_b, theta> for each b, so that level(lambda) = sum_b lambda_b * mark_b."""
    theta = data.highest_root.coeffs
    return [theta[b] * data.symmetrizer[b] for b in range(data.rank)]


def alcove(cat: FusionCategoryId, max_objects: int = DEFAULT_MAX_OBJECTS) -> list:
    """Dominant integral weights of level <= k, lexicographic, zero weight first."""
    marks = _marks(cat.lie)
    r = cat.lie.rank
    k = Fraction(cat.level)
    out = []
    labels = [0] * r

    def rec(b: int, budget: Fraction) -> None:
        if b == r:
            if len(out) >= max_objects:
                raise AlcoveTooLarge(f"{cat} has more than {max_objects} objects")
            out.append(Weight(tuple(labels)))
            return
        m = 0
        while m * marks[b] <= budget:
            labels[b] = m
            rec(b + 1, budget - m * marks[b])
            m += 1
        labels[b] = 0

    rec(0, k)
    return out


def _root_pairings(data: LieData) -> list:
    """For each positive root alpha, the vector w with <lambda, alpha> = lambda . w."""
    return [
        tuple(a.coeffs[b] * data.symmetrizer[b] for b in range(data.rank))
        for a in data.positive_roots
    ]


def quantum_dim(n: Weight, cat: FusionCategoryId):
    """prod_{alpha > 0} [<n + rho, alpha>]_q / [<rho, alpha>]_q."""
    data = cat.lie
    if not n.is_dominant or (not cat.ctx.classical and data.level(n) > cat.level):
        raise OutsideAlcove(f"{n.coords} is not in the alcove of {cat}")
    return _quantum_dim(n.coords, data, cat.ctx, _root_pairings(data))


def _quantum_dim(labels, data: LieData, ctx: QContext, pairings):
    num, den = [], []
    for w in pairings:
        rho_a = sum(w, Fraction(0))
        num.append(rho_a + sum((Fraction(l) * x for l, x in zip(labels, w)), Fraction(0)))
        den.append(rho_a)
    if ctx.classical:
        return prod(num, start=Fraction(1)) / prod(den, start=Fraction(1))
    with mp.workprec(ctx.precision):
        out = mpmath.mpf(1)
        for a, b in zip(num, den):
            out *= qnumber(a, ctx) / qnumber(b, ctx)
        return out


def brute_force_global_dim(cat: FusionCategoryId, max_objects: int = DEFAULT_MAX_OBJECTS):
    return zeta(cat, -2, max_objects)


def zeta(cat: FusionCategoryId, s: int, max_objects: int = DEFAULT_MAX_OBJECTS):
    """sum over the alcove of mu(n)^(-s)."""
    data = cat.lie
    pairings = _root_pairings(data)
    with mp.workprec(cat.precision):
        terms = [
            _quantum_dim(n.coords, data, cat.ctx, pairings) ** (-s)
            for n in alcove(cat, max_objects)
        ]
        return pairwise_sum(terms)


def global_dim(cat: FusionCategoryId):
    data = cat.lie
    r, N, ell = data.rank, data.coxeter, cat.ell
    with mp.workprec(cat.precision):
        sf = superfactorial(data.type, cat.ctx)
        delta = mpmath.mpf(data.delta.numerator) / data.delta.denominator
        return mpmath.mpf(ell) ** r / (
            mpmath.mpf(2) ** (r * N) * delta * mp.sin(mp.pi / ell) ** (r * N) * sf**2
        )


def s11(cat: FusionCategoryId):
    data = cat.lie
    r, N, ell = data.rank, data.coxeter, cat.ell
    with mp.workprec(cat.precision):
        sf = superfactorial(data.type, cat.ctx)
        delta = mpmath.mpf(data.delta.numerator) / data.delta.denominator
        return (
            mpmath.mpf(2) ** (mpmath.mpf(r * N) / 2)
            * mp.sqrt(delta)
            / mpmath.mpf(ell) ** (mpmath.mpf(r) / 2)
            * mp.sin(mp.pi / ell) ** (mpmath.mpf(r * N) / 2)
            * sf
        )


def su2_s_matrix(k: int, precision: int = 0):
    """S_{mn} = sqrt(2/N) sin(pi m n / N), m, n = 1..k+1, N = k + 2."""
    prec = precision or QContext.classical_mode().precision
    N = k + 2
    with mp.workprec(prec):
        c = mp.sqrt(mpmath.mpf(2) / N)
        return mpmath.matrix(
            [[c * mp.sin(mp.pi * m * n / N) for n in range(1, N)] for m in range(1, N)]
        )


# -- zeta report, level-rank, asymptotics -------------------------------------


def su2_zeta_closed_form(p: int, k: int, precision: int = 0):
    """(k+2) 4^{-p/2} C(p, p/2) sin^{-p}(pi/(k+2)), conjectured for even p > 0, k > p/2 - 1."""
    if p <= 0 or p % 2:
        raise ValueError("closed form only proposed for even positive p")
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        return (
            mpmath.mpf(k + 2)
            * mpmath.mpf(4) ** (-(p // 2))
            * comb(p, p // 2)
            / mp.sin(mp.pi / (k + 2)) ** p
        )


@dataclass(frozen=True)
class ZetaRow:
    p: int
    k: int
    direct: object
    closed: object
    rel_error: object
    agrees: bool


def zeta_report(ps=(2, 4, 6), kmax: int = 20, precision: int = 0, threshold_bits: int = 100) -> list:
    """SU(2): direct sum of mu^p against the conjectured closed form, k = p/2 .. kmax."""
    rows = []
    for p in ps:
        for k in range(max(1, p // 2), kmax + 1):
            cat = category(LieType("A", 1), k, precision)
            with mp.workprec(cat.precision):
                direct = zeta(cat, -p)
                closed = su2_zeta_closed_form(p, k, cat.precision)
                err = abs(direct - closed) / closed
                rows.append(ZetaRow(p, k, direct, closed, err, err < mpmath.mpf(2) ** -threshold_bits))
    return rows


def level_rank_check(N: int, k: int, precision: int = 0):
    """(k |A_k(SU(N))|, N |A_N(SU(k))|, relative error)."""
    if N < 2 or k < 2:
        raise ValueError("level-rank duality needs N, k >= 2")
    a = category(LieType("A", N - 1), k, precision)
    b = category(LieType("A", k - 1), N, precision)
    with mp.workprec(a.precision):
        lhs = k * global_dim(a)
        rhs = N * global_dim(b)
        return lhs, rhs, abs(lhs - rhs) / lhs


def classical_asymptote(t, k: int, precision: int = 0):
    """k^{dim G} / ((2 pi)^{rN} Delta sfac_G^2) with the classical superfactorial."""
    data = lie_data(t)
    r, N = data.rank, data.coxeter
    sf = superfactorial(data.type, QContext.classical_mode())
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        sf2 = mpmath.mpf(sf.numerator) ** 2 / mpmath.mpf(sf.denominator) ** 2
        delta = mpmath.mpf(data.delta.numerator) / data.delta.denominator
        return mpmath.mpf(k) ** data.dim_group / ((2 * mp.pi) ** (r * N) * delta * sf2)


def classical_limit(t, k: int, precision: int = 0):
    """(asymptote, |A_k(G)| / asymptote)."""
    cat = category(t, k, precision)
    with mp.workprec(cat.precision):
        asym = classical_asymptote(t, k, cat.precision)
        return asym, global_dim(cat) / asym


def large_rank_asymptote(r: int, k: int, precision: int = 0):
    """Fixed level k, rank r -> infinity: r^{k^2} / ((2 pi)^{k(k-1)} sfac(k-1)^2)."""
    sf = prod(factorial(s) for s in range(1, k))
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        return mpmath.mpf(r) ** (k * k) / ((2 * mp.pi) ** (k * (k - 1)) * mpmath.mpf(sf) ** 2)


# -- diagonalisation of the fusion matrices ---------------------------------


def _mp_matrix(a) -> mpmath.matrix:
    return mpmath.matrix([[int(x) for x in row] for row in a])


def _max_abs(m: mpmath.matrix):
    return max(abs(m[i, j]) for i in range(m.rows) for j in range(m.cols))


def diagonalize(data: LieData, precision: int = 0):
    """(Psi, thetas): Psi rows are orthonormal eigenvectors of G with eigenvalue 2 cos(theta)."""
    if not data.type.simply_laced:
        raise ValueError("the Verlinde check needs a symmetric adjacency matrix")
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        E, Q = mp.eigsy(_mp_matrix(data.adjacency))
        thetas = [mp.acos(E[j] / 2) for j in range(data.rank)]
        return Q.T, thetas


def _rayleigh_thetas(psi: mpmath.matrix, G: mpmath.matrix) -> list:
    out = []
    for j in range(psi.rows):
        v = psi[j, :]
        lam = (v * G * v.T)[0, 0] / (v * v.T)[0, 0]
        out.append(mp.acos(lam / 2))
    return out


def reconstruction_residual(data: LieData, psi: mpmath.matrix, thetas, precision: int) -> object:
    """max_n max_ab |F_n - Psi^T diag(sin(n t)/sin t) Psi| for n = 1..N-1."""
    F = fusion_sequence(data)
    r = data.rank
    with mp.workprec(precision):
        worst = mpmath.mpf(0)
        for n in range(1, data.coxeter):
            D = mpmath.diag([mp.sin(n * t) / mp.sin(t) for t in thetas])
            R = psi.T * D * psi - _mp_matrix(F[n])
            worst = max(worst, _max_abs(R))
        ortho = _max_abs(psi * psi.T - mpmath.eye(r))
        return max(worst, ortho)


def verlinde_check(data: LieData, precision: int = 0):
    """Max residual of the spectral reconstruction of F_1..F_{N-1}."""
    prec = precision or QContext.classical_mode().precision
    psi, thetas = diagonalize(data, prec)
    return reconstruction_residual(data, psi, thetas, prec)


def su2_verlinde_check(r: int, precision: int = 0):
    """A_r with Psi = S of SU(2) at level r - 1 (rows ordered by exponent)."""
    data = lie_data(LieType("A", r))
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        S = su2_s_matrix(r - 1, prec)
        thetas = [mp.pi * j / (r + 1) for j in range(1, r + 1)]
        return reconstruction_residual(data, S, thetas, prec)


def e6_explicit_psi(precision: int = 0) -> mpmath.matrix:
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        s2, s3 = mp.sqrt(2), mp.sqrt(3)
        pp, pm = mp.sqrt((3 + s3) / 3), mp.sqrt((3 - s3) / 3)
        rows = [
            [pm, pp, s2 * pp, pp, pm, s2 * pm],
            [s2, s2, 0, -s2, -s2, 0],
            [pp, pm, -s2 * pm, pm, pp, -s2 * pp],
            [pp, -pm, -s2 * pm, -pm, pp, s2 * pp],
            [s2, -s2, 0, s2, -s2, 0],
            [pm, -pp, s2 * pp, -pp, pm, -s2 * pm],
        ]
        return mpmath.matrix(rows) / (2 * s2)


def e6_explicit_check(precision: int = 0):
    """Residual of the F_n reconstruction with the closed-form E6 eigenvector matrix."""
    data = lie_data("E6")
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        psi = e6_explicit_psi(prec)
        thetas = _rayleigh_thetas(psi, _mp_matrix(data.adjacency))
        return reconstruction_residual(data, psi, thetas, prec)


def trigonometric_product(data: LieData, psi=None, thetas=None, precision: int = 0):
    """prod_{n=1..N} prod_b sum_a (Psi^T diag(sin((2n-1)t/2) / sin(t/2)) Psi)_{ab}.

    The diagonal entries are the eigenvalues of F_n + F_{n-1}, so the product
    reproduces the fusion-matrix expression of the squared Weyl denominator.
    """
    prec = precision or QContext.classical_mode().precision
    if psi is None:
        psi, thetas = diagonalize(data, prec)
    r = data.rank
    with mp.workprec(prec):
        out = mpmath.mpf(1)
        for n in range(1, data.coxeter + 1):
            D = mpmath.diag([mp.sin((2 * n - 1) * t / 2) / mp.sin(t / 2) for t in thetas])
            M = psi.T * D * psi
            for b in range(r):
                out *= sum(M[a, b] for a in range(r))
        return out


def e6_trigonometric_product(precision: int = 0):
    prec = precision or QContext.classical_mode().precision
    data = lie_data("E6")
    with mp.workprec(prec):
        psi = e6_explicit_psi(prec)
        thetas = _rayleigh_thetas(psi, _mp_matrix(data.adjacency))
        return trigonometric_product(data, psi, thetas, prec)


# -- module categories from nimrep graphs -------------------------------------


def nimrep_dimensions(data: LieData, precision: int = 0) -> list:
    """Perron-Frobenius vector of the diagram, normalised to 1 at vertex 1."""
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        E, Q = mp.eigsy(_mp_matrix(data.adjacency))
        j = max(range(data.rank), key=lambda i: E[i])
        v = [Q[a, j] for a in range(data.rank)]
        return [x / v[0] for x in v]


def nimrep_global_dim(data: LieData, precision: int = 0):
    prec = precision or QContext.classical_mode().precision
    with mp.workprec(prec):
        return pairwise_sum([d**2 for d in nimrep_dimensions(data, prec)])
