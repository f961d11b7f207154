"""Chebyshev fusion matrices and periodic quiver tables of the Weyl vector.

The adjacency matrix G = 2 - L of a Dynkin diagram generates the sequence

    F_0 = 0,  F_1 = 1,  F_n = F_{n-1} G - F_{n-2},

periodic of period 2N.  Row a of F_n (or F_{n-1} when vertex a is odd)
gives the scalar products of the fundamental weight omega_a with the coroots
sitting at row n of the checkerboard table; scaling column b by the
symmetrizer delta_b turns coroots into roots.

Positions are 1-based (n, b) with 1 <= n <= 2N (or N for half tables).  A
position carries a value iff n + parity(b) is odd, parity being the
bipartite grading with vertex 1 even.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod

import numpy as np

from .lie import LieData, Root, Weight, bipartite_coxeter, inner_product
from .qnum import QContext, qproduct


class NotARoot(ValueError):
    pass


@dataclass(frozen=True)
class FusionSequence:
    matrices: tuple
    period: int

    def __getitem__(self, n: int) -> np.ndarray:
        return self.matrices[n % self.period]

    def __len__(self) -> int:
        return self.period


def fusion_sequence(data: LieData) -> FusionSequence:
    return _fusion_sequence(data.type)


@lru_cache(maxsize=None)
def _fusion_sequence(t) -> FusionSequence:
    from .lie import lie_data

    data = lie_data(t)
    r, N = data.rank, data.coxeter
    G = np.array(data.adjacency, dtype=np.int64)
    mats = [np.zeros((r, r), dtype=np.int64), np.eye(r, dtype=np.int64)]
    for _ in range(2, 2 * N):
        mats.append(mats[-1] @ G - mats[-2])
    for m in mats:
        m.setflags(write=False)
    return FusionSequence(tuple(mats), 2 * N)


def is_position(data: LieData, n: int, b: int) -> bool:
    return (n + data.grading[b - 1]) % 2 == 1


def positions(data: LieData, half: bool = False) -> list:
    nrows = data.coxeter if half else 2 * data.coxeter
    return [
        (n, b)
        for n in range(1, nrows + 1)
        for b in range(1, data.rank + 1)
        if is_position(data, n, b)
    ]


def nakayama_permutation(data: LieData) -> tuple:
    """The involution sigma of the vertices with F_{N-1} as permutation matrix."""
    P = fusion_sequence(data)[data.coxeter - 1]
    sigma = []
    for a in range(data.rank):
        (cols,) = np.nonzero(P[a])
        if len(cols) != 1 or P[a, cols[0]] != 1:
            raise AssertionError("F_{N-1} is not a permutation matrix")
        sigma.append(int(cols[0]) + 1)
    return tuple(sigma)


def intertwiner(data: LieData, a: int) -> np.ndarray:
    """Rows n = 1..N-1 of (F_n)_{a, .}: a non-negative (N-1) x r integer matrix."""
    F = fusion_sequence(data)
    return np.array([F[n][a - 1] for n in range(1, data.coxeter)])


@lru_cache(maxsize=None)
def _essential_stack(t) -> np.ndarray:
    """E[a, n-1, b-1] = (e_a)_{n b} for n = 1..2N (zeros off the checkerboard)."""
    from .lie import lie_data

    data = lie_data(t)
    F = fusion_sequence(data)
    r, N = data.rank, data.coxeter
    E = np.zeros((r, 2 * N, r), dtype=np.int64)
    for a in range(r):
        shift = data.grading[a]
        for n in range(1, 2 * N + 1):
            E[a, n - 1] = F[n - shift][a]
    E.setflags(write=False)
    return E


@dataclass(frozen=True)
class QuiverTable:
    """A rational function on the checkerboard; ``None`` marks empty cells."""

    lie: object
    weight: tuple
    half: bool
    scaled: bool
    rows: tuple

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __getitem__(self, pos):
        n, b = pos
        if not self.half:
            n = (n - 1) % self.nrows + 1
        return self.rows[n - 1][b - 1]

    def items(self):
        for n, row in enumerate(self.rows, start=1):
            for b, v in enumerate(row, start=1):
                if v is not None:
                    yield (n, b), v

    def values(self) -> list:
        return [v for _, v in self.items()]

    def intertwiner_view(self) -> tuple:
        """Rows 1..N-1 (the non-trivial essential rows)."""
        N = self.nrows if self.half else self.nrows // 2
        return self.rows[: N - 1]


def _weight_coords(weight, r: int) -> tuple:
    coords = weight.coords if isinstance(weight, Weight) else tuple(weight)
    if len(coords) != r:
        raise ValueError(f"weight has {len(coords)} labels, rank is {r}")
    return tuple(Fraction(c) for c in coords)


def _table(weight, data: LieData, half: bool, scaled: bool) -> QuiverTable:
    lam = _weight_coords(weight, data.rank)
    E = _essential_stack(data.type)
    nrows = data.coxeter if half else 2 * data.coxeter
    rows = []
    for n in range(1, nrows + 1):
        row = []
        for b in range(1, data.rank + 1):
            if not is_position(data, n, b):
                row.append(None)
                continue
            v = sum((lam[a] * int(E[a, n - 1, b - 1]) for a in range(data.rank)), Fraction(0))
            if scaled:
                v *= data.symmetrizer[b - 1]
            row.append(v)
        rows.append(tuple(row))
    return QuiverTable(data.type, lam, half, scaled, tuple(rows))


def essential_table(weight, data: LieData, half: bool = False) -> QuiverTable:
    """e(omega): scalar products of omega with the coroots placed on the table."""
    return _table(weight, data, half, scaled=False)


def scaled_table(weight, data: LieData, half: bool = False) -> QuiverTable:
    """f(omega): column b of e(omega) multiplied by delta_b (scalar products with roots)."""
    return _table(weight, data, half, scaled=True)


def rho_table(data: LieData, scaled: bool = True) -> QuiverTable:
    return _table(data.weyl_vector, data, half=True, scaled=scaled)


# -- root placement ---------------------------------------------------------


def _integer_table(data: LieData, lam) -> np.ndarray:
    E = _essential_stack(data.type)
    return np.tensordot(np.array(lam, dtype=np.int64), E, axes=1)


def locate_root(alpha: Root, data: LieData) -> tuple:
    """Position (n, b) of a root: the cell where e(alpha) equals +2.

    For non simply-laced types several cells may read +2; the one holding
    alpha itself is singled out by requiring f(alpha) = <alpha, alpha> there.
    """
    lam = data.root_as_weight(alpha).coords
    if any(c.denominator != 1 for c in lam):
        raise NotARoot(f"{alpha.coeffs} is not in the root lattice")
    tab = _integer_table(data, [int(c) for c in lam])
    cells = [(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(tab == 2))]
    cells = [p for p in cells if is_position(data, *p)]
    if not data.type.simply_laced:
        norm = inner_product(alpha, alpha, data)
        cells = [p for p in cells if 2 * data.symmetrizer[p[1] - 1] == norm]
    if len(cells) != 1:
        raise NotARoot(f"{alpha.coeffs}: {len(cells)} candidate positions")
    return cells[0]


def root_placement(data: LieData) -> dict:
    """Map every position of the full table to the root sitting there."""
    return dict(_root_placement(data.type))


@lru_cache(maxsize=None)
def _root_placement(t) -> tuple:
    from .lie import lie_data

    data = lie_data(t)
    out = {}
    for alpha in data.positive_roots:
        for root in (alpha, -alpha):
            pos = locate_root(root, data)
            if pos in out:
                raise AssertionError(f"two roots at {pos}")
            out[pos] = root
    return tuple(sorted(out.items()))


def root_at(n: int, b: int, data: LieData) -> Root:
    N2 = 2 * data.coxeter
    key = ((n - 1) % N2 + 1, b)
    for pos, root in _root_placement(data.type):
        if pos == key:
            return root
    raise KeyError(f"no root at {(n, b)}")


def coxeter_consistency(data: LieData) -> bool:
    """Two rows down the table = one application of the bipartite Coxeter element."""
    c = bipartite_coxeter(data)
    placement = root_placement(data)
    N2 = 2 * data.coxeter
    for (n, b), root in placement.items():
        below = placement[((n + 1) % N2 + 1, b)]
        if tuple(int(x) for x in c @ np.array(root.coeffs)) != below.coeffs:
            return False
    return True


# -- Weyl denominators ------------------------------------------------------


def weyl_denominator(data: LieData, ctx: QContext):
    """Product of the (q-deformed) entries of f+(rho)."""
    return qproduct(rho_table(data).values(), ctx)


def direct_weyl_denominator(data: LieData, ctx: QContext):
    """Product over positive roots of <rho, alpha>_q; no fusion matrices involved."""
    rho = data.weyl_vector
    return qproduct([inner_product(rho, a, data) for a in data.positive_roots], ctx)


def fusion_denominator_squared(data: LieData) -> Fraction:
    """varpi^2 * prod_{n=1..N} prod_b sum_a (F_n + F_{n-1})_{a b}."""
    F = fusion_sequence(data)
    total = 1
    for n in range(1, data.coxeter + 1):
        sums = (F[n] + F[n - 1]).sum(axis=0)
        total *= prod(int(s) for s in sums)
    return data.varpi ** 2 * total


def local_chebyshev_check(table: QuiverTable, data: LieData) -> bool:
    """Vertical neighbours of each empty cell sum to its (G-weighted) horizontal ones."""
    G = data.adjacency
    r = data.rank
    nrows = table.nrows
    for m in range(1, nrows + 1):  # m is the empty cell's row
        if table.half and not (2 <= m <= nrows - 1):
            continue
        for b in range(1, r + 1):
            if is_position(data, m, b):
                continue
            up = table.rows[(m - 2) % nrows][b - 1]
            down = table.rows[m % nrows][b - 1]
            side = sum(
                (G[c - 1][b - 1] * table.rows[m - 1][c - 1] for c in range(1, r + 1) if G[c - 1][b - 1]),
                Fraction(0),
            )
            if table.scaled:
                # undo the column scaling: the recurrence lives on e(omega)
                d = data.symmetrizer
                side = sum(
                    (G[c - 1][b - 1] * table.rows[m - 1][c - 1] / d[c - 1] for c in range(1, r + 1) if G[c - 1][b - 1]),
                    Fraction(0),
                )
                up, down = up / d[b - 1], down / d[b - 1]
            if up + down != side:
                return False
    return True


# -- path matrix ------------------------------------------------------------


def path_matrix(data: LieData) -> np.ndarray:
    """X = F_1 + ... + F_r."""
    if not data.type.simply_laced:
        raise ValueError("the path matrix is defined for simply-laced diagrams only")
    F = fusion_sequence(data)
    return sum(F[n] for n in range(1, data.rank + 1))


def cyclic_row_shift(X: np.ndarray) -> np.ndarray:
    """Row m of the result is row m-1 of X; row 1 is row r."""
    return np.roll(X, 1, axis=0)


def path_matrix_product(data: LieData) -> int:
    if data.type.family != "A":
        raise ValueError("the product identity is stated for A_r only")
    X = path_matrix(data)
    return prod(int(v) for v in (X + cyclic_row_shift(X)).flat)


def height_vector(data: LieData) -> tuple:
    """Coefficients of 2 rho = sum of positive roots on the simple roots."""
    r = data.rank
    return tuple(sum(a.coeffs[i] for a in data.positive_roots) for i in range(r))


def fusion_sequence_invariants(data: LieData) -> dict:
    """The structural identities of the Chebyshev sequence, each as a bool."""
    F = fusion_sequence(data)
    N = data.coxeter
    G = np.array(data.adjacency, dtype=np.int64)
    nxt = F[2 * N - 1] @ G - F[2 * N - 2]  # F_{2N} from the recurrence
    nxt2 = nxt @ G - F[2 * N - 1]  # F_{2N+1}
    return {
        "F0_zero": not F[0].any(),
        "FN_zero": not F[N].any(),
        "antisymmetric": all((F[N + m] == -F[N - m]).all() for m in range(N + 1)),
        "period_2N": (nxt == F[0]).all() and (nxt2 == F[1]).all(),
        "non_negative": all((F[n] >= 0).all() for n in range(1, N)),
        "F_{N-1}_permutation": _is_permutation(F[N - 1]),
    }


def _is_permutation(P: np.ndarray) -> bool:
    return bool(((P == 0) | (P == 1)).all() and (P.sum(axis=0) == 1).all() and (P.sum(axis=1) == 1).all())
