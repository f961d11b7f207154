"""Classical Lie-theoretic data for the simple Lie algebras.

Node orderings are fixed once and for all (they match the printed quiver
tables shipped in ``fusioncat/data/golden``):

* A_r, B_r, C_r, F4: a chain 1-2-...-r.  B_r and F4 draw short roots to the
  right, C_r draws them to the left.
* D_r: chain 1-...-(r-1), node r attached to node r-2.
* E6: chain 1-...-5, node 6 attached to 3.
* E7: chain 1-...-6, node 7 attached to 4.
* E8: chain 1-...-7, node 8 attached to 5.
* G2: node 1 long, node 2 short.

Everything here is exact (ints and Fractions).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import cos, pi, prod

import numpy as np
import sympy

FAMILIES = ("A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2")
_FIXED_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


class InvalidLieType(ValueError):
    pass


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidLieType(f"unknown family {self.family!r}")
        if self.family in _FIXED_RANK:
            fixed = _FIXED_RANK[self.family]
            if self.rank == 0:
                object.__setattr__(self, "rank", fixed)
            elif self.rank != fixed:
                raise InvalidLieType(f"{self.family} has rank {fixed}, got {self.rank}")
        elif not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise InvalidLieType(
                f"family {self.family} needs rank >= {_MIN_RANK[self.family]}, got {self.rank}"
            )

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Parse names like ``"A3"``, ``"E6"``, ``"B 2"``."""
        text = text.strip().upper().replace(" ", "")
        if text in _FIXED_RANK:
            return cls(text)
        if text[:2] in _FIXED_RANK:
            return cls(text[:2], int(text[2:]) if text[2:] else 0)
        if not text or text[0] not in _MIN_RANK or not text[1:].isdigit():
            raise InvalidLieType(f"cannot parse Lie type {text!r}")
        return cls(text[0], int(text[1:]))

    @property
    def simply_laced(self) -> bool:
        return self.family in ("A", "D", "E6", "E7", "E8")

    def __str__(self) -> str:
        if self.family in _FIXED_RANK:
            return self.family
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class Weight:
    """A weight on the fundamental-weight basis (Dynkin labels)."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def scale(self, s) -> "Weight":
        return Weight(tuple(Fraction(s) * c for c in self.coords))

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 and c.denominator == 1 for c in self.coords)


@dataclass(frozen=True)
class Root:
    """A root on the simple-root basis."""

    coeffs: tuple
    is_short: bool = False

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def __neg__(self) -> "Root":
        return Root(tuple(-c for c in self.coeffs), self.is_short)


def exponents_of(t: LieType) -> tuple:
    r = t.rank
    if t.family == "A":
        return tuple(range(1, r + 1))
    if t.family in ("B", "C"):
        return tuple(range(1, 2 * r, 2))
    if t.family == "D":
        return tuple(sorted(list(range(1, 2 * r - 2, 2)) + [r - 1]))
    return {
        "E6": (1, 4, 5, 7, 8, 11),
        "E7": (1, 5, 7, 9, 11, 13, 17),
        "E8": (1, 7, 11, 13, 17, 19, 23, 29),
        "F4": (1, 5, 7, 11),
        "G2": (1, 5),
    }[t.family]


def coxeter_number(t: LieType) -> int:
    """Largest exponent + 1 (no root system needed)."""
    return max(exponents_of(t)) + 1


def dual_coxeter_number(t: LieType) -> int:
    r = t.rank
    closed = {"A": r + 1, "B": 2 * r - 1, "C": r + 1, "D": 2 * r - 2}
    if t.family in closed:
        return closed[t.family]
    return {"E6": 12, "E7": 18, "E8": 30, "F4": 9, "G2": 4}[t.family]


def group_dimension(t: LieType) -> int:
    """r + rN: number of roots plus rank."""
    return t.rank * (1 + coxeter_number(t))


def _diagram(t: LieType):
    """Edges (0-based) and symmetrizer values for the chosen ordering."""
    r = t.rank
    chain = [(i, i + 1) for i in range(r - 1)]
    half = Fraction(1, 2)
    delta = [Fraction(1)] * r
    if t.family == "A":
        edges = chain
    elif t.family == "B":
        edges = chain
        delta[-1] = half
    elif t.family == "C":
        edges = chain
        delta = [half] * (r - 1) + [Fraction(1)]
    elif t.family == "D":
        edges = chain[:-1] + [(r - 3, r - 1)]
    elif t.family == "E6":
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]
    elif t.family == "E7":
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
    elif t.family == "E8":
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)]
    elif t.family == "F4":
        edges = chain
        delta = [Fraction(1), Fraction(1), half, half]
    else:  # G2
        edges = chain
        delta = [Fraction(1), Fraction(1, 3)]
    return edges, delta


def _cartan(r: int, edges, delta) -> tuple:
    # Gram matrix of simple roots: <a_i,a_i> = 2 delta_i, <a_i,a_j> = -max(delta) on an edge
    gram = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        gram[i][i] = 2 * delta[i]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -max(delta[i], delta[j])
    cartan = []
    for i in range(r):
        row = []
        for j in range(r):
            v = 2 * gram[i][j] / gram[j][j]
            assert v.denominator == 1
            row.append(int(v))
        cartan.append(tuple(row))
    return tuple(cartan), tuple(tuple(row) for row in gram)


def _grading(adj) -> tuple:
    r = len(adj)
    parity = [None] * r
    parity[0] = 0
    todo = deque([0])
    while todo:
        a = todo.popleft()
        for b in range(r):
            if adj[a][b] and parity[b] is None:
                parity[b] = 1 - parity[a]
                todo.append(b)
    return tuple(parity)


def _positive_roots(cartan, delta) -> list:
    """Root-string closure from the simple roots, by increasing height."""
    r = len(cartan)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    known = set(simple)
    layer = list(simple)
    roots = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^vee>
                pairing = sum(beta[j] * cartan[j][i] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in known:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        layer = nxt
        roots.extend(nxt)
    roots.sort(key=lambda c: (sum(c), tuple(-x for x in c)))
    out = []
    for c in roots:
        norm = sum(c[i] * c[j] * cartan[i][j] * delta[j] for i in range(r) for j in range(r))
        out.append(Root(c, norm < 2))
    return out


@dataclass(frozen=True)
class LieData:
    type: LieType
    cartan: tuple
    adjacency: tuple
    symmetrizer: tuple
    gram: tuple
    quad_form: tuple
    delta: Fraction
    coxeter: int
    dual_coxeter: int
    exponents: tuple
    varpi: Fraction
    dim_group: int
    grading: tuple
    positive_roots: tuple = field(repr=False)
    highest_root: Root = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def weyl_vector(self) -> Weight:
        return Weight((1,) * self.rank)

    def root_as_weight(self, alpha: Root) -> Weight:
        r = self.rank
        return Weight(tuple(sum(alpha.coeffs[j] * self.cartan[j][i] for j in range(r)) for i in range(r)))

    def level(self, weight: Weight) -> Fraction:
        return inner_product(weight, self.highest_root, self)


def build_lie_data(t: LieType) -> LieData:
    r = t.rank
    edges, delta = _diagram(t)
    cartan, gram = _cartan(r, edges, delta)
    adjacency = tuple(tuple(2 * (i == j) - cartan[i][j] for j in range(r)) for i in range(r))

    L = sympy.Matrix(cartan)
    K = L.inv() * sympy.diag(*[sympy.Rational(d.numerator, d.denominator) for d in delta])
    quad_form = tuple(
        tuple(Fraction(int(K[i, j].p), int(K[i, j].q)) for j in range(r)) for i in range(r)
    )
    det = K.det()
    det = Fraction(int(det.p), int(det.q))

    roots = _positive_roots(cartan, delta)
    theta = roots[-1]
    coxeter = theta.height + 1
    # long roots have norm 2, so <rho, theta^vee> = <rho, theta>
    dual_coxeter = 1 + sum(c * d for c, d in zip(theta.coeffs, delta))
    assert dual_coxeter.denominator == 1
    exps = exponents_of(t)
    if 2 * len(roots) != r * coxeter or sum(exps) != len(roots):
        raise AssertionError(f"inconsistent root data for {t}")

    eig = np.sort(np.linalg.eigvals(np.array(adjacency, dtype=float)).real)
    expected = np.sort([2 * cos(pi * s / coxeter) for s in exps])
    if not np.allclose(eig, expected, rtol=0, atol=1e-10):
        raise AssertionError(f"exponents of {t} disagree with the adjacency spectrum")

    if t.simply_laced:
        varpi = Fraction(1)
    else:
        varpi = prod((d ** (coxeter // 2) for d in delta), start=Fraction(1))

    return LieData(
        type=t,
        cartan=cartan,
        adjacency=adjacency,
        symmetrizer=tuple(delta),
        gram=gram,
        quad_form=quad_form,
        delta=det,
        coxeter=coxeter,
        dual_coxeter=int(dual_coxeter),
        exponents=exps,
        varpi=varpi,
        dim_group=r + r * coxeter,
        grading=_grading(adjacency),
        positive_roots=tuple(roots),
        highest_root=theta,
    )


_CACHE: dict = {}


def lie_data(t) -> LieData:
    """Memoised :func:`build_lie_data`; accepts a LieType or a name like ``"E6"``."""
    if isinstance(t, str):
        t = LieType.parse(t)
    if t not in _CACHE:
        _CACHE[t] = build_lie_data(t)
    return _CACHE[t]


def positive_roots(data: LieData) -> list:
    return list(data.positive_roots)


def inner_product(x, y, data: LieData) -> Fraction:
    """Scalar product of weights and/or roots under the fundamental quadratic form."""
    r = data.rank
    xs = x.coords if isinstance(x, Weight) else x.coeffs
    ys = y.coords if isinstance(y, Weight) else y.coeffs
    if len(xs) != r or len(ys) != r:
        raise ValueError("dimension mismatch")
    if isinstance(x, Root) and isinstance(y, Root):
        return sum(
            (Fraction(xs[i] * ys[j]) * data.gram[i][j] for i in range(r) for j in range(r)),
            Fraction(0),
        )
    if isinstance(x, Weight) and isinstance(y, Weight):
        K = data.quad_form
        return sum((xs[i] * K[i][j] * ys[j] for i in range(r) for j in range(r)), Fraction(0))
    if isinstance(x, Root):
        xs, ys = ys, xs
    # <omega_a, alpha_b> = delta_b on the diagonal
    return sum((xs[b] * ys[b] * data.symmetrizer[b] for b in range(r)), Fraction(0))


def reflection(data: LieData, a: int) -> np.ndarray:
    """Simple reflection s_a acting on coefficient column vectors."""
    r = data.rank
    s = np.eye(r, dtype=np.int64)
    for j in range(r):
        s[a, j] -= data.cartan[j][a]
    return s


def bipartite_coxeter(data: LieData) -> np.ndarray:
    """c = (product of even-vertex reflections) . (product of odd-vertex reflections).

    With this ordering, moving two rows down a quiver table applies c.
    """
    r = data.rank
    even = np.eye(r, dtype=np.int64)
    odd = np.eye(r, dtype=np.int64)
    for a in range(r):
        if data.grading[a] == 0:
            even = even @ reflection(data, a)
        else:
            odd = odd @ reflection(data, a)
    return even @ odd


def coxeter_orbits(data: LieData) -> list:
    """Orbits of the bipartite Coxeter element on all roots, as lists of coefficient tuples."""
    c = bipartite_coxeter(data)
    pos = [a.coeffs for a in data.positive_roots]
    remaining = set(pos) | {tuple(-x for x in a) for a in pos}
    orbits = []
    for start in pos + [tuple(-x for x in a) for a in pos]:
        if start not in remaining:
            continue
        orbit = []
        v = np.array(start, dtype=np.int64)
        while tuple(int(x) for x in v) in remaining:
            key = tuple(int(x) for x in v)
            remaining.discard(key)
            orbit.append(key)
            v = c @ v
        orbits.append(orbit)
    return orbits
