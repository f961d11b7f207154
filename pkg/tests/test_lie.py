from fractions import Fraction
from math import prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusioncat.lie import (
    InvalidLieType,
    LieType,
    Root,
    Weight,
    bipartite_coxeter,
    coxeter_number,
    coxeter_orbits,
    dual_coxeter_number,
    exponents_of,
    group_dimension,
    inner_product,
    lie_data,
    reflection,
)

ALL = [LieType(f, r) for f, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)) for r in range(lo, 9)] + [
    LieType.parse(x) for x in ("E6", "E7", "E8", "F4", "G2")
]

# (N, N_dual, dim, |W|, number of positive roots), standard tables
KNOWN = {
    "A1": (2, 2, 3, 2, 1),
    "A2": (3, 3, 8, 6, 3),
    "B2": (4, 3, 10, 8, 4),
    "C3": (6, 4, 21, 48, 9),
    "D4": (6, 6, 28, 192, 12),
    "G2": (6, 4, 14, 12, 6),
    "F4": (12, 9, 52, 1152, 24),
    "E6": (12, 12, 78, 51840, 36),
    "E7": (18, 18, 133, 2903040, 63),
    "E8": (30, 30, 248, 696729600, 120),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_invariants(name):
    d = lie_data(name)
    N, Nd, dim, weyl, npos = KNOWN[name]
    assert (d.coxeter, d.dual_coxeter, d.dim_group, len(d.positive_roots)) == (N, Nd, dim, npos)
    assert prod(m + 1 for m in d.exponents) == weyl


@pytest.mark.parametrize("t", ALL, ids=str)
def test_closed_forms_match_root_system(t):
    d = lie_data(t)
    assert coxeter_number(t) == d.coxeter
    assert dual_coxeter_number(t) == d.dual_coxeter
    assert group_dimension(t) == d.dim_group


@pytest.mark.parametrize("t", ALL, ids=str)
def test_exponents_from_spectrum(t):
    d = lie_data(t)
    eig = np.sort(np.linalg.eigvals(np.array(d.adjacency, dtype=float)).real)
    m = np.sort(np.arccos(np.clip(eig / 2, -1, 1)) * d.coxeter / np.pi)
    assert np.allclose(m, sorted(exponents_of(t)), atol=1e-8)


def _closure(d):
    """All roots by closing the simple roots under simple reflections."""
    r = d.rank
    refl = [reflection(d, a) for a in range(r)]
    seen = {tuple(int(i == a) for i in range(r)) for a in range(r)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for s in refl:
                w = tuple(int(x) for x in s @ np.array(v))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


@pytest.mark.parametrize("t", ALL, ids=str)
def test_positive_roots_match_reflection_closure(t):
    d = lie_data(t)
    pos = {v for v in _closure(d) if sum(v) > 0}
    assert pos == {a.coeffs for a in d.positive_roots}
    assert max(d.positive_roots, key=lambda a: a.height) == d.highest_root


def test_non_simply_laced_orientation():
    # short roots: B_r on the right, C_r on the left, F4 nodes 3, 4, G2 node 2
    assert lie_data("B4").symmetrizer == (1, 1, 1, Fraction(1, 2))
    assert lie_data("C4").symmetrizer == (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2), 1)
    assert lie_data("F4").symmetrizer == (1, 1, Fraction(1, 2), Fraction(1, 2))
    assert lie_data("G2").symmetrizer == (1, Fraction(1, 3))
    assert lie_data("F4").adjacency == ((0, 1, 0, 0), (1, 0, 2, 0), (0, 1, 0, 1), (0, 0, 1, 0))


def test_e_series_branch_nodes():
    assert [j + 1 for j in range(6) if lie_data("E6").adjacency[5][j]] == [3]
    assert [j + 1 for j in range(7) if lie_data("E7").adjacency[6][j]] == [4]
    assert [j + 1 for j in range(8) if lie_data("E8").adjacency[7][j]] == [5]


def test_varpi_values():
    assert lie_data("E8").varpi == 1
    assert lie_data("B3").varpi == Fraction(1, 8)
    assert lie_data("C3").varpi == Fraction(1, 64)
    assert lie_data("F4").varpi == Fraction(1, 2**12)
    assert lie_data("G2").varpi == Fraction(1, 27)


def test_determinants():
    assert lie_data("A4").delta == Fraction(1, 5)
    assert lie_data("E8").delta == 1
    assert lie_data("D5").delta == Fraction(1, 4)


def test_parse_and_errors():
    assert LieType.parse(" e6 ") == LieType("E6", 6)
    assert LieType.parse("B 2") == LieType("B", 2)
    for bad in ("Q3", "A", "B1", "D2", "E5", "X"):
        with pytest.raises(InvalidLieType):
            LieType.parse(bad)
    with pytest.raises(InvalidLieType):
        LieType("G2", 3)


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "E6"])
def test_coxeter_orbits_have_length_n(name):
    d = lie_data(name)
    c = bipartite_coxeter(d)
    assert (np.linalg.matrix_power(c, d.coxeter) == np.eye(d.rank, dtype=int)).all()
    orbits = coxeter_orbits(d)
    assert sum(len(o) for o in orbits) == 2 * len(d.positive_roots)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_reflections_preserve_form_and_roots(t, data):
    d = lie_data(t)
    a = data.draw(st.integers(0, d.rank - 1))
    root = data.draw(st.sampled_from(d.positive_roots))
    s = reflection(d, a)
    image = tuple(int(x) for x in s @ np.array(root.coeffs))
    assert inner_product(Root(image), Root(image), d) == inner_product(root, root, d)
    pos = {x.coeffs for x in d.positive_roots}
    assert image in pos or tuple(-x for x in image) in pos


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_weight_form_is_symmetric_and_matches_roots(t, data):
    d = lie_data(t)
    lab = st.lists(st.integers(-4, 4), min_size=d.rank, max_size=d.rank)
    x, y = Weight(tuple(data.draw(lab))), Weight(tuple(data.draw(lab)))
    assert inner_product(x, y, d) == inner_product(y, x, d)
    alpha = data.draw(st.sampled_from(d.positive_roots))
    assert inner_product(d.root_as_weight(alpha), x, d) == inner_product(alpha, x, d)
