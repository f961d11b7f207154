import json
from fractions import Fraction
from math import factorial, prod

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusioncat import golden
from fusioncat.export import (
    root_quiver_rows,
    root_quiver_to_dot,
    table_from_dict,
    table_to_csv,
    table_to_dict,
    table_to_json,
)
from fusioncat.lie import LieType, Root, Weight, lie_data
from fusioncat.qnum import QContext
from fusioncat.quiver import (
    NotARoot,
    direct_weyl_denominator,
    essential_table,
    fusion_sequence,
    fusion_sequence_invariants,
    height_vector,
    intertwiner,
    local_chebyshev_check,
    locate_root,
    nakayama_permutation,
    path_matrix,
    path_matrix_product,
    positions,
    rho_table,
    root_at,
    root_placement,
    coxeter_consistency,
    scaled_table,
    fusion_denominator_squared,
    weyl_denominator,
)

ALL = [LieType(f, r) for f, lo in (("A", 1), ("B", 2), ("C", 2), ("D", 3)) for r in range(lo, 8)] + [
    LieType.parse(x) for x in ("E6", "E7", "E8", "F4", "G2")
]
CL = QContext.classical_mode()


@pytest.mark.parametrize("t", ALL, ids=str)
def test_fusion_sequence_invariants(t):
    inv = fusion_sequence_invariants(lie_data(t))
    assert all(inv.values()), inv


def test_fusion_sequence_periodic_indexing():
    d = lie_data("D5")
    F = fusion_sequence(d)
    assert (F[1] == np.eye(d.rank, dtype=int)).all()
    assert (F[2] == np.array(d.adjacency)).all()
    assert (F[2 + 2 * d.coxeter] == F[2]).all()
    assert (F[-1] == F[2 * d.coxeter - 1]).all()


def test_nakayama_permutations():
    assert nakayama_permutation(lie_data("E6")) == (5, 4, 3, 2, 1, 6)
    assert nakayama_permutation(lie_data("A4")) == (4, 3, 2, 1)
    assert nakayama_permutation(lie_data("E7")) == tuple(range(1, 8))
    assert nakayama_permutation(lie_data("D5")) == (1, 2, 3, 5, 4)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_positions_count_roots(t):
    d = lie_data(t)
    assert len(positions(d)) == 2 * len(d.positive_roots)
    assert len(positions(d, half=True)) == len(d.positive_roots)


@pytest.mark.parametrize("t", ALL, ids=str)
def test_denominator_triple(t):
    d = lie_data(t)
    sfac = d.varpi * prod(factorial(s) for s in d.exponents)
    assert weyl_denominator(d, CL) == direct_weyl_denominator(d, CL) == sfac
    assert fusion_denominator_squared(d) == sfac**2


@pytest.mark.parametrize("name,fname", sorted(golden.RHO_ROOT_TABLES.items()))
def test_rho_root_goldens(name, fname):
    assert rho_table(lie_data(name)).rows == golden.load_table(fname)


@pytest.mark.parametrize("name,fname", sorted(golden.RHO_COROOT_TABLES.items()))
def test_rho_coroot_goldens(name, fname):
    assert rho_table(lie_data(name), scaled=False).rows == golden.load_table(fname)


@pytest.mark.parametrize("name,r", [("E6", 6), ("F4", 4)])
def test_fundamental_weight_goldens(name, r):
    d = lie_data(name)
    for a in range(1, r + 1):
        w = [int(a == b) for b in range(1, r + 1)]
        assert essential_table(w, d, half=True).rows == golden.load_table(f"{name}_e{a}.txt")
        assert (intertwiner(d, a) >= 0).all()


def test_e6_alpha3_table_and_root_quiver():
    d = lie_data("E6")
    tab = essential_table(d.root_as_weight(Root((0, 0, 1, 0, 0, 0))), d)
    assert tab.rows == golden.load_table("E6_alpha3_full.txt")
    assert [p for p, v in tab.items() if v == 2] == [(1, 3)]
    placement = {p: r.coeffs for p, r in root_placement(d).items()}
    assert placement == golden.load_root_quiver("E6_root_quiver.txt")


def test_a11_fusion_and_path_matrix():
    d = lie_data("A11")
    assert (fusion_sequence(d)[4] == golden.load_matrix("A11_F4.txt")).all()
    assert (path_matrix(d) == golden.load_matrix("A11_path_matrix.txt")).all()


@pytest.mark.parametrize("r", range(1, 11))
def test_path_matrix_product(r):
    sf = prod(factorial(s) for s in range(1, r + 1))
    assert path_matrix_product(lie_data(LieType("A", r))) == 2**r * sf**2


def test_path_matrix_product_a3_value():
    assert path_matrix_product(lie_data("A3")) == 1152


def test_path_matrix_restrictions():
    with pytest.raises(ValueError):
        path_matrix(lie_data("B3"))
    with pytest.raises(ValueError):
        path_matrix_product(lie_data("D4"))


@pytest.mark.parametrize("r", range(1, 12))
def test_column_sums_of_path_matrix_are_2rho_for_a(r):
    d = lie_data(LieType("A", r))
    assert tuple(int(x) for x in path_matrix(d).sum(axis=0)) == height_vector(d)


def test_e6_local_recurrence_instance():
    d = lie_data("E6")
    tab = essential_table(d.weyl_vector, d)
    # the empty cell (8, 3): vertical neighbours vs. horizontal neighbours
    assert tab[7, 3] + tab[9, 3] == tab[8, 2] + tab[8, 4] + tab[8, 6] == 20


@pytest.mark.parametrize("t", ALL, ids=str)
def test_root_placement(t):
    d = lie_data(t)
    placement = root_placement(d)
    assert len(placement) == 2 * len(d.positive_roots)
    assert all(n <= d.coxeter for (n, _), a in placement.items() if a.height > 0)
    assert coxeter_consistency(d)


def test_locate_and_root_at():
    d = lie_data("E6")
    alpha = Root((0, 1, 1, 1, 0, 1))
    n, b = locate_root(alpha, d)
    assert root_at(n, b, d).coeffs == alpha.coeffs
    assert root_at(n + 2 * d.coxeter, b, d).coeffs == alpha.coeffs
    with pytest.raises(NotARoot):
        locate_root(Root((1, 0, 1, 0, 0, 0)), d)


def test_scaled_table_is_column_scaling():
    d = lie_data("G2")
    e, f = essential_table((2, -1), d), scaled_table((2, -1), d)
    for (n, b), v in e.items():
        assert f[n, b] == v * d.symmetrizer[b - 1]


def test_negative_rows_mirror_positive_rows():
    # rows N+1..2N carry -sigma of rows 1..N
    d = lie_data("E6")
    sigma = nakayama_permutation(d)
    tab = essential_table(d.weyl_vector, d)
    N = d.coxeter
    for (n, b), v in tab.items():
        if n <= N:
            assert tab[n + N, sigma[b - 1]] == -v


def test_weight_length_checked():
    with pytest.raises(ValueError):
        essential_table((1, 2), lie_data("A3"))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_local_recurrence_random_weights(t, data):
    d = lie_data(t)
    w = data.draw(st.lists(st.integers(-5, 5), min_size=d.rank, max_size=d.rank))
    assert local_chebyshev_check(essential_table(w, d), d)
    assert local_chebyshev_check(scaled_table(w, d), d)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_tables_are_linear_in_the_weight(t, data):
    d = lie_data(t)
    lab = st.lists(st.integers(-5, 5), min_size=d.rank, max_size=d.rank)
    x, y = data.draw(lab), data.draw(lab)
    tx, ty = essential_table(x, d), essential_table(y, d)
    txy = essential_table(Weight(tuple(x)) + Weight(tuple(y)), d)
    assert all(txy[p] == tx[p] + ty[p] for p, _ in txy.items())


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(ALL), st.data())
def test_json_round_trip(t, data):
    d = lie_data(t)
    w = data.draw(st.lists(st.fractions(-3, 3, max_denominator=4), min_size=d.rank, max_size=d.rank))
    half = data.draw(st.booleans())
    tab = scaled_table(w, d, half=half)
    back = table_from_dict(json.loads(table_to_json(tab)), d)
    assert back == tab


def test_csv_layout():
    text = table_to_csv(essential_table((1, 0, 0), lie_data("B3"), half=True))
    assert text.splitlines() == ["n,1,2,3", "1,1,,0", "2,,1,", "3,0,,2", "4,,1,", "5,1,,0", "6,,0,"]


def test_json_exact_strings():
    obj = table_to_dict(rho_table(lie_data("G2")))
    assert obj["weight"] == ["1/1", "1/1"]
    assert all("/" in v for _, _, v in obj["entries"])


def test_dot_export():
    d = lie_data("A2")
    dot = root_quiver_to_dot(d)
    assert dot.startswith('digraph "A2"')
    assert dot.count("[label=") == 6
    assert dot.count("->") > 0
    assert len(root_quiver_rows(d)) == 6
