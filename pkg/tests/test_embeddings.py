import json
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp

from fusioncat.embeddings import (
    EmbeddingRecord,
    catalog,
    central_charge,
    central_charge_check,
    find,
    load_catalog,
    module_global_dim,
    record_from_dict,
    record_to_dict,
    spin,
    su,
)
from fusioncat.lie import LieType
from fusioncat.moddim import category, global_dim

PREC = 128
TOL = mpmath.mpf(2) ** -(PREC - 16)


def test_central_charges():
    assert central_charge(su(2), 1) == 1
    assert central_charge(su(2), 4) == 2
    assert central_charge(su(3), 1) == 2
    assert central_charge(spin(5), 1) == Fraction(5, 2)
    assert central_charge(su(2), 10) == Fraction(5, 2)
    assert central_charge(LieType("E8"), 1) == 8
    assert central_charge(LieType("C", 10), 1) == Fraction(35, 2)


def test_spin_and_su():
    assert spin(5) == LieType("B", 2)
    assert spin(8) == LieType("D", 4)
    assert su(4) == LieType("A", 3)


def test_catalog_is_conformal():
    recs = catalog()
    assert len(recs) == 55
    assert all(central_charge_check(r)[2] for r in recs)
    assert {r.tag for r in recs} == {"antisymmetric", "adjoint", "symmetric", "sporadic"}


def test_catalog_lookups():
    recs = catalog()
    assert find(recs, su(2), 4).outer == su(3)
    assert find(recs, su(2), 10).outer == spin(5)
    assert find(recs, su(2), 28).outer == LieType("G2")
    assert find(recs, su(3), 3, outer=spin(8)).tag == "adjoint"
    with pytest.raises(KeyError):
        find(recs, su(2), 5)


def test_record_validation():
    with pytest.raises(ValueError):
        EmbeddingRecord(((su(2), 4),), su(3), "bogus")
    with pytest.raises(ValueError):
        EmbeddingRecord((), su(3), "sporadic")
    with pytest.raises(ValueError):
        EmbeddingRecord(((su(2), 0),), su(3), "sporadic")


def test_json_round_trip(tmp_path):
    recs = catalog(rank_cap=3)
    path = tmp_path / "cat.json"
    path.write_text(json.dumps([record_to_dict(r) for r in recs]))
    assert load_catalog(path) == recs
    assert record_from_dict({"inner": [{"family": "A", "rank": 1, "level": 28}], "outer": {"family": "G2"}}).outer == LieType("G2")


def test_product_inner_groups():
    # SU(3)_2 x SU(2)_3 < SU(6)_1: c = 16/5 + 9/5 = 5
    rec = EmbeddingRecord(((su(3), 2), (su(2), 3)), su(6), "sporadic")
    assert central_charge_check(rec) == (5, 5, True)
    with mp.workprec(PREC):
        parts = [global_dim(category(t, k, PREC)) for t, k in ((su(3), 2), (su(2), 3), (su(6), 1))]
        e = module_global_dim(rec, PREC)
        assert abs(e**2 - parts[0] * parts[1] * parts[2]) / e**2 < TOL


@pytest.mark.parametrize("k,expected", [(4, "6"), (10, None), (28, None)])
def test_module_dimensions(k, expected):
    rec = find(catalog(), su(2), k)
    with mp.workprec(PREC):
        e = module_global_dim(rec, PREC)
        a = global_dim(category(su(2), k, PREC))
        j = global_dim(category(rec.outer, 1, PREC))
        assert abs(e**2 - a * j) / (a * j) < TOL
        if expected:
            assert abs(e - mpmath.mpf(expected)) < TOL
