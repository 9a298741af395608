from fractions import Fraction

import pytest

import dedekind


def test_sum_and_inv():
    assert dedekind.dedekind_sum(2, 7) == Fraction(1, 14)
    assert dedekind.inv_count(6, 7) == 15
    assert dedekind.inv_count(6, 7, "oracle") == 15
    assert dedekind.inv_count(6, 7, "closed") == 15


def test_reciprocity():
    assert all(dedekind.reciprocity_residual(a, 30) == 0 for a in (1, 7, 11, 13, 29))


def test_invpoly_and_roots():
    assert dedekind.invpoly(5) == {0: 1, 3: 2, 6: 1}
    assert dedekind.vanishes_at_root(5, 2)
    assert dedekind.root_multiplicity(5, 6) == 2
    scan = dedekind.root_scan(8)
    assert [e["m"] for e in scan["unexplained"]] == [18]


def test_table1_prefix():
    assert dedekind.table1(30) == [
        (8, [18]),
        (18, [16]),
        (22, [20, 60]),
        (26, [20, 60]),
        (29, [18]),
    ]


def test_sweep_and_numroots():
    v = dedekind.sweep("prop2.2", 60)
    assert v["status"] == "verified-at-scale"
    roots = dedekind.find_roots(11)
    assert len(roots) == 45
    assert all(conv for _, conv, _ in roots)


def test_errors_surface_as_exceptions():
    with pytest.raises(ValueError):
        dedekind.inv_count(2, 4)
    with pytest.raises(ValueError):
        dedekind.sweep("prop9.9", 10)
