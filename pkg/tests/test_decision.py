import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
import worked_example as wx
from conftest import random_pair
from softmatrix import (
    BitMatrix,
    ProductKind,
    ProductPart,
    StructureMismatchError,
    UniverseSpec,
    column_sets,
    decide,
    dense,
    optimum,
    product_part,
    row_decision,
    validate,
    weights,
    zero,
)


def bm(rows):
    return BitMatrix.from_lists(rows)


@pytest.fixture(scope="module")
def and_report(ms_a, ms_b):
    return decide(ms_a, ms_b, "and")


def test_column_sets_universe_one():
    cp = product_part(bm(wx.A1), bm(wx.B1), "and")
    sets = column_sets(cp, 1, 0)
    assert [list(s) for s in sets.local] == wx.I_SETS[0]
    assert sets.global_ == sets.local


def test_column_sets_universe_two_offset(and_report):
    sets = and_report.universes[1].column_sets
    assert sets.offset == 25
    assert list(sets.global_[0]) == [26, 27, 28]
    assert list(sets.local[0]) == [1, 2, 3]


def test_column_sets_zero():
    sets = column_sets(ProductPart(zero(4, 9), 3), 1)
    assert sets.local == ((), (), ())
    assert weights(ProductPart(zero(4, 9), 3), sets) == ((0, 0, 0),) * 4


def test_weights_and_v(and_report):
    for d, w, v in zip(and_report.universes, wx.W, wx.V):
        assert [list(r) for r in d.table.w] == w
        assert list(d.table.v) == v


def test_row_decision():
    assert row_decision([[0, 0], [0, 1]]) == (0, 1)
    assert row_decision([[0, 0, 0]] * 3) == (0, 0, 0)


def test_optimum():
    u = UniverseSpec("U", ("x", "y", "z"))
    assert optimum((0, 1, 0), u) == ("y",)
    assert optimum((0, 0, 0), u) == ()
    assert optimum((1, 1, 1), u) == ("x", "y", "z")
    with pytest.raises(ValueError):
        optimum((1, 0), u)


def test_decide_worked_example(and_report):
    assert and_report.kind is ProductKind.AND
    assert [d.optimum for d in and_report.universes] == wx.OPTIMA
    assert and_report.optima() == {"U1": ("h2",), "U2": ("c4",), "U3": ("v2",)}
    for d, expected in zip(and_report.universes, wx.I_SETS):
        assert [list(s) for s in d.column_sets.global_] == expected
    assert not any(d.empty_optimum for d in and_report.universes)
    assert and_report.product.shape == (15, 86)


def test_decide_with_empty_partner(ms_a):
    universes = [{"id": u.id, "elements": list(u.elements)} for u in ms_a.universes]
    parameters = [{"universe": p.universe, "names": list(p.names)} for p in ms_a.parameters]
    empty = validate(universes, parameters, [
        {"name": "b1", "params": ["e11", "e21", "e31"], "approx": [[], [], []]}
    ])
    report = decide(ms_a, empty, "and")
    assert all(d.optimum == () and d.empty_optimum for d in report.universes)


@pytest.mark.parametrize("kind", ["and", "or", "andnot", "ornot"])
def test_decide_worked_example_matches_oracle(ms_a, ms_b, kind):
    report = decide(ms_a, ms_b, kind)
    for d, (I, w, v, best) in zip(report.universes, oracles.decide(ms_a, ms_b, kind)):
        assert [list(s) for s in d.column_sets.global_] == I
        assert [list(r) for r in d.table.w] == w
        assert list(d.table.v) == v
        assert list(d.optimum) == best


def test_structure_mismatch(ms_a):
    other = validate([{"id": "U1", "elements": ["x"]}], [{"universe": "U1", "names": ["p"]}], [])
    with pytest.raises(StructureMismatchError):
        decide(ms_a, other)


def test_locality_and_conventions(ms_a, ms_b):
    for kind in ProductKind:
        report = decide(ms_a, ms_b, kind)
        full = dense(report.product)
        for d, (r0, r1, c0, c1) in zip(report.universes, report.product.windows()):
            n = d.column_sets.source_cols
            # recompute from the global matrix using only this universe's rows
            strip = full.window(r0, r1, 0, full.ncols)
            support = strip.column_support()
            for k, (loc, glob) in enumerate(zip(d.column_sets.local, d.column_sets.global_), start=1):
                assert [p - c0 for p in glob] == list(loc)
                block_cols = range(c0 + n * (k - 1) + 1, c0 + n * k + 1)
                assert list(glob) == [p for p in block_cols if support >> (p - 1) & 1]
                if not loc:
                    assert all(row[k - 1] == 0 for row in d.table.w)
            local_only = ProductPart(report.product.blocks[d.index - 1], n)
            assert row_decision(weights(local_only, column_sets(local_only, d.index))) == d.table.v


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(["and", "or", "andnot", "ornot"]))
def test_decide_matches_oracle_random(seed, kind):
    a, b = random_pair(random.Random(seed))
    report = decide(a, b, kind)
    assert report == decide(a, b, kind)
    for d, (I, w, v, best) in zip(report.universes, oracles.decide(a, b, kind)):
        assert [list(s) for s in d.column_sets.global_] == I
        assert [list(r) for r in d.table.w] == w
        assert list(d.table.v) == v
        assert list(d.optimum) == best
