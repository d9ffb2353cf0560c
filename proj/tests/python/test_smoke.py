"""Smoke tests for the Python bindings."""

import json

import pytest

import ulrich_ruled as ur


def test_lattice_arithmetic():
    s = ur.RuledSurface(0, 1)
    c0 = ur.DivisorClass(1, 0)
    f = ur.DivisorClass(0, 1)
    assert ur.intersect(c0, c0, s) == -1
    assert ur.intersect(f, f, s) == 0
    assert ur.intersect(c0, f, s) == 1
    assert ur.euler_char_line(s, ur.DivisorClass(1, 1)) == 3
    k = ur.canonical_class(s)
    assert (k.a, k.b) == (-2, -3)


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        ur.RuledSurface(0, 0)
    s = ur.RuledSurface(0, 1)
    with pytest.raises(ValueError):
        ur.Polarization(1, 1, s)


def test_oracle_and_classification_agree():
    s = ur.RuledSurface(0, 1)
    h = ur.Polarization(1, 2, s)
    t = ur.cohomology(1, ur.DivisorClass(1, 1))
    assert (t.h0, t.h1, t.h2) == (3, 0, 0)

    box = ur.SearchBox.default_for(h)
    found = ur.search_ulrich_lines(1, h, box)
    assert [(d.a, d.b) for d in found] == [(0, 2), (1, 1)]
    assert ur.reconcile_with_oracle(1, h, box)

    c = ur.classify_line_bundles(s, h)
    assert not c.empty()
    l1, l2 = c.pair
    assert (l1.a, l1.b, l2.a, l2.b) == (0, 2, 1, 1)


def test_rank2_construction():
    s = ur.RuledSurface(0, 1)
    h = ur.Polarization(3, 4, s)
    x = ur.construct_rank2(s, h)
    assert (x.sub.a, x.sub.b) == (3, 3)
    assert (x.quot.a, x.quot.b) == (4, 6)
    assert x.z_length == 5
    assert x.c2 == 23
    assert x.c2 == ur.special_c2(s, h)
    assert x.stability == ur.Stability.Stable
    assert ur.verify_initialized_reduction(s, h)
    assert ur.step2_section_count(s, h) == x.z_length

    with pytest.raises(ValueError):
        ur.construct_rank2(ur.RuledSurface(9, 1), ur.Polarization(3, 4, ur.RuledSurface(9, 1)))


def test_sweep_row_json():
    row = json.loads(ur.sweep_row_json(0, 1, 1, 2, with_oracle=True))
    assert row["status"] == "ok"
    assert row["chi_ok"] is True
    assert row["oracle_ok"] is True
    assert row["extension"]["z_length"] == 0
