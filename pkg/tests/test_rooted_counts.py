"""Rooted closed-form counts: frozen census values and structural properties."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cubicmaps.golden import CUBIC_NONORIENTABLE, CUBIC_ORIENTABLE
from cubicmaps.rooted_counts import (
    SurfaceClass,
    _cubic_nonorientable_formula,
    c_coefficient,
    covering_genus_orientable,
    precubic_edges_nonorientable,
    precubic_leaves_nonorientable,
    precubic_leaves_orientable,
    precubic_nonorientable_by_genus_pair,
    precubic_nonorientable_by_leaves,
    precubic_orientable,
    rooted_cubic_nonorientable,
    rooted_cubic_orientable,
)


def test_surface_class_validation() -> None:
    assert SurfaceClass(True, 0).euler_characteristic() == 2
    assert SurfaceClass(True, 2).euler_characteristic() == -2
    assert SurfaceClass(False, 1).euler_characteristic() == 1
    with pytest.raises(ValueError):
        SurfaceClass(True, -1)
    with pytest.raises(ValueError):
        SurfaceClass(False, 0)


def test_surface_class_cubic_edges() -> None:
    assert SurfaceClass(True, 1).cubic_edges() == 3
    assert SurfaceClass(True, 2).cubic_edges() == 9
    assert SurfaceClass(False, 2).cubic_edges() == 3
    assert SurfaceClass(False, 3).cubic_edges() == 6


def test_rooted_cubic_orientable_census() -> None:
    for g, (rooted, _, _) in CUBIC_ORIENTABLE.items():
        assert rooted_cubic_orientable(g) == rooted


def test_rooted_cubic_orientable_rejects_nonpositive() -> None:
    with pytest.raises(ValueError):
        rooted_cubic_orientable(0)
    with pytest.raises(ValueError):
        rooted_cubic_orientable(-3)


def test_rooted_cubic_nonorientable_census() -> None:
    for g, (rooted, _) in CUBIC_NONORIENTABLE.items():
        assert rooted_cubic_nonorientable(g) == rooted


def test_rooted_cubic_nonorientable_genus_one() -> None:
    # no cubic graph embeds in the projective plane with one face, but the
    # raw closed form evaluates to 1 there and the census assembly needs it
    assert rooted_cubic_nonorientable(1) == 0
    assert _cubic_nonorientable_formula(1) == 1
    with pytest.raises(ValueError):
        rooted_cubic_nonorientable(0)


def test_c_coefficient_values() -> None:
    assert c_coefficient(1) == Fraction(1, 2)
    assert c_coefficient(2) == Fraction(1, 8)
    assert isinstance(c_coefficient(3), Fraction)
    with pytest.raises(ValueError):
        c_coefficient(0)


def test_precubic_orientable_plane_values_are_catalan() -> None:
    # genus 0, e = 2m+1 edges, m+2 leaves: the Catalan numbers
    catalan = [1, 2, 5, 14, 42, 132]
    for m, value in enumerate(catalan):
        assert precubic_orientable(m + 2, 0) == value


def test_precubic_orientable_spot_values() -> None:
    assert precubic_orientable(4, 1) == 1
    assert precubic_orientable(5, 1) == 10
    assert precubic_orientable(8, 2) == 105
    # out-of-range parameters count nothing
    assert precubic_orientable(1, 0) == 0
    assert precubic_orientable(3, 2) == 0


def test_precubic_nonorientable_by_leaves_spot_values() -> None:
    assert precubic_nonorientable_by_leaves(1, 1) == 4
    assert precubic_nonorientable_by_leaves(1, 2) == 16
    assert precubic_nonorientable_by_leaves(1, 3) == 64
    assert precubic_nonorientable_by_leaves(2, 0) == 6
    assert precubic_nonorientable_by_leaves(2, 1) == 60
    assert precubic_nonorientable_by_leaves(3, 0) == 128
    # degenerate parameters: no edges or malformed input
    assert precubic_nonorientable_by_leaves(1, 0) == 0
    assert precubic_nonorientable_by_leaves(0, 3) == 0
    assert precubic_nonorientable_by_leaves(2, -1) == 0


def test_precubic_nonorientable_by_genus_pair_spot_values() -> None:
    assert precubic_nonorientable_by_genus_pair(3, 1) == 4
    assert precubic_nonorientable_by_genus_pair(4, 1) == 16
    assert precubic_nonorientable_by_genus_pair(4, 2) == 6
    assert precubic_nonorientable_by_genus_pair(5, 2) == 60
    # the written form assigns the zero-edge pair (2, 1) the value 1
    assert precubic_nonorientable_by_genus_pair(2, 1) == 1
    assert precubic_nonorientable_by_genus_pair(1, 1) == 0
    assert precubic_nonorientable_by_genus_pair(3, 0) == 0


def test_precubic_parameterizations_agree() -> None:
    # the genus-pair form at (g, gg) and the leaf form at (gg, k) describe
    # the same maps when both are defined with at least one edge
    for gg in range(1, 8):
        for g in range(gg, 26):
            edges = 2 * g - gg - 3
            if edges < 1:
                continue
            k = precubic_leaves_nonorientable(gg, edges)
            if k is None:
                continue
            assert precubic_nonorientable_by_genus_pair(g, gg) == precubic_nonorientable_by_leaves(gg, k), (g, gg, k)


def test_precubic_edge_and_leaf_translations_roundtrip() -> None:
    for gg in range(1, 8):
        for k in range(0, 10):
            edges = precubic_edges_nonorientable(gg, k)
            if edges < 1:
                continue
            assert precubic_leaves_nonorientable(gg, edges) == k
    # parity mismatches have no leaf count
    assert precubic_leaves_nonorientable(1, 3) is None
    assert precubic_leaves_nonorientable(2, 4) is None


def test_precubic_orientable_leaf_translation() -> None:
    assert precubic_leaves_orientable(0, 1) == 2
    assert precubic_leaves_orientable(0, 5) == 4
    assert precubic_leaves_orientable(1, 5) == 1
    assert precubic_leaves_orientable(2, 9) == 0
    assert precubic_leaves_orientable(0, 2) is None
    assert precubic_leaves_orientable(2, 5) is None


def test_covering_genus_orientable_consistency() -> None:
    # the covering-genus parameter recovers the defining identity
    # g = (e-1)/2 + gg + 2 and feeds the closed form a nonzero value
    for gg in range(0, 4):
        for e in range(1, 12, 2):
            k = precubic_leaves_orientable(gg, e)
            if k is None:
                continue
            g = covering_genus_orientable(gg, e)
            assert g == (e - 1) // 2 + gg + 2
            assert precubic_orientable(g, gg) > 0
