"""Census assembly: sensed/unsensed closed forms against the frozen tables."""

from __future__ import annotations

from fractions import Fraction

import pytest

from cubicmaps.census import (
    CensusRow,
    h2_term_nonorientable,
    hl_term_nonorientable,
    nonorientable_census_row,
    orientable_census_row,
    sensed_cubic_orientable,
    unsensed_cubic_nonorientable,
    unsensed_cubic_orientable,
)
from cubicmaps.golden import CUBIC_NONORIENTABLE, CUBIC_ORIENTABLE
from cubicmaps.rooted_counts import (
    _cubic_nonorientable_formula,
    rooted_cubic_nonorientable,
    rooted_cubic_orientable,
)


def test_census_row_validation() -> None:
    CensusRow(2, 105, 9, 8)
    CensusRow(2, 6, None, 2)
    with pytest.raises(ValueError):
        CensusRow(2, 105, 106, 8)  # sensed above rooted
    with pytest.raises(ValueError):
        CensusRow(2, 105, 9, 10)  # unsensed above sensed
    with pytest.raises(ValueError):
        CensusRow(0, 1, 1, 1)


def test_orientable_rows_match_frozen_table() -> None:
    for g, (rooted, sensed, unsensed) in CUBIC_ORIENTABLE.items():
        row = orientable_census_row(g)
        assert (row.rooted, row.sensed, row.unsensed) == (rooted, sensed, unsensed)


def test_nonorientable_rows_match_frozen_table() -> None:
    for g, (rooted, unsensed) in CUBIC_NONORIENTABLE.items():
        row = nonorientable_census_row(g)
        assert row.sensed is None
        assert (row.rooted, row.unsensed) == (rooted, unsensed)


def test_sensed_cubic_orientable_anchors() -> None:
    assert sensed_cubic_orientable(1) == 1
    assert sensed_cubic_orientable(2) == 9
    assert sensed_cubic_orientable(3) == 1726
    with pytest.raises(ValueError):
        sensed_cubic_orientable(0)


def test_unsensed_cubic_orientable_anchors() -> None:
    assert unsensed_cubic_orientable(1) == 1
    assert unsensed_cubic_orientable(2) == 8
    assert unsensed_cubic_orientable(10) == 5189463083084174721816125584
    with pytest.raises(ValueError):
        unsensed_cubic_orientable(0)


def test_unsensed_cubic_nonorientable_anchors() -> None:
    assert unsensed_cubic_nonorientable(2) == 2
    assert unsensed_cubic_nonorientable(3) == 11
    assert unsensed_cubic_nonorientable(20) == 26745717365173718867249062116990380
    with pytest.raises(ValueError):
        unsensed_cubic_nonorientable(1)


def test_symmetric_map_terms_small_genus() -> None:
    # contributions of the period-2 and longer-period symmetric maps
    assert h2_term_nonorientable(2) == Fraction(1)
    assert hl_term_nonorientable(2) == Fraction(1, 2)
    assert h2_term_nonorientable(3) == Fraction(5)
    assert hl_term_nonorientable(3) == Fraction(2, 3)


def test_census_assembly_small_genus() -> None:
    for g in (2, 3, 4):
        assembled = (
            Fraction(rooted_cubic_nonorientable(g), 4 * (3 * g - 3))
            + h2_term_nonorientable(g)
            + hl_term_nonorientable(g)
        )
        assert assembled == unsensed_cubic_nonorientable(g)


def test_cross_table_identity_small_range() -> None:
    # 2 unsensed - sensed - rooted_nonorientable is the rooted count of the
    # half-genus orientable surface (0 for odd genus); the raw closed form
    # supplies the genus-1 value
    for g in range(1, 41):
        left = 2 * unsensed_cubic_orientable(g) - sensed_cubic_orientable(g) - _cubic_nonorientable_formula(g)
        right = rooted_cubic_orientable(g // 2) if g % 2 == 0 else 0
        assert left == right, g


def test_sensed_and_unsensed_bounds_small_range() -> None:
    for g in range(1, 30):
        rooted = rooted_cubic_orientable(g)
        sensed = sensed_cubic_orientable(g)
        unsensed = unsensed_cubic_orientable(g)
        n = 6 * g - 3
        assert Fraction(rooted, 2 * n) <= sensed <= rooted
        assert Fraction(rooted, 4 * n) <= unsensed <= sensed
