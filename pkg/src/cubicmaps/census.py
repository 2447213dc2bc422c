"""Assembly of rooted counts and orbifold data into sensed and unsensed censuses.

Sensed counts identify maps up to orientation-preserving homeomorphism,
unsensed counts up to all homeomorphisms. Both are assembled from rooted
counts by orbit counting: a symmetry of period l contributes quotient maps on
an orbifold, weighted by an epimorphism coefficient, and the weighted
contributions average out over the possible rootings.

Everything is evaluated in exact rational arithmetic and asserted integral at
the end; the fractional prefactors (1/2, 1/4, 1/(4(3g-3))) make floating
point unacceptable and integrality a free correctness check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exactnum import BigCount, ExactRational, binomial, factorial, factorial_or_zero_reciprocal, require_integer
from .orbifolds import (
    epsilon_h2_nonorientable,
    epsilon_h2_orientable,
    h2_orbifold_family,
    solve_closed_orbifolds,
)
from .rooted_counts import (
    _cubic_nonorientable_formula,
    precubic_nonorientable_by_genus_pair,
    precubic_nonorientable_by_leaves,
    precubic_orientable,
    rooted_cubic_nonorientable,
    rooted_cubic_orientable,
)


# ============================================================
# Census rows
# ============================================================


@dataclass(frozen=True)
class CensusRow:
    """Counts for one genus: rooted, sensed (orientable rows only), unsensed.

    A row with `sensed` present is an orientable-surface row (edge count
    6g-3), otherwise non-orientable (3g-3). Every unsensed map admits at most
    4n rootings and every sensed map at most 2n, which gives the sandwich
    bounds validated here.
    """

    genus: int
    rooted: BigCount
    sensed: Optional[BigCount]
    unsensed: BigCount

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise ValueError(f"genus must be >= 1 (got {self.genus})")
        if min(self.rooted, self.unsensed) < 0 or (self.sensed is not None and self.sensed < 0):
            raise ValueError("counts must be nonnegative")
        if self.sensed is not None and not (self.unsensed <= self.sensed <= self.rooted):
            raise ValueError(f"expected unsensed <= sensed <= rooted at g={self.genus}")
        if self.unsensed > self.rooted:
            raise ValueError(f"expected unsensed <= rooted at g={self.genus}")
        n = 6 * self.genus - 3 if self.sensed is not None else 3 * self.genus - 3
        if self.rooted > 4 * n * self.unsensed:
            raise ValueError(f"rooted count exceeds 4n rootings per unsensed map at g={self.genus}")


def orientable_census_row(g: int) -> CensusRow:
    """The (rooted, sensed, unsensed) row for the orientable genus-g surface."""
    return CensusRow(
        genus=g,
        rooted=rooted_cubic_orientable(g),
        sensed=sensed_cubic_orientable(g),
        unsensed=unsensed_cubic_orientable(g),
    )


def nonorientable_census_row(g: int) -> CensusRow:
    """The (rooted, unsensed) row for the non-orientable genus-g surface."""
    return CensusRow(
        genus=g,
        rooted=rooted_cubic_nonorientable(g),
        sensed=None,
        unsensed=unsensed_cubic_nonorientable(g),
    )


# ============================================================
# Orientable surfaces
# ============================================================


def sensed_cubic_orientable(g: int) -> BigCount:
    """Count cubic one-face maps on the orientable genus-g surface up to rotation.

    Four-term assembly: the rooted count averaged over the 2(6g-3) rootings,
    plus three correction sums for the maps fixed by nontrivial rotations
    (quotient maps on orbifolds of genus gg below g). Each sum is written
    exactly as in the closed form; pole guards make out-of-range summands 0.
    """
    if g < 1:
        raise ValueError(f"orientable genus must be >= 1 (got {g})")
    total = Fraction(rooted_cubic_orientable(g), 2 * (6 * g - 3))
    for gg in range(g // 2 + 1):
        total += (
            Fraction(factorial(4 * g - 2 - 2 * gg), 2 * 3 ** gg * factorial(gg) * factorial(2 * g - 1 - gg))
            * factorial_or_zero_reciprocal(2 * g - 4 * gg + 1)
        )
    third = Fraction(0)
    for gg in range((g + 1) // 3 + 1):
        third += (
            Fraction(3, 4) ** (gg - 1)
            * (2 ** (g + 1 - 3 * gg) + (-1) ** (g - gg))
            * Fraction(1, factorial(gg))
            * factorial_or_zero_reciprocal(g + 1 - 3 * gg)
        )
    total += Fraction(factorial(2 * g - 2), 6 * factorial(g - 1)) * third
    for k in range(g // 2, (2 * g - 2) // 3 + 1):
        for gg in range(k - g // 2 + 1):
            total += (
                Fraction(3) ** (gg - 2)
                * (2 ** (2 * g - 1 - 3 * k) + (-1) ** k)
                * Fraction(factorial(2 * k - 2 * gg), factorial(gg) * factorial(k - gg))
                * factorial_or_zero_reciprocal(4 * k + 3 - 2 * g - 4 * gg)
                * factorial_or_zero_reciprocal(2 * g - 1 - 3 * k)
            )
    return require_integer(total, f"sensed orientable count at g={g}")


def unsensed_cubic_orientable(g: int) -> BigCount:
    """Count cubic one-face maps on the orientable genus-g surface up to all homeomorphisms.

    Half of (sensed count + two reflection-quotient terms): the orientable
    quotient contributes the rooted count at genus g/2 (zero for odd g), the
    non-orientable quotient the closed-form non-orientable rooted count at
    genus g. The latter is the raw formula value, which is 1 at g=1: the
    degenerate edgeless quotient still represents one reflection class there.
    """
    if g < 1:
        raise ValueError(f"orientable genus must be >= 1 (got {g})")
    halved = rooted_cubic_orientable(g // 2) if g % 2 == 0 else 0
    total = Fraction(sensed_cubic_orientable(g) + halved + _cubic_nonorientable_formula(g), 2)
    return require_integer(total, f"unsensed orientable count at g={g}")


# ============================================================
# Non-orientable surfaces
# ============================================================


def h2_term_nonorientable(g: int) -> ExactRational:
    """Period-2 contribution to the unsensed non-orientable count at genus g.

    Half the epsilon-weighted sum of precubic quotient counts over the
    period-2 orbifold family. Exact rational: integrality holds only for the
    full assembly, not per term.
    """
    if g < 2:
        raise ValueError(f"non-orientable census needs g >= 2 (got {g})")
    total = Fraction(0)
    for orb in h2_orbifold_family(g):
        if orb.orientable:
            eps = epsilon_h2_orientable(orb.genus, orb.branch_points)
            quotients = precubic_orientable(g, orb.genus)
        else:
            eps = epsilon_h2_nonorientable(orb.genus, orb.branch_points)
            quotients = precubic_nonorientable_by_genus_pair(g, orb.genus)
        total += Fraction(eps * quotients, 2)
    return total


def hl_term_nonorientable(g: int) -> ExactRational:
    """Period-l (l >= 2) closed-orbifold contribution to the unsensed count at genus g.

    Quarter of the sum over signature solutions of
    epsilon * C(n_s+n_v, n_s) * (precubic count with n_s+n_v leaves),
    re-rooted by the dart ratio: divided by 3g-3 + l*n_s/2, evaluated as the
    exact rational (6g-6 + l*n_s)/2.
    """
    if g < 2:
        raise ValueError(f"non-orientable census needs g >= 2 (got {g})")
    total = Fraction(0)
    for sol in solve_closed_orbifolds(g):
        if not sol.contributes:
            continue
        k = sol.n_s + sol.n_v
        total += Fraction(
            sol.epsilon * binomial(k, sol.n_s) * precubic_nonorientable_by_leaves(sol.genus, k)
        ) / Fraction(6 * g - 6 + sol.l * sol.n_s, 2)
    return total / 4


def unsensed_cubic_nonorientable(g: int) -> BigCount:
    """Count cubic one-face maps on the non-orientable genus-g surface up to all homeomorphisms.

    Rooted count averaged over 4(3g-3) rootings, plus the period-2 and
    period-l correction terms.
    """
    if g < 2:
        raise ValueError(f"non-orientable census needs g >= 2 (got {g})")
    total = (
        Fraction(rooted_cubic_nonorientable(g), 4 * (3 * g - 3))
        + h2_term_nonorientable(g)
        + hl_term_nonorientable(g)
    )
    return require_integer(total, f"unsensed non-orientable count at g={g}")
