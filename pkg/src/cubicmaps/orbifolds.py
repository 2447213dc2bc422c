"""Quotient-orbifold families and epimorphism coefficients for the census.

An order-l symmetry of a surface carrying a one-face cubic map descends to a
quotient map on an orbifold. Two families matter here:

  - period-2 symmetries of either surface kind give an orbifold with a single
    boundary component and only index-2 branch points ("h2" family);
  - longer periods acting on a non-orientable surface give a closed
    non-orientable orbifold whose signature is gg crosscaps with n_s index-2
    points (at semiedge ends), n_v index-3 points (at vertices), and one
    index-l point in the face.

Each admissible signature carries a coefficient epsilon: the number of
order-preserving epimorphisms from the orbifold fundamental group onto the
cyclic group Z_l minus the orientation-and-order-preserving ones. The solver
below enumerates the closed signatures for a given genus, and the epi_*
operations implement the general closed forms (Jordan-totient expressions)
that the epsilon shortcuts specialize; the test suite holds the two routes
together.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from .exactnum import (
    BigCount,
    euler_phi,
    jordan_totient_or_zero,
    lcm_list,
)


# ============================================================
# Period-2 orbifold family
# ============================================================


@dataclass(frozen=True)
class H2OrbifoldClass:
    """One admissible quotient orbifold of a period-2 symmetry.

    `genus` is handles when orientable, crosscaps otherwise; `branch_points`
    counts the index-2 branch points.
    """

    orientable: bool
    genus: int
    branch_points: int

    def __post_init__(self) -> None:
        if self.genus < 0 or self.branch_points < 0:
            raise ValueError("orbifold parameters must be nonnegative")
        if not self.orientable and self.genus < 1:
            raise ValueError("a non-orientable orbifold needs at least one crosscap")


def h2_orbifold_family(g: int) -> List[H2OrbifoldClass]:
    """All quotient orbifolds of period-2 symmetries of the non-orientable genus-g surface.

    Orientable quotients: genus gg in [0, g//4] with r = g-4gg branch points.
    Non-orientable quotients: gg in [1, g//2] with r = g-2gg. Empty for g < 2.
    """
    if g < 2:
        return []
    family = [H2OrbifoldClass(True, gg, g - 4 * gg) for gg in range(g // 4 + 1)]
    family += [H2OrbifoldClass(False, gg, g - 2 * gg) for gg in range(1, g // 2 + 1)]
    return family


def epsilon_h2_orientable(gg: int, r: int) -> BigCount:
    """Epimorphism-difference coefficient for an orientable period-2 quotient.

    2^{2gg} with branch points, 2^{2gg} - 1 without.
    """
    if gg < 0 or r < 0:
        raise ValueError("epsilon_h2_orientable requires nonnegative arguments")
    return 2 ** (2 * gg) if r > 0 else 2 ** (2 * gg) - 1


def epsilon_h2_nonorientable(gg: int, r: int) -> BigCount:
    """Epimorphism-difference coefficient for a non-orientable period-2 quotient.

    2^gg with branch points, 2^gg - 1 without.
    """
    if gg < 1 or r < 0:
        raise ValueError("epsilon_h2_nonorientable requires gg >= 1 and r >= 0")
    return 2 ** gg if r > 0 else 2 ** gg - 1


# ============================================================
# Closed-orbifold signature solver (periods l >= 2)
# ============================================================


@dataclass(frozen=True)
class SignatureSolution:
    """A closed non-orientable orbifold signature with its epsilon coefficient.

    Signature: gg crosscaps, n_s index-2 points, n_v index-3 points, plus the
    index-l face point. Solutions with epsilon = 0 are retained; they
    contribute nothing to the census but witness the parity condition.
    """

    l: int
    genus: int
    n_s: int
    n_v: int
    epsilon: BigCount

    def __post_init__(self) -> None:
        if self.l < 2:
            raise ValueError(f"period must be >= 2 (got {self.l})")
        if self.genus < 1:
            raise ValueError(f"crosscap count must be >= 1 (got {self.genus})")
        if self.n_s < 0 or self.n_v < 0:
            raise ValueError("branch point counts must be nonnegative")
        if self.n_s > 0 and self.l % 2 != 0:
            raise ValueError("index-2 points require an even period")
        if self.n_v > 0 and self.l % 3 != 0:
            raise ValueError("index-3 points require a period divisible by 3")

    @property
    def contributes(self) -> bool:
        return self.epsilon != 0

    def branch_indices(self) -> List[int]:
        """The full branch-index list [2,...,2, 3,...,3, l] of the signature."""
        return [2] * self.n_s + [3] * self.n_v + [self.l]


def solve_closed_orbifolds(g: int) -> List[SignatureSolution]:
    """All closed-orbifold signatures for period-l symmetries, l >= 2, of genus g.

    Solves 6g-6 = l (6gg - 6 + 3 n_s + 4 n_v) subject to: l divides 6g-6 and
    stays within the period bound (2g-2 for even g, 2g for odd g); gg in
    [1, (g+l-1)//l]; n_s > 0 only for even l, n_v > 0 only for l divisible
    by 3. Sorted by (l, gg, n_s, n_v). Empty for g < 2.
    """
    if g < 2:
        return []
    out: List[SignatureSolution] = []
    bound = 2 * g - 2 if g % 2 == 0 else 2 * g
    for l in range(2, bound + 1):
        if (6 * g - 6) % l != 0:
            continue
        for gg in range(1, (g + l - 1) // l + 1):
            rest = (6 * g - 6) // l - 6 * gg + 6
            if rest < 0:
                continue
            for n_v in range(rest // 4 + 1):
                if (rest - 4 * n_v) % 3 != 0:
                    continue
                n_s = (rest - 4 * n_v) // 3
                if n_s > 0 and l % 2 != 0:
                    continue
                if n_v > 0 and l % 3 != 0:
                    continue
                out.append(SignatureSolution(l, gg, n_s, n_v, epsilon_hl(l, gg, n_s, n_v)))
    out.sort(key=lambda s: (s.l, s.genus, s.n_s, s.n_v))
    return out


def epsilon_hl(l: int, gg: int, n_s: int, n_v: int) -> BigCount:
    """Epimorphism-difference coefficient of a closed signature.

    l^{gg-1} phi(l) 2^{n_v} for odd l; twice that for even l when
    (l/2) n_s + (l/3) n_v + 1 is even (a zero-count term contributes 0 even
    if its divisor condition fails); 0 otherwise.
    """
    if l < 2 or gg < 1 or n_s < 0 or n_v < 0:
        raise ValueError("epsilon_hl arguments out of range")
    base = l ** (gg - 1) * euler_phi(l) * 2 ** n_v
    if l % 2 != 0:
        return base
    parity = (l // 2) * n_s + (l // 3 if n_v else 0) * n_v + 1
    return 2 * base if parity % 2 == 0 else 0


# ============================================================
# General epimorphism counts (cross-check route)
# ============================================================
#
# The shortcuts above are specializations of the closed forms below, which
# count order-preserving (epi) and orientation-and-order-preserving
# (epi_plus) epimorphisms onto a cyclic group. They are implemented as
# printed, for the stated parities only, and exercised by cross-check tests.


def _phi_product(branch_indices: Sequence[int]) -> BigCount:
    out = 1
    for m in branch_indices:
        out *= euler_phi(m)
    return out


def epi_orientable_boundary(gg: int, h: int, branch_indices: Sequence[int], l: int) -> BigCount:
    """Order-preserving epimorphisms onto Z_l, orientable orbifold, h >= 1 boundaries, even l.

    (m')^{2gg+h-1} J_{2gg+h-1}(l/m') prod phi(m_i) with m' = lcm(2, m_1..m_r).
    """
    if h < 1:
        raise ValueError("the boundary form requires h >= 1")
    if l % 2 != 0:
        raise ValueError("the order-preserving boundary form is stated for even l")
    mp = lcm_list([2, *branch_indices])
    k = 2 * gg + h - 1
    return mp ** k * jordan_totient_or_zero(k, l, mp) * _phi_product(branch_indices)


def epi_plus_orientable_boundary(
    gg: int, h: int, branch_indices: Sequence[int], group_order: int
) -> BigCount:
    """Orientation-and-order-preserving epimorphisms onto Z_{2l}, l odd, orientable orbifold.

    `group_order` is 2l. Count: m^{2gg+h-1} J_{2gg+h-1}(l/m) prod phi(m_i)
    with m = lcm(m_1..m_r).
    """
    if h < 1:
        raise ValueError("the boundary form requires h >= 1")
    if group_order % 2 != 0 or (group_order // 2) % 2 != 1:
        raise ValueError("the orientation-preserving boundary form is stated for group order 2l, l odd")
    l = group_order // 2
    m = lcm_list(branch_indices)
    k = 2 * gg + h - 1
    return m ** k * jordan_totient_or_zero(k, l, m) * _phi_product(branch_indices)


def epi_nonorientable_boundary(gg: int, h: int, branch_indices: Sequence[int], l: int) -> BigCount:
    """Same as epi_orientable_boundary for a non-orientable orbifold: exponent gg+h-1."""
    if h < 1:
        raise ValueError("the boundary form requires h >= 1")
    if l % 2 != 0:
        raise ValueError("the order-preserving boundary form is stated for even l")
    mp = lcm_list([2, *branch_indices])
    k = gg + h - 1
    return mp ** k * jordan_totient_or_zero(k, l, mp) * _phi_product(branch_indices)


def epi_plus_nonorientable_boundary(
    gg: int, h: int, branch_indices: Sequence[int], group_order: int
) -> BigCount:
    """Same as epi_plus_orientable_boundary for a non-orientable orbifold: exponent gg+h-1."""
    if h < 1:
        raise ValueError("the boundary form requires h >= 1")
    if group_order % 2 != 0 or (group_order // 2) % 2 != 1:
        raise ValueError("the orientation-preserving boundary form is stated for group order 2l, l odd")
    l = group_order // 2
    m = lcm_list(branch_indices)
    k = gg + h - 1
    return m ** k * jordan_totient_or_zero(k, l, m) * _phi_product(branch_indices)


def _reduced_half_reciprocal_denominator(branch_indices: Sequence[int]) -> int:
    # b in the 2^q k form: the denominator of sum 1/(2 m_i) after reduction
    total = sum(Fraction(1, 2 * m) for m in branch_indices)
    return total.denominator


def epi_nonorientable_closed(gg: int, branch_indices: Sequence[int], l: int) -> BigCount:
    """Order-preserving epimorphisms onto Z_l for a closed non-orientable orbifold.

    Three printed cases: odd l uses m = lcm(m_i); l = 2^q k with q > 1 uses
    m' = lcm(2, b, m_i) where b is the reduced denominator of sum 1/(2 m_i);
    l = 2k with k odd is the difference of the previous form and the
    nested-subgroup term m^{gg-1} J_{gg-1}(l/(2m)) prod phi(m_i).
    """
    if gg < 1:
        raise ValueError("a non-orientable orbifold needs gg >= 1")
    if l < 2:
        raise ValueError(f"period must be >= 2 (got {l})")
    phi_prod = _phi_product(branch_indices)
    k = gg - 1
    m = lcm_list(branch_indices)
    if l % 2 != 0:
        return m ** k * jordan_totient_or_zero(k, l, m) * phi_prod
    b = _reduced_half_reciprocal_denominator(branch_indices)
    mp = lcm_list([2, b, *branch_indices])
    doubled = 2 * mp ** k * jordan_totient_or_zero(k, l, mp) * phi_prod
    if l % 4 == 0:
        return doubled
    return doubled - m ** k * jordan_totient_or_zero(k, l, 2 * m) * phi_prod


def epi_plus_nonorientable_closed(gg: int, branch_indices: Sequence[int], l: int) -> BigCount:
    """Orientation-and-order-preserving epimorphisms onto Z_l, closed non-orientable orbifold.

    0 for odd l; m^{gg-1} J_{gg-1}(l/(2m)) prod phi(m_i) for l = 2k with k
    odd; 2 (m')^{gg-1} J_{gg-1}(l/(2m')) prod phi(m_i) with m' = lcm(2, m_i)
    when 4 divides l. For every census signature the face point forces
    J(1/2) = 0, so these vanish there.
    """
    if gg < 1:
        raise ValueError("a non-orientable orbifold needs gg >= 1")
    if l < 2:
        raise ValueError(f"period must be >= 2 (got {l})")
    if l % 2 != 0:
        return 0
    phi_prod = _phi_product(branch_indices)
    k = gg - 1
    if l % 4 == 0:
        mp = lcm_list([2, *branch_indices])
        return 2 * mp ** k * jordan_totient_or_zero(k, l, 2 * mp) * phi_prod
    m = lcm_list(branch_indices)
    return m ** k * jordan_totient_or_zero(k, l, 2 * m) * phi_prod
