"""Brute-force oracle: one-face maps enumerated as edge gluings of a polygon.

Model
-----
A one-face map with n edges is a 2n-gon with its boundary sides glued in
pairs. Sides are labelled 0..2n-1 counterclockwise; corner c is the polygon
vertex between sides c-1 and c. A gluing is a perfect matching on the sides
plus one twist bit per matched pair:

  - untwisted (i, j): head-to-tail identification, as in a chord diagram;
    corners i+1 ~ j and i ~ j+1 become one map vertex;
  - twisted (i, j): head-to-head identification (a crosscap gluing);
    corners i+1 ~ j+1 and i ~ j become one map vertex.

Map invariants are read off the corner classes: vertices are the classes,
vertex degrees the class sizes, the surface is orientable iff no pair is
twisted, and the genus follows from the Euler relation v - n + 1 = chi.

Every gluing is one rooted map (the polygon carries the root). Relabelling
the sides by a rotation re-roots the same map along its face; a reflection
additionally reverses orientation. Burnside counting over the 2n rotations
therefore yields sensed counts, and over the dihedral group of order 4n
unsensed counts. Twist bits ride along unchanged under both kinds of
relabelling; this convention and the one-gluing-one-rooted-map
correspondence are empirically calibrated against known small counts by the
verification suites (count_unsensed also implements the opposite twist
transport as a fallback).

Search
------
Matchings are enumerated by always extending the smallest unmatched side, so
the search order is canonical and the space partitions deterministically by
the first placed pair. Partial corner classes live in a union-find with an
undo trail; a class whose link count equals its size is closed (every
flanking side matched, so it is a finished vertex). Branches die early when
a class closes with a size outside the allowed degree set or an open class
outgrows the largest allowed degree. Counts fixed by a symmetry reuse the
same search, forcing the whole symmetry orbit of every placed pair at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple

from .exactnum import BigCount
from .rooted_counts import SurfaceClass

# Enumeration limits: full twisted enumeration visits (2n-1)!! 2^n gluings,
# orientable-only (2n-1)!!, so the affordable n differ. Callers may raise the
# ceiling explicitly through the max_edges arguments.
DEFAULT_MAX_EDGES_ORIENTABLE = 9
DEFAULT_MAX_EDGES_FULL = 6

DegreeFilter = Callable[[Tuple[int, ...]], bool]


class EnumerationLimitError(ValueError):
    """Raised when a requested edge count exceeds the configured search limit."""


# ============================================================
# Gluings and their invariants
# ============================================================


@dataclass(frozen=True)
class PolygonGluing:
    """A side pairing of the 2n-gon: pairs (i, j) with i < j, one twist bit each."""

    n: int
    pairs: Tuple[Tuple[int, int], ...]
    twists: Tuple[bool, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need n >= 1 (got {self.n})")
        if len(self.pairs) != self.n or len(self.twists) != self.n:
            raise ValueError(f"expected {self.n} pairs and twist bits")
        seen = set()
        for (i, j) in self.pairs:
            if not (0 <= i < j < 2 * self.n):
                raise ValueError(f"pair ({i}, {j}) is not an ordered pair of distinct sides")
            seen.update((i, j))
        if len(seen) != 2 * self.n:
            raise ValueError("pairs must partition the sides (fixed-point-free involution)")


@dataclass(frozen=True)
class MapInvariants:
    """Classification of a glued polygon: orientability, genus, sorted vertex degrees."""

    orientable: bool
    genus: int
    degrees: Tuple[int, ...]

    def vertex_count(self) -> int:
        return len(self.degrees)

    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus


def _corner_links(i: int, j: int, twist: bool, two_n: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """The two corner identifications induced by gluing sides i and j."""
    if twist:
        return ((i + 1) % two_n, (j + 1) % two_n), (i % two_n, j % two_n)
    return ((i + 1) % two_n, j % two_n), (i % two_n, (j + 1) % two_n)


def classify(gluing: PolygonGluing) -> MapInvariants:
    """Compute the surface and vertex degrees of a glued polygon.

    Corner classes are the map vertices; the Euler relation v - n + 1 = chi
    then pins the genus, with chi = 2-2g orientable and 2-g otherwise.
    """
    two_n = 2 * gluing.n
    parent = list(range(two_n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for (i, j), twist in zip(gluing.pairs, gluing.twists):
        for (u, v) in _corner_links(i, j, twist, two_n):
            parent[find(u)] = find(v)
    sizes: dict = {}
    for c in range(two_n):
        r = find(c)
        sizes[r] = sizes.get(r, 0) + 1
    degrees = tuple(sorted(sizes.values()))
    orientable = not any(gluing.twists)
    chi = len(degrees) - gluing.n + 1
    if orientable:
        if chi % 2 != 0:
            raise ArithmeticError(f"odd Euler characteristic {chi} for an untwisted gluing")
        genus = (2 - chi) // 2
    else:
        genus = 2 - chi
    return MapInvariants(orientable=orientable, genus=genus, degrees=degrees)


# ============================================================
# Search engine
# ============================================================


class _CornerClasses:
    """Union-find over corners with class size and link counters, undoable.

    No path compression, so merges undo in O(1); finds stay cheap at these
    sizes. A class is closed when links == size: each corner then has both
    flanking sides matched, so the vertex is complete.
    """

    def __init__(self, m: int):
        self.parent = list(range(m))
        self.size = [1] * m
        self.links = [0] * m
        self.trail: List[Tuple[int, int]] = []  # (root, absorbed_root or -1)

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def add_link(self, a: int, b: int) -> int:
        """Record the identification of corners a and b; return the class root."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            self.links[ra] += 1
            self.trail.append((ra, -1))
            return ra
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.links[ra] += self.links[rb] + 1
        self.trail.append((ra, rb))
        return ra

    def undo_to(self, mark: int) -> None:
        trail = self.trail
        while len(trail) > mark:
            ra, rb = trail.pop()
            if rb < 0:
                self.links[ra] -= 1
            else:
                self.parent[rb] = rb
                self.size[ra] -= self.size[rb]
                self.links[ra] -= self.links[rb] + 1


def _count_search(
    n: int,
    allow_twists: bool,
    accept: Callable[[bool, int, Tuple[int, ...]], bool],
    allowed_degrees: Optional[FrozenSet[int]],
    symmetry: Optional[Tuple[Sequence[int], bool]] = None,
) -> int:
    """Count gluings of the 2n-gon passing `accept`, optionally fixed by a symmetry.

    accept(orientable, genus, degrees) sees the final invariants.
    allowed_degrees is a pruning hint: a superset of every vertex degree any
    accepted gluing may have. symmetry is (side permutation, twist flip); a
    counted gluing must be fixed by it, twist bits XORed with the flip bit on
    each application.
    """
    two_n = 2 * n
    partner = [-1] * two_n
    twist_of = [False] * two_n
    classes = _CornerClasses(two_n)
    max_degree = max(allowed_degrees) if allowed_degrees else 0
    perm, flip = symmetry if symmetry is not None else (None, False)
    twist_options = (False, True) if allow_twists else (False,)

    def place(a: int, b: int, twist: bool, placed: List[int]) -> bool:
        # one pair into the partial gluing; False on any conflict or prune
        if a == b:
            return False
        if partner[a] != -1 or partner[b] != -1:
            return partner[a] == b and twist_of[a] == twist
        partner[a] = b
        partner[b] = a
        twist_of[a] = twist_of[b] = twist
        placed.append(a)
        lo, hi = (a, b) if a < b else (b, a)
        for (u, v) in _corner_links(lo, hi, twist, two_n):
            root = classes.add_link(u, v)
            if allowed_degrees is not None:
                s = classes.size[root]
                if s > max_degree:
                    return False
                if classes.links[root] == s and s not in allowed_degrees:
                    return False
        return True

    def unplace(placed: List[int], mark: int) -> None:
        classes.undo_to(mark)
        for a in placed:
            partner[partner[a]] = -1
            partner[a] = -1

    def place_orbit(i: int, j: int, twist: bool, placed: List[int]) -> bool:
        if not place(i, j, twist, placed):
            return False
        if perm is None:
            return True
        a, b, t = i, j, twist
        while True:
            a, b, t = perm[a], perm[b], t ^ flip
            lo, hi = (a, b) if a < b else (b, a)
            if (lo, hi, t) == (i, j, twist):
                return True
            if partner[a] == b and twist_of[a] == t:
                continue
            if not place(a, b, t, placed):
                return False

    total = 0

    def finish() -> int:
        roots = [c for c in range(two_n) if classes.parent[c] == c]
        degrees = tuple(sorted(classes.size[r] for r in roots))
        orientable = not any(twist_of[s] for s in range(two_n))
        chi = len(roots) - n + 1
        genus = (2 - chi) // 2 if orientable else 2 - chi
        return 1 if accept(orientable, genus, degrees) else 0

    def search() -> None:
        nonlocal total
        first = -1
        for s in range(two_n):
            if partner[s] == -1:
                first = s
                break
        if first == -1:
            total += finish()
            return
        for j in range(first + 1, two_n):
            if partner[j] != -1:
                continue
            for twist in twist_options:
                placed: List[int] = []
                mark = len(classes.trail)
                if place_orbit(first, j, twist, placed):
                    search()
                unplace(placed, mark)

    search()
    return total


# ============================================================
# Counting operations
# ============================================================


def _check_limit(n: int, full_mode: bool, max_edges: Optional[int]) -> None:
    limit = max_edges
    if limit is None:
        limit = DEFAULT_MAX_EDGES_FULL if full_mode else DEFAULT_MAX_EDGES_ORIENTABLE
    if n > limit:
        mode = "full twisted" if full_mode else "orientable-only"
        raise EnumerationLimitError(
            f"n={n} exceeds the {mode} enumeration limit {limit}; "
            f"pass max_edges explicitly to raise it"
        )


def _surface_accept(surface: SurfaceClass, degree_filter: Optional[DegreeFilter]):
    def accept(orientable: bool, genus: int, degrees: Tuple[int, ...]) -> bool:
        if orientable != surface.orientable or genus != surface.genus:
            return False
        return degree_filter is None or degree_filter(degrees)

    return accept


def count_rooted(
    n: int,
    surface: SurfaceClass,
    degree_filter: Optional[DegreeFilter] = None,
    allowed_degrees: Optional[FrozenSet[int]] = None,
    max_edges: Optional[int] = None,
) -> BigCount:
    """Count rooted one-face maps with n edges on `surface` via direct enumeration.

    One gluing is one rooted map. Orientable surfaces enumerate matchings
    only; non-orientable surfaces enumerate matchings with twist bits.
    """
    full_mode = not surface.orientable
    _check_limit(n, full_mode, max_edges)
    return _count_search(n, full_mode, _surface_accept(surface, degree_filter), allowed_degrees)


def count_sensed_orientable(
    n: int,
    genus: int,
    degree_filter: Optional[DegreeFilter] = None,
    allowed_degrees: Optional[FrozenSet[int]] = None,
    max_edges: Optional[int] = None,
) -> BigCount:
    """Count orientable one-face maps with n edges up to rotation (Burnside over Z_2n)."""
    _check_limit(n, False, max_edges)
    surface = SurfaceClass(orientable=True, genus=genus)
    accept = _surface_accept(surface, degree_filter)
    two_n = 2 * n
    fixed_total = 0
    for d in range(two_n):
        rotation = [(s + d) % two_n for s in range(two_n)]
        fixed_total += _count_search(n, False, accept, allowed_degrees, (rotation, False))
    if fixed_total % two_n != 0:
        raise ArithmeticError(f"Burnside sum {fixed_total} not divisible by group order {two_n}")
    return fixed_total // two_n


def count_unsensed(
    n: int,
    surface: SurfaceClass,
    degree_filter: Optional[DegreeFilter] = None,
    allowed_degrees: Optional[FrozenSet[int]] = None,
    max_edges: Optional[int] = None,
    reflection_flips_twists: bool = False,
) -> BigCount:
    """Count one-face maps with n edges on `surface` up to all homeomorphisms.

    Burnside over the dihedral group of order 4n: the 2n rotations plus the
    2n reflections s -> c - s. Twist bits are carried unchanged by default;
    reflection_flips_twists=True selects the complementary transport (kept
    as the calibration fallback). The transport choice only exists on the
    full twisted space, so it is ignored for orientable surfaces.
    """
    full_mode = not surface.orientable
    _check_limit(n, full_mode, max_edges)
    accept = _surface_accept(surface, degree_filter)
    flip = reflection_flips_twists and full_mode
    two_n = 2 * n
    fixed_total = 0
    for d in range(two_n):
        rotation = [(s + d) % two_n for s in range(two_n)]
        fixed_total += _count_search(n, full_mode, accept, allowed_degrees, (rotation, False))
    for c in range(two_n):
        reflection = [(c - s) % two_n for s in range(two_n)]
        fixed_total += _count_search(n, full_mode, accept, allowed_degrees, (reflection, flip))
    if fixed_total % (2 * two_n) != 0:
        raise ArithmeticError(f"Burnside sum {fixed_total} not divisible by group order {2 * two_n}")
    return fixed_total // (2 * two_n)


def count_precubic(
    n: int,
    surface: SurfaceClass,
    leaves: int,
    max_edges: Optional[int] = None,
) -> BigCount:
    """Count rooted one-face maps with n edges, `leaves` degree-1 vertices, rest degree 3."""
    if leaves < 0:
        return 0
    cubic_vertices, remainder = divmod(2 * n - leaves, 3)
    if remainder != 0 or cubic_vertices < 0:
        return 0
    target = tuple(sorted([1] * leaves + [3] * cubic_vertices))
    return count_rooted(
        n,
        surface,
        degree_filter=lambda degrees: degrees == target,
        allowed_degrees=frozenset({1, 3}),
        max_edges=max_edges,
    )
