"""Print the cubic one-face census for both surface families.

Every number is exact. The rooted column is a closed form, the sensed and
unsensed columns fold in symmetry corrections, and the three are related by
the sandwich rooted/4n <= unsensed <= rooted (with 4n rootings per map,
n = 6g-3 orientable, n = 3g-3 non-orientable).
"""

from __future__ import annotations

from cubicmaps import nonorientable_census_row, orientable_census_row


def _print_orientable(g_max: int) -> None:
    print(f"Orientable surfaces, genus 1..{g_max} (n = 6g-3 edges):")
    width = len(str(orientable_census_row(g_max).rooted))
    print(f"  {'g':>3} {'rooted':>{width}} {'sensed':>{width}} {'unsensed':>{width}}")
    for g in range(1, g_max + 1):
        row = orientable_census_row(g)
        print(f"  {g:>3} {row.rooted:>{width}} {row.sensed:>{width}} {row.unsensed:>{width}}")
    print()


def _print_nonorientable(g_max: int) -> None:
    print(f"Non-orientable surfaces, genus 2..{g_max} (n = 3g-3 edges):")
    width = len(str(nonorientable_census_row(g_max).rooted))
    print(f"  {'g':>3} {'rooted':>{width}} {'unsensed':>{width}}")
    for g in range(2, g_max + 1):
        row = nonorientable_census_row(g)
        print(f"  {g:>3} {row.rooted:>{width}} {row.unsensed:>{width}}")
    print()


def main() -> None:
    _print_orientable(8)
    _print_nonorientable(12)

    # The formulas stay exact at any size; only the digits get longer.
    big = orientable_census_row(50)
    print(f"Orientable genus 50, unsensed count ({len(str(big.unsensed))} digits):")
    print(f"  {big.unsensed}")


if __name__ == "__main__":
    main()
