"""Frozen expected values for the verification suites.

Each table is a small census of exact counts that the closed-form modules
must reproduce byte for byte. They exist so that a regression in any formula
is caught by comparison against fixed data rather than against the code
being tested.

CUBIC_ORIENTABLE: genus -> (rooted, sensed, unsensed), genus 1..10.
CUBIC_NONORIENTABLE: genus -> (rooted, unsensed), genus 2..20.
CLOSED_ORBIFOLD_ROWS: (surface genus, l, orbifold genus, n_s, n_v, epsilon)
for every signature with a nonzero count and surface genus 2..8, sorted.
"""

from typing import Dict, List, Tuple

CUBIC_ORIENTABLE: Dict[int, Tuple[int, int, int]] = {
    1: (1, 1, 1),
    2: (105, 9, 8),
    3: (50050, 1726, 927),
    4: (56581525, 1349005, 676445),
    5: (117123756750, 2169056374, 1084610107),
    6: (386078943500250, 5849686966988, 2924847922929),
    7: (1857039718236202500, 23808202021448662, 11904101304325611),
    8: (12277353837189093778125, 136415042681045401661, 68207521363461659373),
    9: (106815706684397824557193750, 1047212810636411989605202, 523606405320272947813801),
    10: (1183197582943074702620035168750, 10378926166167927379808819918, 5189463083084174721816125584),
}

CUBIC_NONORIENTABLE: Dict[int, Tuple[int, int]] = {
    2: (6, 2),
    3: (128, 11),
    4: (3780, 144),
    5: (163840, 3627),
    6: (8828820, 149288),
    7: (587202560, 8170800),
    8: (45821335560, 545671762),
    9: (4133906022400, 43063046307),
    10: (421946699674500, 3906934079662),
    11: (48151737348915200, 401264673924438),
    12: (6070544859205827000, 45988979036528440),
    13: (838225443769915801600, 5821010056777072838),
    14: (125787689149526729325000, 806331341176441101980),
    15: (20385642792484352294912000, 121343111865634574938768),
    16: (3548258423062128985899690000, 19712546794881999409462482),
    17: (660168656191813264718430208000, 3438378417666873290074260643),
    18: (130746565669943973430227429382500, 640914537597785062325259175158),
    19: (27463016097579431812286696652800000, 127143593044349500804170430994988),
    20: (6098023559259606741021710317037175000, 26745717365173718867249062116990380),
}

CLOSED_ORBIFOLD_ROWS: List[Tuple[int, int, int, int, int, int]] = [
    (2, 2, 1, 1, 0, 2),
    (3, 3, 1, 0, 1, 4),
    (4, 2, 1, 3, 0, 2),
    (4, 2, 2, 1, 0, 4),
    (4, 3, 2, 0, 0, 6),
    (4, 6, 1, 1, 0, 4),
    (5, 3, 1, 0, 2, 8),
    (6, 2, 1, 5, 0, 2),
    (6, 2, 2, 3, 0, 4),
    (6, 2, 3, 1, 0, 8),
    (6, 3, 2, 0, 1, 12),
    (6, 5, 2, 0, 0, 20),
    (6, 10, 1, 1, 0, 8),
    (7, 3, 1, 0, 3, 16),
    (7, 3, 3, 0, 0, 18),
    (7, 9, 1, 0, 1, 12),
    (8, 2, 1, 7, 0, 2),
    (8, 2, 2, 5, 0, 4),
    (8, 2, 3, 3, 0, 8),
    (8, 2, 4, 1, 0, 16),
    (8, 3, 2, 0, 2, 24),
    (8, 6, 1, 1, 1, 8),
    (8, 7, 2, 0, 0, 42),
    (8, 14, 1, 1, 0, 12),
]
