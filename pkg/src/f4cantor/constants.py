"""Closed-form reference constants, as exact surds over sqrt(26565).

These are the expected values the certifier re-derives; each is kept in
lowest terms so equality against computed results is componentwise.
"""

from __future__ import annotations

from fractions import Fraction

from .surd import QuadSurd

ROOT_LO = QuadSurd(783, 1, 222)
ROOT_HI = QuadSurd(5501, -1, 1238)

LAMBDA = QuadSurd(228339, 83497, 14071116)
TAU_LOWER = QuadSurd(-228339, 83497, 13158329)
GAMMA = QuadSurd(188261210808537, -1136812239479, 173141622072241)

PRODUCT_LO = QuadSurd(106609, 261, 8214)
PRODUCT_HI = QuadSurd(15143783, -5501, 766322)

MU_BOUND = QuadSurd(19425, 111, 2030)
DELTA_BOUND = QuadSurd(44067, 111, 65522)
TEN_PLUS_6_SQRT2 = QuadSurd(10, 6, 1, 2)

SEVEN_HUNDREDTHS = Fraction(7, 100)

# per-type uniform gap-ratio bounds: (left-child bound, right-child bound,
# decimal cap).  The left entry caps |gap|/|first child| (ratio increasing in
# eps, evaluated at eps=1); the right entry caps |gap|/|second child|
# (decreasing in eps, evaluated at eps=1/5).
TYPE_BOUNDS: dict[int, tuple[QuadSurd, QuadSurd, Fraction]] = {
    1: (QuadSurd(-98845, 678, 168340),
        QuadSurd(1714, 16935, 2895005), Fraction(964, 1000)),
    2: (QuadSurd(-3102208, 28527, 12625009),
        QuadSurd(734627, 22099, 5347148), Fraction(811, 1000)),
    3: (QuadSurd(-327577, 11883, 3835324),
        QuadSurd(142707, 31409, 5780868), Fraction(911, 1000)),
    4: (QuadSurd(734627, 22099, 5347148),
        QuadSurd(871925, 10719, 26671920), Fraction(811, 1000)),
    5: (QuadSurd(142707, 31409, 5780868),
        QuadSurd(122465100, 943849, 764144085), Fraction(911, 1000)),
    6: (QuadSurd(-1760165, 12317, 3740264),
        QuadSurd(228339, 83497, 14071116), Fraction(984, 1000)),
    7: (QuadSurd(124744719, 3698485, 897620716),
        QuadSurd(5862625949, 36639108, 113824090231), Fraction(811, 1000)),
    8: (QuadSurd(24202879, 5279855, 973087996),
        QuadSurd(61036589, 376740, 301409236), Fraction(910, 1000)),
    9: (QuadSurd(-2678249986, 26487231, 13906866931),
        QuadSurd(7015092919, 43130255, 18089104276), Fraction(777, 1000)),
}
