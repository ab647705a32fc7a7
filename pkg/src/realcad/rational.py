"""Exact rational scalars.

Everything downstream manipulates rationals through this module so the whole
solver can transparently run on gmpy2.mpq when it is installed and fall back
to fractions.Fraction otherwise.
"""

from __future__ import annotations

import math
from fractions import Fraction

try:
    from gmpy2 import mpq as QQ  # type: ignore

    _HAVE_GMPY = True
except ImportError:  # pragma: no cover - environment dependent
    QQ = Fraction
    _HAVE_GMPY = False

ZERO = QQ(0)
ONE = QQ(1)


def qq(numerator, denominator=1):
    """Build a rational from ints, a string like '3/4', or another rational."""
    if denominator == 1:
        return QQ(numerator)
    return QQ(numerator, denominator)


def num(q) -> int:
    return int(q.numerator)


def den(q) -> int:
    return int(q.denominator)


def qsign(q) -> int:
    if q > 0:
        return 1
    if q < 0:
        return -1
    return 0


def qfloor(q) -> int:
    return num(q) // den(q)


def qceil(q) -> int:
    return -((-num(q)) // den(q))


def qabs(q):
    return -q if q < 0 else q


def qq_gcd(a, b):
    """Positive gcd of two rationals: gcd of numerators over lcm of denominators.

    Matches integer gcd on integers, so integer contents come out as expected.
    """
    an, ad = abs(num(a)), den(a)
    bn, bd = abs(num(b)), den(b)
    g = math.gcd(an, bn)
    l = ad // math.gcd(ad, bd) * bd
    return QQ(g, l)


def qmin(a, b):
    return a if a <= b else b


def qmax(a, b):
    return a if a >= b else b


def to_fraction(q) -> Fraction:
    return Fraction(num(q), den(q))
