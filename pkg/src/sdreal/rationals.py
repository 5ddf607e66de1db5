"""Exact rational scalars.

Every coefficient, approximation and integral in this package is an exact
rational in lowest terms with a positive denominator.  The default backend
is gmpy2's C-implemented ``mpq``; setting the environment variable
``SDREAL_PURE_PYTHON=1`` (or not having gmpy2 installed) selects the
stdlib ``fractions.Fraction`` instead.  Both are normalized on
construction, interoperate with Python ints, and hash consistently within
one process, which is all the rest of the package relies on.
"""

import os
from fractions import Fraction

_backend = "fraction"
if not os.environ.get("SDREAL_PURE_PYTHON"):
    try:
        from gmpy2 import mpq as _mpq

        _backend = "gmpy2"
    except ImportError:
        pass

BACKEND = _backend

if _backend == "gmpy2":

    def Rat(numerator, denominator=1):
        """Exact rational, normalized (gmpy2 backend)."""
        return _mpq(numerator, denominator)

else:

    def Rat(numerator, denominator=1):
        """Exact rational, normalized (stdlib Fraction backend)."""
        return Fraction(numerator, denominator)


def rat_str(q):
    """Render ``p/q`` in lowest terms, integers without the ``/1``."""
    num, den = q.numerator, q.denominator
    return str(num) if den == 1 else f"{num}/{den}"


def parse_rat(text):
    """Parse ``p/q``, an integer, or a decimal literal, all exactly.

    ``1.5`` becomes 3/2 and ``0.7`` becomes 7/10; no binary rounding
    happens anywhere.
    """
    f = Fraction(text.strip())
    return Rat(f.numerator, f.denominator)


def decimal_str(q, digits):
    """Correctly rounded decimal rendering with `digits` fractional digits.

    Rounding is to nearest, ties away from zero; the result is a plain
    decimal string, sign included.
    """
    if digits < 0:
        raise ValueError("digits must be >= 0")
    num, den = q.numerator, q.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled, rem = divmod(num * 10**digits, den)
    if 2 * rem >= den:
        scaled += 1
    if digits == 0:
        return f"{sign}{scaled}"
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"
