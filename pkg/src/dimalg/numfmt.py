"""Exact decimal rendering of rationals.

All arithmetic is integer-based; floats never appear, so goldens are
reproducible bit for bit.
"""

from fractions import Fraction


def round_half_even(x: Fraction) -> int:
    """Nearest integer to x, ties going to the even neighbour."""
    q, r = divmod(x.numerator, x.denominator)
    twice = 2 * r
    if twice > x.denominator or (twice == x.denominator and q % 2 == 1):
        q += 1
    return q


def _floor_log10(x: Fraction) -> int:
    """floor(log10(x)) for x > 0, computed exactly."""
    e = 0
    if x >= 1:
        while x >= 10:
            x /= 10
            e += 1
    else:
        while x < 1:
            x *= 10
            e -= 1
    return e


def format_rational(x: Fraction, digits: int = 4) -> str:
    """Render x with exactly `digits` significant digits (half-even ties).

    Trailing zeros are kept so the digit count is visible in the output:
    Fraction(43, 10) at 4 digits renders as "4.300".
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    mag = -x if x < 0 else x
    e = _floor_log10(mag)
    scaled = mag * Fraction(10) ** (digits - 1 - e)
    n = round_half_even(scaled)
    if n == 10**digits:  # rounding bumped into the next decade
        n //= 10
        e += 1
    s = str(n)
    int_len = e + 1
    if e >= 0:
        if int_len >= digits:
            body = s + "0" * (int_len - digits)
        else:
            body = s[:int_len] + "." + s[int_len:]
    else:
        body = "0." + "0" * (-e - 1) + s
    return sign + body
