"""Exact scalar helpers: rational parsing, decimal rendering, integer roots.

Every eigenvalue, bias, and bound comparison in this package is a
`fractions.Fraction`; nothing rounds inside a computation.  The helpers here
serve the two places where irrational numbers appear at the edges:

* rendering values such as 2**(3/4) - 1 to a stated number of digits, and
* bracketing them between provable rationals so that comparisons and
  tolerance checks stay exact (floor/ceil brackets from integer roots,
  never floating point).
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from math import isqrt

from .errors import DomainError

Scalar = Fraction


def parse_scalar(text: str | int | Fraction) -> Fraction:
    """Parse a scalar given as "num/den", a decimal string, or a number.

    Decimal strings are parsed exactly ("0.032" becomes 4/125); floats are
    rejected because their binary value is rarely the decimal the caller
    meant.
    """
    if isinstance(text, float):
        raise DomainError(
            f"refusing float {text!r}; pass a string or Fraction for exactness"
        )
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a valid exact scalar: {text!r}") from exc


def decimal_str(value: Fraction, digits: int = 15) -> str:
    """Correctly rounded decimal rendering of a rational, `digits` significant digits."""
    if digits < 1:
        raise DomainError("need at least one significant digit")
    with localcontext() as ctx:
        ctx.prec = digits
        quotient = Decimal(value.numerator) / Decimal(value.denominator)
    return str(quotient)


def int_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) computed exactly on integers, x >= 0, n >= 1."""
    if x < 0 or n < 1:
        raise DomainError("int_nth_root needs x >= 0 and n >= 1")
    if n == 1 or x in (0, 1):
        return x
    if n == 2:
        return isqrt(x)
    # Newton iteration from an upper-bound seed; lands within a step of the floor.
    root = 1 << -(-x.bit_length() // n)
    while True:
        step = ((n - 1) * root + x // root ** (n - 1)) // n
        if step >= root:
            break
        root = step
    while root**n > x:
        root -= 1
    while (root + 1) ** n <= x:
        root += 1
    return root


def root_bracket(x: int, n: int, digits: int) -> tuple[Fraction, Fraction]:
    """Rational lo <= x**(1/n) <= hi with hi - lo <= 10**-digits (0 when exact)."""
    if x < 0:
        raise DomainError("root_bracket needs x >= 0")
    scale = 10**digits
    floor = int_nth_root(x * scale**n, n)
    lo = Fraction(floor, scale)
    if floor**n == x * scale**n:
        return lo, lo
    return lo, Fraction(floor + 1, scale)


def pow2_bracket(exponent: Fraction, digits: int) -> tuple[Fraction, Fraction]:
    """Rational bracket of 2**exponent for a nonnegative rational exponent."""
    if exponent < 0:
        raise DomainError("pow2_bracket needs a nonnegative exponent")
    if exponent.denominator == 1:
        exact = Fraction(2**exponent.numerator)
        return exact, exact
    return root_bracket(2**exponent.numerator, exponent.denominator, digits)


def bracket_decimal(bracket, digits: int) -> str:
    """Render an irrational to `digits` significant digits from its bracket function.

    `bracket` maps a guard-digit count to a rational (lo, hi) enclosure.  The
    enclosure is tightened until both ends round to the same string, so the
    result is the correct rounding except on exact rounding-boundary ties.
    """
    lo_str = hi_str = ""
    for guard in (digits + 8, digits + 24, digits + 72):
        lo, hi = bracket(guard)
        lo_str = decimal_str(lo, digits)
        hi_str = decimal_str(hi, digits)
        if lo_str == hi_str:
            break
    return lo_str
