"""Closed forms for shared populations, biases, and critical subspace sizes.

These are the sharing-regime (k >= p) formulas:

    f = (1 + sigma)**p / 2**k        delta = ((1 + sigma)**p - 1) / (2**k - 1)

together with the critical size k_c = ceil(2p * log2(1 + sigma)) at which the
shared state stops being provably entanglable, and its inversion, the minimal
polarization sigma* = 2**(k/(2p)) - 1 that keeps k shared spins above the
entanglability border.  Concentration (k < p) has no closed form here; those
requests raise `ConcentrationError` and must go through the spectral path.

The only non-rational quantity is the logarithm inside k_c.  Its ceiling is
still computed exactly: for rational sigma, m >= 2p*log2(1 + sigma) holds iff
2**m * den**(2p) >= num**(2p) with 1 + sigma = num/den, a big-integer
comparison, so integral arguments are detected exactly rather than guessed
from a rounded value.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    ConcentrationError,
    DomainError,
    ThresholdUnreachableError,
)
from .exact import bracket_decimal, pow2_bracket


def f_pure(p: int, k: int) -> Fraction:
    """Population extracted onto k spins from p perfectly polarized ones."""
    if p < 0 or k < 1:
        raise DomainError(f"need p >= 0 and k >= 1, got p={p}, k={k}")
    if k < p:
        return Fraction(1)
    return Fraction(1 << p, 1 << k)


def delta_pure(p: int, k: int) -> Fraction:
    """Bias extracted onto k spins from p perfectly polarized ones."""
    if p < 0 or k < 1:
        raise DomainError(f"need p >= 0 and k >= 1, got p={p}, k={k}")
    if k < p:
        return Fraction(1)
    return Fraction((1 << p) - 1, (1 << k) - 1)


def _require_sharing(p: int, k: int, sigma: Fraction) -> None:
    if p < 0 or k < 1:
        raise DomainError(f"need p >= 0 and k >= 1, got p={p}, k={k}")
    if not 0 <= sigma <= 1:
        raise DomainError(f"polarization must lie in [0, 1], got {sigma}")
    if k < p:
        raise ConcentrationError(
            f"k={k} < p={p} concentrates rather than shares; the closed form "
            "does not apply, use the spectral path (overlap_f / reduce_by_blocking)"
        )


def f_partial(p: int, k: int, sigma: Fraction) -> Fraction:
    """Population for sharing p spins of polarization sigma over k >= p spins."""
    _require_sharing(p, k, sigma)
    return (1 + sigma) ** p / Fraction(1 << k)


def delta_partial(p: int, k: int, sigma: Fraction) -> Fraction:
    """Bias for sharing p spins of polarization sigma over k >= p spins."""
    _require_sharing(p, k, sigma)
    return ((1 + sigma) ** p - 1) / Fraction((1 << k) - 1)


@dataclass(frozen=True)
class SigmaThreshold:
    """The exact polarization border 2**exponent - 1 with rational exponent.

    Returned by `sigma_threshold`; kept symbolic because the value is
    irrational whenever the exponent is not an integer.  Rational floor/ceil
    brackets at any precision come from exact integer roots.
    """

    exponent: Fraction

    def __post_init__(self) -> None:
        if not 0 < self.exponent <= 1:
            raise DomainError(f"threshold exponent must lie in (0, 1], got {self.exponent}")

    def exact(self) -> Fraction | None:
        """The exact rational value, if there is one (integral exponent)."""
        if self.exponent.denominator == 1:
            return Fraction(2**self.exponent.numerator - 1)
        return None

    def bracket(self, digits: int) -> tuple[Fraction, Fraction]:
        """Rational lo <= value <= hi with width <= 10**-digits."""
        lo, hi = pow2_bracket(self.exponent, digits)
        return lo - 1, hi - 1

    def decimal(self, digits: int = 50) -> str:
        """The value rendered to `digits` significant digits."""
        return bracket_decimal(self.bracket, digits)

    def __float__(self) -> float:
        return 2.0 ** float(self.exponent) - 1.0


@dataclass(frozen=True)
class CriticalSize:
    """A critical subspace size: the ceiling of argument = 2p*log2(1 + sigma).

    `argument` is carried exactly (a Fraction) whenever it is provably
    integral or otherwise exactly representable; else it is a float kept for
    display only, since k_c itself is always computed by exact integer
    comparison, never from the float.
    """

    k_c: int
    argument: Union[Fraction, float]
    argument_is_integral: bool

    def __post_init__(self) -> None:
        if self.k_c < 1:
            raise DomainError(f"critical size must be >= 1, got {self.k_c}")
        if isinstance(self.argument, Fraction) and self.k_c != math.ceil(self.argument):
            raise DomainError("critical size disagrees with its exact argument")


def critical_k_pure(p: int) -> CriticalSize:
    """Critical size for perfectly polarized spins: exactly 2p."""
    if p < 1:
        raise DomainError(f"need p >= 1, got p={p}")
    return CriticalSize(2 * p, Fraction(2 * p), True)


def critical_k_partial(p: int, sigma: Fraction | SigmaThreshold) -> CriticalSize:
    """Smallest k at which sharing p spins of polarization sigma leaves the
    provably entanglable region.

    k_c = ceil(2p * log2(1 + sigma)), with the ceiling taken literally: a
    provably integral argument is its own ceiling.  Accepts either an exact
    rational polarization or a `SigmaThreshold` (where the argument
    2p*exponent is rational by construction).
    """
    if p < 1:
        raise DomainError(f"need p >= 1, got p={p}")
    if isinstance(sigma, SigmaThreshold):
        argument = 2 * p * sigma.exponent
        k_c = math.ceil(argument)
        return CriticalSize(k_c, argument, argument.denominator == 1)
    if not 0 < sigma <= 1:
        if sigma == 0:
            raise DomainError("sigma = 0 carries no bias to share; k_c is undefined")
        raise DomainError(f"polarization must lie in (0, 1], got {sigma}")
    one_plus = 1 + sigma
    power_num = one_plus.numerator ** (2 * p)
    power_den = one_plus.denominator ** (2 * p)
    k_c = 0
    while (1 << k_c) * power_den < power_num:
        k_c += 1
    if (1 << k_c) * power_den == power_num:
        return CriticalSize(k_c, Fraction(k_c), True)
    argument = 2 * p * math.log2(float(one_plus))
    return CriticalSize(k_c, argument, False)


def sigma_threshold(p: int, k: int) -> SigmaThreshold:
    """Minimal polarization keeping p spins shared over k provably entanglable.

    Inverts the critical-size condition: sigma* = 2**(k/(2p)) - 1.  Raises
    `ThresholdUnreachableError` when sigma* would exceed 1, i.e. no physical
    polarization suffices.
    """
    if not k >= p >= 1:
        raise DomainError(f"need k >= p >= 1, got p={p}, k={k}")
    exponent = Fraction(k, 2 * p)
    if exponent > 1:
        raise ThresholdUnreachableError(
            f"sharing {p} spins over {k} needs polarization 2**({exponent}) - 1 > 1; "
            "no polarization level suffices"
        )
    return SigmaThreshold(exponent)
