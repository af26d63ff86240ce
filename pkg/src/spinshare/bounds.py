"""Separability and entanglability bounds with exact region classification.

A k-qubit pseudopure bias delta is provably separable (region S) at or below
a lower bound, provably entanglable (region E) above the upper bound
1/(1 + 2**(k/2)), and undecided (region ES) in between.  Two lower-bound
families are supported: the Braunstein bound 1/(1 + 2**(2k-1)), which is
rational, and the tighter Gurvits-Barnum bound 3/(2 * 6**(k/2)).

The k/2 powers are irrational for odd k, so bounds are never materialized as
approximations inside a verdict.  Every comparison against a rational delta
reduces to a big-integer inequality:

    delta > 1/(1 + 2**(k/2))   <=>   delta**2 * 2**k > (1 - delta)**2
    delta > 3/(2 * 6**(k/2))   <=>   4 * delta**2 * 6**k > 9

which keeps exact ties (the borders the region convention depends on)
decidable.  A border value belongs to the less entangled region: delta on
the lower bound classifies as S, delta on the upper bound as ES.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Callable, Optional

from .errors import ConsistencyError, DomainError
from .exact import bracket_decimal


class Region(IntEnum):
    """Bias regions ordered from provably separable to provably entanglable."""

    S = 0
    ES = 1
    E = 2


class BoundFamily(str, Enum):
    BRAUNSTEIN = "braunstein"
    GURVITS_BARNUM = "gb"


class ThermalConvention(str, Enum):
    """How the thermal Boltzmann factor maps onto a per-spin eigenvalue shift."""

    HALF_FACTOR = "half_factor"
    PER_TRANSITION = "per_transition"


@dataclass(frozen=True)
class RegionVerdict:
    region: Region
    family: BoundFamily
    on_border: bool


@dataclass(frozen=True)
class ExactBound:
    """Comparison handle for a bound of the form num / (add + mul * base**(k/2)).

    Comparisons against rational values are exact big-integer sign tests;
    decimal renderings at any precision come from integer-root brackets.
    """

    num: int
    add: int
    mul: int
    base: int
    k: int

    def compare(self, value: Fraction) -> int:
        """Sign of value - bound, computed exactly; value must be >= 0."""
        if value < 0:
            raise DomainError(f"bounds are compared against biases >= 0, got {value}")
        # sign(value*(add + mul*base**(k/2)) - num) = sign(x + t*sqrt(base))
        x = value * self.add - self.num
        linear = value * self.mul
        if self.k % 2 == 0:
            return _sign(x + linear * self.base ** (self.k // 2))
        t = linear * self.base ** ((self.k - 1) // 2)
        if t == 0:
            return _sign(x)
        if x >= 0:
            return 1
        return _sign(t * t * self.base - x * x)

    def exceeded_by(self, value: Fraction) -> bool:
        return self.compare(value) > 0

    def bracket(self, digits: int) -> tuple[Fraction, Fraction]:
        """Rational enclosure of the bound, width shrinking with `digits`."""
        if self.k % 2 == 0:
            exact = Fraction(self.num, self.add + self.mul * self.base ** (self.k // 2))
            return exact, exact
        scale = 10**digits
        root_floor = isqrt(self.base**self.k * scale * scale)
        root_lo = Fraction(root_floor, scale)
        root_hi = Fraction(root_floor + 1, scale)
        return (
            Fraction(self.num) / (self.add + self.mul * root_hi),
            Fraction(self.num) / (self.add + self.mul * root_lo),
        )

    def decimal(self, digits: int = 15) -> str:
        return bracket_decimal(self.bracket, digits)

    def __float__(self) -> float:
        return self.num / (self.add + self.mul * self.base ** (self.k / 2))


def _sign(value: Fraction) -> int:
    return (value > 0) - (value < 0)


def _require_k(k: int) -> None:
    # Entanglement of a single spin is not a meaningful notion here.
    if k < 2:
        raise DomainError(f"region bounds need k >= 2 spins, got k={k}")


def delta_lower_braunstein(k: int) -> Fraction:
    """Braunstein separability bound 1/(1 + 2**(2k-1)); exactly rational."""
    _require_k(k)
    return Fraction(1, 1 + (1 << (2 * k - 1)))


def delta_lower_gb(k: int) -> ExactBound:
    """Gurvits-Barnum separability bound 3/(2 * 6**(k/2))."""
    _require_k(k)
    return ExactBound(num=3, add=0, mul=2, base=6, k=k)


def delta_upper(k: int) -> ExactBound:
    """Entanglability bound 1/(1 + 2**(k/2))."""
    _require_k(k)
    return ExactBound(num=1, add=1, mul=1, base=2, k=k)


@lru_cache(maxsize=None)
def _check_bound_order(family: BoundFamily, k: int) -> None:
    """Sanity check lower(k) < upper(k), proven through rational brackets."""
    upper = delta_upper(k)
    if family is BoundFamily.BRAUNSTEIN:
        if upper.compare(delta_lower_braunstein(k)) >= 0:
            raise ConsistencyError(f"bound ordering violated at k={k} (braunstein)")
        return
    lower = delta_lower_gb(k)
    for digits in (30, 60, 120):
        _, lower_hi = lower.bracket(digits)
        upper_lo, _ = upper.bracket(digits)
        if lower_hi < upper_lo:
            return
    raise ConsistencyError(f"bound ordering not established at k={k} (gb)")


def classify_region(
    delta: Fraction, k: int, family: BoundFamily = BoundFamily.GURVITS_BARNUM
) -> RegionVerdict:
    """Classify a bias exactly: S at or below the lower bound, E above the
    upper bound, ES in between; borders belong to the less entangled region."""
    _require_k(k)
    if not 0 <= delta <= 1:
        raise DomainError(f"bias must lie in [0, 1], got {delta}")
    _check_bound_order(family, k)
    if family is BoundFamily.BRAUNSTEIN:
        against_lower = _sign(delta - delta_lower_braunstein(k))
    else:
        against_lower = delta_lower_gb(k).compare(delta)
    if against_lower <= 0:
        return RegionVerdict(Region.S, family, against_lower == 0)
    against_upper = delta_upper(k).compare(delta)
    if against_upper > 0:
        return RegionVerdict(Region.E, family, False)
    return RegionVerdict(Region.ES, family, against_upper == 0)


def crossover_k(
    delta_of_k: Callable[[int], Fraction],
    from_region: Region,
    to_region: Region,
    family: BoundFamily = BoundFamily.GURVITS_BARNUM,
    *,
    k_start: int = 2,
    k_max: int = 64,
) -> Optional[int]:
    """Minimal k in [k_start, k_max] where the verdict switches as requested.

    The whole scan is classified first and required to be monotone (no region
    is ever re-entered); a violation raises `ConsistencyError`.  Returns None
    when the requested transition does not occur by k_max.
    """
    if k_start < 2 or k_max < k_start:
        raise DomainError(f"need 2 <= k_start <= k_max, got {k_start}..{k_max}")
    verdicts = [
        (k, classify_region(delta_of_k(k), k, family).region)
        for k in range(k_start, k_max + 1)
    ]
    seen: list[Region] = []
    for _, region in verdicts:
        if not seen or seen[-1] is not region:
            if region in seen:
                raise ConsistencyError(
                    f"verdict sequence re-enters region {region.name}; "
                    "bias curve is not monotone against the bounds"
                )
            seen.append(region)
    for (_, before), (k, after) in zip(verdicts, verdicts[1:]):
        if before is from_region and after is to_region:
            return k
    return None


def sharing_curve(p: int, sigma: Fraction) -> Callable[[int], Fraction]:
    """The bias-versus-k curve for sharing p spins of polarization sigma."""
    from .formulas import delta_partial

    return lambda k: delta_partial(p, k, sigma)


def sharing_crossover(
    p: int,
    sigma: Fraction,
    from_region: Region,
    to_region: Region,
    family: BoundFamily = BoundFamily.GURVITS_BARNUM,
    *,
    k_max: int = 64,
) -> Optional[int]:
    """Crossover scan for the sharing curve, starting at k = max(p, 2)."""
    if p < 1:
        raise DomainError(f"need p >= 1, got p={p}")
    return crossover_k(
        sharing_curve(p, sigma),
        from_region,
        to_region,
        family,
        k_start=max(p, 2),
        k_max=k_max,
    )


def thermal_bias(
    k: int, boltzmann: Fraction, convention: ThermalConvention
) -> Fraction:
    """Pseudopure bias of the k-spin thermal state: c*k/(2**k - 1).

    c is boltzmann/2 under HALF_FACTOR (the literal high-temperature
    expansion) and boltzmann under PER_TRANSITION.  Evaluated as a formula,
    so it extends smoothly beyond the expansion's validity region.
    """
    if k < 1:
        raise DomainError(f"need k >= 1, got k={k}")
    c = boltzmann / 2 if convention is ThermalConvention.HALF_FACTOR else boltzmann
    return c * k / ((1 << k) - 1)


def thermal_crossover(
    boltzmann: Fraction,
    convention: ThermalConvention,
    *,
    k_max: int = 256,
) -> Optional[int]:
    """Minimal k whose thermal bias exceeds the Gurvits-Barnum lower bound.

    This is where the thermal pseudopure state first escapes the provably
    separable region.  All comparisons are exact integer inequalities.
    """
    if boltzmann <= 0:
        raise DomainError(f"need a positive Boltzmann factor, got {boltzmann}")
    for k in range(2, k_max + 1):
        if delta_lower_gb(k).exceeded_by(thermal_bias(k, boltzmann, convention)):
            return k
    return None


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of one exact bias-versus-bound comparison."""

    holds: bool
    delta: Fraction
    margin_decimal: str


def pure_bias_above_gb(p: int, k: int, digits: int = 15) -> BoundCheck:
    """Check (2**p - 1)/(2**k - 1) > 3/(2 * 6**(k/2)) by exact integers.

    The sharing bias of p pure spins against the Gurvits-Barnum bound; the
    decimal margin is informational, the verdict never depends on it.
    """
    if not (k >= p >= 1 and k >= 2):
        raise DomainError(f"need k >= p >= 1 and k >= 2, got p={p}, k={k}")
    from .formulas import delta_pure

    delta = delta_pure(p, k)
    bound = delta_lower_gb(k)
    margin = bracket_decimal(
        lambda digits_: _difference_bracket(delta, bound, digits_), digits
    )
    return BoundCheck(bound.exceeded_by(delta), delta, margin)


def _difference_bracket(
    value: Fraction, bound: ExactBound, digits: int
) -> tuple[Fraction, Fraction]:
    lo, hi = bound.bracket(digits)
    return value - hi, value - lo


def verify_never_separable(k_max: int = 64) -> int:
    """Sweep all 1 <= p <= k for k = 2..k_max against the Gurvits-Barnum bound.

    Asserts that every pure-sharing bias exceeds the bound (so sharing pure
    spins never lands in S) and that the slack is smallest at p = 1.
    Returns the number of cases checked; raises `ConsistencyError` on any
    violation.
    """
    if k_max < 2:
        raise DomainError(f"need k_max >= 2, got {k_max}")
    from .formulas import delta_pure

    cases = 0
    for k in range(2, k_max + 1):
        bound = delta_lower_gb(k)
        smallest = None
        for p in range(1, k + 1):
            delta = delta_pure(p, k)
            if not bound.exceeded_by(delta):
                raise ConsistencyError(
                    f"pure sharing bias {delta} at p={p}, k={k} does not exceed "
                    "the Gurvits-Barnum bound"
                )
            if smallest is None or delta < smallest:
                smallest = delta
            cases += 1
        if smallest != delta_pure(1, k):
            raise ConsistencyError(f"minimal slack at k={k} is not at p=1")
    return cases
