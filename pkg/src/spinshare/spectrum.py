"""Run-length-encoded spectra of diagonal density operators.

A `Spectrum` is the eigenvalue multiset of a diagonal state on `qubits`
spins, stored in strictly descending (value, multiplicity) runs.  Keeping
runs instead of 2**n entries lets the same exact code sweep ensembles of
hundreds of qubits.  All operations are pure functions over immutable
values and validate the three structural invariants on every construction:
unit trace, total multiplicity 2**n, strict descending order.

Vocabulary used throughout: n total qubits, p polarized qubits with
polarization sigma, k the size of the extracted subspace, f the largest
eigenvalue (the population of the target state), delta the pseudopure bias.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, NamedTuple

from .errors import DomainError, ValidityError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Run(NamedTuple):
    value: Fraction
    count: int


@dataclass(frozen=True)
class Spectrum:
    """Descending eigenvalue runs of a diagonal state on `qubits` spins."""

    qubits: int
    runs: tuple[Run, ...]

    def __post_init__(self) -> None:
        if self.qubits < 0:
            raise DomainError(f"qubit count must be >= 0, got {self.qubits}")
        if not self.runs:
            raise DomainError("a spectrum needs at least one run")
        previous = None
        total = 0
        trace = _ZERO
        for value, count in self.runs:
            if count <= 0:
                raise DomainError("run multiplicities must be positive")
            if value < 0:
                raise DomainError(f"eigenvalues must be >= 0, got {value}")
            if previous is not None and value >= previous:
                raise DomainError("runs must be strictly descending")
            previous = value
            total += count
            trace += value * count
        if total != self.dimension:
            raise DomainError(f"multiplicities sum to {total}, expected {self.dimension}")
        if trace != 1:
            raise DomainError(f"trace is {trace}, expected exactly 1")

    @classmethod
    def from_pairs(cls, qubits: int, pairs: Iterable[tuple[Fraction, int]]) -> Spectrum:
        """Build a spectrum from unsorted (value, multiplicity) pairs.

        Pairs are sorted descending and equal values merged into one run, so
        callers never have to care about ordering or degeneracy bookkeeping.
        """
        merged: dict[Fraction, int] = {}
        for value, count in pairs:
            if count:
                key = Fraction(value)
                merged[key] = merged.get(key, 0) + count
        runs = tuple(
            Run(value, merged[value]) for value in sorted(merged, reverse=True)
        )
        return cls(qubits, runs)

    @classmethod
    def maximally_mixed(cls, qubits: int) -> Spectrum:
        return cls(qubits, (Run(Fraction(1, 1 << qubits), 1 << qubits),))

    @classmethod
    def pure(cls, qubits: int) -> Spectrum:
        if qubits == 0:
            return cls(0, (Run(_ONE, 1),))
        return cls(qubits, (Run(_ONE, 1), Run(_ZERO, (1 << qubits) - 1)))

    @property
    def dimension(self) -> int:
        return 1 << self.qubits

    @property
    def max_eigenvalue(self) -> Fraction:
        return self.runs[0].value

    def top_sum(self, count: int) -> Fraction:
        """Sum of the `count` largest eigenvalues."""
        if not 0 <= count <= self.dimension:
            raise DomainError(f"cannot take top {count} of dimension {self.dimension}")
        total = _ZERO
        remaining = count
        for value, multiplicity in self.runs:
            take = min(multiplicity, remaining)
            total += value * take
            remaining -= take
            if remaining == 0:
                break
        return total

    def expand(self) -> tuple[Fraction, ...]:
        """Dense descending eigenvalue list; guarded, for small spectra only."""
        if self.qubits > 20:
            raise DomainError("refusing to expand a spectrum beyond 2**20 entries")
        out: list[Fraction] = []
        for value, count in self.runs:
            out.extend([value] * count)
        return tuple(out)


@dataclass(frozen=True)
class EnsembleSpec:
    """An n-qubit ensemble with p uniformly polarized spins, the rest maximally mixed.

    `sigma` is the single-spin polarization: each polarized spin has
    eigenvalues (1 + sigma)/2 and (1 - sigma)/2.
    """

    n: int
    p: int
    sigma: Fraction

    def __post_init__(self) -> None:
        if not 0 <= self.p <= self.n:
            raise DomainError(f"need 0 <= p <= n, got p={self.p}, n={self.n}")
        if not 0 <= self.sigma <= 1:
            raise DomainError(f"polarization must lie in [0, 1], got {self.sigma}")


@dataclass(frozen=True)
class PseudopureState:
    """A k-qubit pseudopure state, identified by its bias delta.

    The spectrum is one eigenvalue f followed by 2**k - 1 equal eigenvalues
    (1 - f)/(2**k - 1), with f = (delta*(2**k - 1) + 1)/2**k.
    """

    k: int
    delta: Fraction

    def __post_init__(self) -> None:
        if self.k < 1:
            raise DomainError("a pseudopure state needs at least one qubit")
        if not 0 <= self.delta <= 1:
            raise DomainError(f"bias must lie in [0, 1], got {self.delta}")

    @property
    def max_eigenvalue(self) -> Fraction:
        return f_from_bias(self.delta, self.k)

    def spectrum(self) -> Spectrum:
        dim = 1 << self.k
        f = self.max_eigenvalue
        return Spectrum.from_pairs(
            self.k, [(f, 1), (Fraction(1 - f, dim - 1), dim - 1)]
        )


def make_product_state(spec: EnsembleSpec) -> Spectrum:
    """Spectrum of p spins at polarization sigma alongside n - p maximally mixed spins.

    Distinct values are ((1+sigma)/2)**j * ((1-sigma)/2)**(p-j) / 2**(n-p)
    with multiplicity 2**(n-p) * C(p, j); equal values (sigma in {0, 1})
    merge into single runs.
    """
    up = (1 + spec.sigma) / 2
    down = (1 - spec.sigma) / 2
    mixed_weight = Fraction(1, 1 << (spec.n - spec.p))
    pairs = [
        (up**j * down ** (spec.p - j) * mixed_weight,
         (1 << (spec.n - spec.p)) * comb(spec.p, j))
        for j in range(spec.p, -1, -1)
    ]
    return Spectrum.from_pairs(spec.n, pairs)


def make_thermal_state(
    n: int, boltzmann: Fraction, half_factor: bool = True
) -> Spectrum:
    """Spectrum of the high-temperature thermal state of n identical spins.

    Eigenvalues are (1 + c*(n - 2w))/2**n over Hamming weights w with
    multiplicity C(n, w), where c = boltzmann/2 under the literal
    high-temperature expansion (`half_factor` set) and c = boltzmann under
    the per-transition convention.  Raises `ValidityError` when the bias is
    large enough to drive an eigenvalue negative, i.e. outside the regime
    where the expansion is a state at all.
    """
    if n < 1:
        raise DomainError("thermal state needs n >= 1")
    c = boltzmann / 2 if half_factor else Fraction(boltzmann)
    pairs = []
    for w in range(n + 1):
        value = Fraction(1, 1 << n) * (1 + c * (n - 2 * w))
        if value < 0:
            raise ValidityError(
                f"eigenvalue {value} < 0 at weight {w}: bias {boltzmann} is "
                f"too large for the high-temperature form on {n} qubits"
            )
        pairs.append((value, comb(n, w)))
    return Spectrum.from_pairs(n, pairs)


def reduce_by_blocking(s: Spectrum, k: int) -> Spectrum:
    """Reduce to k qubits by summing consecutive blocks of the sorted spectrum.

    The i-th output eigenvalue is the sum of the i-th block of 2**(n-k)
    consecutive eigenvalues of the descending spectrum.  For diagonal states
    written in their ordered eigenbasis this is the partial trace over n - k
    spins, and ordering first maximizes the leading eigenvalue.  Runs are
    split arithmetically, never expanded, so blocks interior to a run
    collapse to a single output run.
    """
    if not 0 <= k <= s.qubits:
        raise DomainError(f"cannot block-reduce {s.qubits} qubits to {k}")
    if k == s.qubits:
        return s
    block = 1 << (s.qubits - k)
    pairs: list[tuple[Fraction, int]] = []
    partial = _ZERO
    need = block
    for value, count in s.runs:
        while count:
            if need == block and count >= block:
                whole_blocks, count = count // block, count % block
                pairs.append((value * block, whole_blocks))
                continue
            take = min(count, need)
            partial += value * take
            count -= take
            need -= take
            if need == 0:
                pairs.append((partial, 1))
                partial = _ZERO
                need = block
    return Spectrum.from_pairs(k, pairs)


def pseudopurify(s: Spectrum) -> tuple[PseudopureState, Spectrum]:
    """Average the trailing 2**k - 1 eigenvalues into the pseudopure form.

    Averaging over cyclic permutations of the trailing elements keeps the
    maximum eigenvalue fixed and equalizes the rest, which is the best any
    non-unitary averaging can do, so the returned bias is the maximal one
    for the input spectrum.  Idempotent; preserves trace exactly.
    """
    if s.qubits == 0:
        raise DomainError("cyclic averaging needs at least one qubit")
    f = s.max_eigenvalue
    state = PseudopureState(s.qubits, bias_from_f(f, s.qubits))
    return state, state.spectrum()


def overlap_f(spec: EnsembleSpec, k: int) -> Fraction:
    """Largest achievable k-qubit population f for an ensemble.

    Equals the sum of the largest 2**(n-k) eigenvalues of the ensemble
    spectrum, which is the leading eigenvalue after `reduce_by_blocking`
    to k qubits.  This is the overlap ratio Tr(rho rho') / Tr(rho'**2)
    against the reference state rho' with the first 2**(n-k) ordered
    eigenvalues equal; since Tr(rho'**2) = 2**-(n-k), the normalization
    makes the self-overlap exactly 1.
    """
    if not 1 <= k <= spec.n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={spec.n}")
    return make_product_state(spec).top_sum(1 << (spec.n - k))


def bias_from_f(f: Fraction, k: int) -> Fraction:
    """Bias delta of a k-qubit pseudopure state with largest eigenvalue f."""
    if k < 1:
        raise DomainError("bias needs k >= 1")
    dim = 1 << k
    if not Fraction(1, dim) <= f <= 1:
        raise DomainError(
            f"largest eigenvalue {f} outside [2**-{k}, 1]; bias would be negative"
        )
    return Fraction(dim * f - 1, dim - 1)


def f_from_bias(delta: Fraction, k: int) -> Fraction:
    """Inverse of `bias_from_f`; the round trip is an exact identity."""
    if k < 1:
        raise DomainError("bias needs k >= 1")
    if not 0 <= delta <= 1:
        raise DomainError(f"bias must lie in [0, 1], got {delta}")
    dim = 1 << k
    return Fraction(delta * (dim - 1) + 1, dim)
