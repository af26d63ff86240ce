"""Dense brute-force reference implementation for small qubit counts.

Everything here expands states to their full 2**n diagonal and does the
obvious thing, independently of the run-length-encoded fast path, so that
agreement between the two is a genuine cross-check.  Capped at n <= 20.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .errors import DomainError, ResourceError
from .spectrum import EnsembleSpec

_MAX_QUBITS = 20


@dataclass(frozen=True)
class DenseDiagonal:
    """Full diagonal of a density operator in computational-basis order."""

    qubits: int
    entries: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.qubits <= _MAX_QUBITS:
            raise ResourceError(
                f"dense oracle handles 0 <= n <= {_MAX_QUBITS}, got {self.qubits}"
            )
        if len(self.entries) != 1 << self.qubits:
            raise DomainError(
                f"expected {1 << self.qubits} entries, got {len(self.entries)}"
            )
        if any(e < 0 for e in self.entries):
            raise DomainError("diagonal entries must be >= 0")
        if sum(self.entries) != 1:
            raise DomainError("diagonal entries must sum to exactly 1")


def dense_build(spec: EnsembleSpec) -> DenseDiagonal:
    """Diagonal of the product state; polarized spins occupy the leading bits."""
    if spec.n > _MAX_QUBITS:
        raise ResourceError(f"dense oracle capped at n <= {_MAX_QUBITS}, got {spec.n}")
    up = (1 + spec.sigma) / 2
    down = (1 - spec.sigma) / 2
    mixed_weight = Fraction(1, 1 << (spec.n - spec.p))
    entries = []
    for basis in range(1 << spec.n):
        value = mixed_weight
        for j in range(spec.p):
            bit = (basis >> (spec.n - 1 - j)) & 1
            value *= down if bit else up
        entries.append(value)
    return DenseDiagonal(spec.n, tuple(entries))


def dense_partial_trace(diagonal: DenseDiagonal, keep: int) -> DenseDiagonal:
    """Trace out the trailing qubits, keeping the `keep` leading ones."""
    if not 0 <= keep <= diagonal.qubits:
        raise DomainError(f"cannot keep {keep} of {diagonal.qubits} qubits")
    width = 1 << (diagonal.qubits - keep)
    entries = tuple(
        sum(diagonal.entries[i * width : (i + 1) * width]) for i in range(1 << keep)
    )
    return DenseDiagonal(keep, entries)


def dense_cyclic_average(diagonal: DenseDiagonal) -> DenseDiagonal:
    """Average the trailing 2**k - 1 entries over all their cyclic shifts.

    Literal implementation: every shift is accumulated entry by entry.
    Input must already be sorted descending (the ordered eigenbasis).
    """
    if diagonal.qubits == 0:
        raise DomainError("cyclic averaging needs at least one qubit")
    if any(a < b for a, b in zip(diagonal.entries, diagonal.entries[1:])):
        raise DomainError("cyclic averaging expects a descending diagonal")
    tail = diagonal.entries[1:]
    m = len(tail)
    accumulated = [Fraction(0)] * m
    for shift in range(m):
        for i in range(m):
            accumulated[i] += tail[(i + shift) % m]
    averaged = tuple(total / m for total in accumulated)
    return DenseDiagonal(diagonal.qubits, (diagonal.entries[0],) + averaged)


def dense_overlap_f(diagonal: DenseDiagonal, k: int) -> Fraction:
    """Overlap ratio against the k-qubit reference state, by explicit sums.

    The reference is dense_build(n, k, 1): 2**(n-k) equal leading entries.
    The input is sorted descending first so the trace runs in the ordered
    eigenbasis.
    """
    if not 1 <= k <= diagonal.qubits:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={diagonal.qubits}")
    ordered = sorted(diagonal.entries, reverse=True)
    reference = dense_build(EnsembleSpec(diagonal.qubits, k, Fraction(1))).entries
    numerator = sum(a * b for a, b in zip(ordered, reference))
    denominator = sum(b * b for b in reference)
    return numerator / denominator


def sorted_dense(diagonal: DenseDiagonal) -> DenseDiagonal:
    """The same diagonal rewritten in its ordered eigenbasis."""
    return DenseDiagonal(diagonal.qubits, tuple(sorted(diagonal.entries, reverse=True)))


def rle_sorted(diagonal: DenseDiagonal) -> tuple[tuple[Fraction, int], ...]:
    """Descending (value, multiplicity) pairs; for comparison against spectra."""
    ordered = sorted(diagonal.entries, reverse=True)
    return tuple((value, len(list(group))) for value, group in groupby(ordered))
