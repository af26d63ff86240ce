from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=60,
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")

# Polarization grid used by the exhaustive cross-check sweeps.
SIGMA_GRID = (
    Fraction(0),
    Fraction(1, 10),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(1),
)


def probability_vector(rng, dim: int, zeros_ok: bool = True) -> list[Fraction]:
    """Random exact probability vector of length dim."""
    low = 0 if zeros_ok else 1
    weights = [rng.randint(low, 50) for _ in range(dim)]
    if sum(weights) == 0:
        weights[rng.randrange(dim)] = 1
    total = sum(weights)
    return [Fraction(w, total) for w in weights]
