"""Sharing reports: per-k sweep rows with exact and decimal renderings.

A report row carries the subspace size k, the extractable population f and
bias delta, the bound values, and the region verdict.  Exact values are
serialized as "num/den" strings next to decimal renderings, so emitted files
are both human-readable and lossless; parsing a file back and recomputing
each row from the metadata must reproduce the exact strings byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from ._version import __version__
from .bounds import (
    BoundFamily,
    Region,
    ThermalConvention,
    classify_region,
    delta_lower_braunstein,
    delta_lower_gb,
    delta_upper,
    thermal_bias,
)
from .errors import DomainError
from .exact import decimal_str
from .formulas import delta_partial, f_partial
from .spectrum import EnsembleSpec, bias_from_f, f_from_bias, overlap_f

CSV_COLUMNS = (
    "k",
    "f_exact",
    "f_dec",
    "delta_exact",
    "delta_dec",
    "delta_l_exact_or_dec",
    "delta_u_dec",
    "region",
    "on_border",
)


@dataclass(frozen=True)
class ReportMeta:
    p: Optional[int] = None
    sigma: Optional[Fraction] = None
    boltzmann: Optional[Fraction] = None
    bound: BoundFamily = BoundFamily.GURVITS_BARNUM
    convention: Optional[ThermalConvention] = None
    precision: int = 15
    note: Optional[str] = None
    generator_version: str = __version__


@dataclass(frozen=True)
class ReportRow:
    k: int
    f: Fraction
    delta: Fraction
    region: Region
    on_border: bool


@dataclass(frozen=True)
class SharingReport:
    meta: ReportMeta
    rows: tuple[ReportRow, ...]


def _sharing_row(p: int, sigma: Fraction, k: int, family: BoundFamily) -> ReportRow:
    if k >= p:
        f = f_partial(p, k, sigma)
        delta = delta_partial(p, k, sigma)
    else:
        # Concentration has no closed form; extra mixed qubits do not change
        # the outcome, so the minimal ensemble n = p suffices.
        f = overlap_f(EnsembleSpec(max(p, k), p, sigma), k)
        delta = bias_from_f(f, k)
    verdict = classify_region(delta, k, family)
    return ReportRow(k, f, delta, verdict.region, verdict.on_border)


def build_sharing_report(
    p: int,
    sigma: Fraction,
    k_min: int = 2,
    k_max: int = 16,
    n: Optional[int] = None,
    family: BoundFamily = BoundFamily.GURVITS_BARNUM,
    precision: int = 15,
    note: Optional[str] = None,
) -> SharingReport:
    """One row per subspace size k; n (when given) only caps the range."""
    if p < 0:
        raise DomainError(f"need p >= 0, got p={p}")
    if not 2 <= k_min <= k_max:
        raise DomainError(f"need 2 <= k_min <= k_max, got {k_min}..{k_max}")
    if n is not None and (n < p or n < k_max):
        raise DomainError(f"n={n} cannot host p={p} polarized spins and k up to {k_max}")
    meta = ReportMeta(
        p=p, sigma=sigma, bound=family, precision=precision, note=note
    )
    rows = tuple(
        _sharing_row(p, sigma, k, family) for k in range(k_min, k_max + 1)
    )
    return SharingReport(meta, rows)


def build_thermal_report(
    boltzmann: Fraction,
    convention: ThermalConvention,
    k_min: int = 2,
    k_max: int = 16,
    family: BoundFamily = BoundFamily.GURVITS_BARNUM,
    precision: int = 15,
    note: Optional[str] = None,
) -> SharingReport:
    """Per-k rows for the thermal pseudopure bias curve."""
    if boltzmann <= 0:
        raise DomainError(f"need a positive Boltzmann factor, got {boltzmann}")
    if not 2 <= k_min <= k_max:
        raise DomainError(f"need 2 <= k_min <= k_max, got {k_min}..{k_max}")
    meta = ReportMeta(
        boltzmann=boltzmann,
        bound=family,
        convention=convention,
        precision=precision,
        note=note,
    )
    rows = []
    for k in range(k_min, k_max + 1):
        delta = thermal_bias(k, boltzmann, convention)
        verdict = classify_region(delta, k, family)
        rows.append(ReportRow(k, f_from_bias(delta, k), delta, verdict.region, verdict.on_border))
    return SharingReport(meta, tuple(rows))


def recompute_row(meta: ReportMeta, k: int) -> ReportRow:
    """Rebuild one row from report metadata; the round-trip check hinges on this."""
    if meta.boltzmann is not None:
        if meta.convention is None:
            raise DomainError("thermal rows need a convention")
        delta = thermal_bias(k, meta.boltzmann, meta.convention)
        verdict = classify_region(delta, k, meta.bound)
        return ReportRow(k, f_from_bias(delta, k), delta, verdict.region, verdict.on_border)
    if meta.p is None or meta.sigma is None:
        raise DomainError("sharing rows need p and sigma")
    return _sharing_row(meta.p, meta.sigma, k, meta.bound)


def _row_cells(row: ReportRow, meta: ReportMeta) -> dict[str, str]:
    digits = meta.precision
    if meta.bound is BoundFamily.BRAUNSTEIN:
        lower_cell = str(delta_lower_braunstein(row.k))
    else:
        lower_cell = delta_lower_gb(row.k).decimal(digits)
    return {
        "k": str(row.k),
        "f_exact": str(row.f),
        "f_dec": decimal_str(row.f, digits),
        "delta_exact": str(row.delta),
        "delta_dec": decimal_str(row.delta, digits),
        "delta_l_exact_or_dec": lower_cell,
        "delta_u_dec": delta_upper(row.k).decimal(digits),
        "region": row.region.name,
        "on_border": "true" if row.on_border else "false",
    }


def _meta_items(meta: ReportMeta) -> list[tuple[str, str]]:
    items: list[tuple[str, str]] = []
    if meta.p is not None:
        items.append(("p", str(meta.p)))
    if meta.sigma is not None:
        items.append(("sigma", str(meta.sigma)))
    if meta.boltzmann is not None:
        items.append(("boltzmann", str(meta.boltzmann)))
    items.append(("bound", meta.bound.value))
    if meta.convention is not None:
        items.append(("convention", meta.convention.value))
    items.append(("precision", str(meta.precision)))
    if meta.note is not None:
        items.append(("note", meta.note))
    items.append(("generator_version", meta.generator_version))
    return items


def report_to_csv(report: SharingReport) -> str:
    lines = [f"# {key}={value}" for key, value in _meta_items(report.meta)]
    lines.append(",".join(CSV_COLUMNS))
    for row in report.rows:
        cells = _row_cells(row, report.meta)
        lines.append(",".join(cells[column] for column in CSV_COLUMNS))
    return "\n".join(lines) + "\n"


def report_to_json(report: SharingReport) -> str:
    meta = report.meta
    rows = []
    for row in report.rows:
        cells = _row_cells(row, meta)
        rows.append({"k": row.k, **{column: cells[column] for column in CSV_COLUMNS[1:]}})
    payload = {
        "meta": {
            "p": meta.p,
            "sigma": None if meta.sigma is None else str(meta.sigma),
            "boltzmann": None if meta.boltzmann is None else str(meta.boltzmann),
            "bound": meta.bound.value,
            "convention": None if meta.convention is None else meta.convention.value,
            "precision": meta.precision,
            "note": meta.note,
            "generator_version": meta.generator_version,
        },
        "rows": rows,
    }
    return json.dumps(payload, indent=2) + "\n"


def parse_report_csv(text: str) -> tuple[dict[str, str], list[dict[str, str]]]:
    """Read back a CSV report: metadata dict plus raw string cells per row."""
    meta: dict[str, str] = {}
    rows: list[dict[str, str]] = []
    header: Optional[list[str]] = None
    for line in text.splitlines():
        if not line:
            continue
        if line.startswith("# "):
            key, _, value = line[2:].partition("=")
            meta[key] = value
            continue
        cells = line.split(",")
        if header is None:
            header = cells
            if tuple(header) != CSV_COLUMNS:
                raise DomainError(f"unexpected CSV header: {header}")
            continue
        rows.append(dict(zip(header, cells)))
    if header is None:
        raise DomainError("no CSV header found")
    return meta, rows


def parse_report_json(text: str) -> tuple[dict[str, object], list[dict[str, object]]]:
    payload = json.loads(text)
    return payload["meta"], payload["rows"]


def meta_from_parsed(parsed: dict[str, str]) -> ReportMeta:
    """Reconstruct report metadata from parsed CSV/JSON values."""
    def _fraction(key: str) -> Optional[Fraction]:
        value = parsed.get(key)
        return None if value in (None, "") else Fraction(str(value))

    meta = ReportMeta(
        p=None if parsed.get("p") in (None, "") else int(str(parsed["p"])),
        sigma=_fraction("sigma"),
        boltzmann=_fraction("boltzmann"),
        bound=BoundFamily(str(parsed["bound"])),
        convention=(
            None
            if parsed.get("convention") in (None, "")
            else ThermalConvention(str(parsed["convention"]))
        ),
        precision=int(str(parsed["precision"])),
        note=None if parsed.get("note") in (None, "") else str(parsed["note"]),
    )
    return replace(meta, generator_version=str(parsed["generator_version"]))


BOUNDS_COLUMNS = ("k", "delta_l_braunstein_exact", "delta_l_gb_dec", "delta_u_dec")


def bounds_rows(k_min: int = 2, k_max: int = 16, precision: int = 15) -> list[dict[str, str]]:
    """Boundary table rows for figure emission."""
    if not 2 <= k_min <= k_max:
        raise DomainError(f"need 2 <= k_min <= k_max, got {k_min}..{k_max}")
    return [
        {
            "k": str(k),
            "delta_l_braunstein_exact": str(delta_lower_braunstein(k)),
            "delta_l_gb_dec": delta_lower_gb(k).decimal(precision),
            "delta_u_dec": delta_upper(k).decimal(precision),
        }
        for k in range(k_min, k_max + 1)
    ]


def bounds_to_csv(rows: list[dict[str, str]]) -> str:
    lines = [",".join(BOUNDS_COLUMNS)]
    lines.extend(",".join(row[column] for column in BOUNDS_COLUMNS) for row in rows)
    return "\n".join(lines) + "\n"


WEAK_SPIN_SIGMA = Fraction(4, 125)
WEAK_SPIN_NOTE = (
    "reconstruction: weak-spin polarization chosen as 0.032 and classified "
    "against the Braunstein lower bound"
)

FIGURE_KINDS = ("pure", "impure")


def figure_reports(which: str, precision: int = 15) -> list[tuple[str, SharingReport]]:
    """Curve series for the two standard figures.

    "pure" plots sharing from 2 and 4 perfectly polarized spins; "impure"
    plots sharing from 5 pure spins, 5 half-polarized spins, and one weakly
    polarized spin (a reconstruction, flagged in the report note).
    """
    if which not in FIGURE_KINDS:
        raise DomainError(f"unknown figure {which!r}; expected one of {FIGURE_KINDS}")
    if which == "pure":
        return [
            ("p2_pure", build_sharing_report(2, Fraction(1), precision=precision)),
            ("p4_pure", build_sharing_report(4, Fraction(1), precision=precision)),
        ]
    return [
        ("p5_pure", build_sharing_report(5, Fraction(1), precision=precision)),
        ("p5_half", build_sharing_report(5, Fraction(1, 2), precision=precision)),
        (
            "p1_weak",
            build_sharing_report(
                1,
                WEAK_SPIN_SIGMA,
                family=BoundFamily.BRAUNSTEIN,
                precision=precision,
                note=WEAK_SPIN_NOTE,
            ),
        ),
    ]
