"""Image fidelity metrics (MSE, PSNR) and benchmark comparison reports.

The squared-error sum is accumulated in exact integer arithmetic before the
final division, so MSE and PSNR are independent of summation order. A PSNR
of +infinity (identical images) serializes as the JSON string "inf";
finite decibel values serialize as fixed 4-decimal strings so report files
are byte-stable across runs and platforms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .filters import FilterStats
from .image import GrayImage

REPORT_SCHEMA = "irdenoise-report/1"
STATS_SCHEMA = "irdenoise-stats/1"


def mse(a: GrayImage, b: GrayImage) -> float:
    """Mean squared error between two same-sized images."""
    if a.width != b.width or a.height != b.height:
        raise ValueError(
            f"dimension mismatch: {a.width}x{a.height} vs {b.width}x{b.height}"
        )
    total = 0
    for pa, pb in zip(a.pixels, b.pixels):
        d = pa - pb
        total += d * d
    return total / (a.width * a.height)


def psnr(a: GrayImage, b: GrayImage, max_val: int = 255) -> float:
    """Peak signal-to-noise ratio in dB; +infinity for identical images."""
    err = mse(a, b)
    if err == 0:
        return math.inf
    return 10.0 * math.log10((max_val * max_val) / err)


@dataclass(frozen=True)
class QualityReport:
    """MSE and PSNR of one image pair against a gray-level ceiling."""

    mse: float
    psnr_db: float
    max_val: int = 255


def quality_report(a: GrayImage, b: GrayImage, max_val: int = 255) -> QualityReport:
    err = mse(a, b)
    db = math.inf if err == 0 else 10.0 * math.log10((max_val * max_val) / err)
    return QualityReport(mse=err, psnr_db=db, max_val=max_val)


@dataclass(frozen=True)
class MethodResult:
    """One method's outcome in a comparison: fidelity plus work counters."""

    psnr_db: float
    sorts: int = 0
    minmax_scans: int = 0
    elapsed_ms: float = 0.0
    passes: int = 0

    def to_dict(self) -> dict:
        return {
            "psnr_db": format_db(self.psnr_db),
            "sorts": self.sorts,
            "minmax_scans": self.minmax_scans,
            "elapsed_ms": self.elapsed_ms,
            "passes": self.passes,
        }


@dataclass(frozen=True)
class ComparisonReport:
    """A benchmark row: noisy baseline vs both filters at one noise density.

    The derived fields (psnr_gain_db, sort_reduction_fraction) are computed
    from the stored constituents on demand, never stored separately.
    """

    width: int
    height: int
    noise_density: float
    noisy: MethodResult
    mf: MethodResult
    fnr: MethodResult

    @property
    def psnr_gain_db(self) -> float:
        return self.fnr.psnr_db - self.mf.psnr_db

    @property
    def sort_reduction_fraction(self) -> float:
        if self.mf.sorts == 0:
            return 0.0
        return 1.0 - self.fnr.sorts / self.mf.sorts

    def to_dict(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "noise_density": self.noise_density,
            "methods": {
                "noisy": self.noisy.to_dict(),
                "mf": self.mf.to_dict(),
                "fnr": self.fnr.to_dict(),
            },
            "psnr_gain_db": format_db(self.psnr_gain_db),
            "sort_reduction_fraction": f"{self.sort_reduction_fraction:.4f}",
        }


def format_db(value: float) -> str:
    """Fixed 4-decimal rendering of a dB value; infinity becomes "inf"."""
    if math.isinf(value):
        return "inf"
    return f"{value:.4f}"


def build_comparison(
    original: GrayImage,
    noisy: GrayImage,
    mf_output: GrayImage,
    mf_stats: FilterStats,
    fnr_output: GrayImage,
    fnr_stats: FilterStats,
    noise_density: float,
) -> ComparisonReport:
    """Assemble a comparison row; all PSNRs are against the clean original."""
    for other in (noisy, mf_output, fnr_output):
        if other.width != original.width or other.height != original.height:
            raise ValueError("all images in a comparison must share dimensions")
    return ComparisonReport(
        width=original.width,
        height=original.height,
        noise_density=noise_density,
        noisy=MethodResult(psnr_db=psnr(original, noisy)),
        mf=MethodResult(
            psnr_db=psnr(original, mf_output),
            sorts=mf_stats.sorts,
            minmax_scans=mf_stats.minmax_scans,
            elapsed_ms=mf_stats.elapsed_ms,
            passes=mf_stats.passes,
        ),
        fnr=MethodResult(
            psnr_db=psnr(original, fnr_output),
            sorts=fnr_stats.sorts,
            minmax_scans=fnr_stats.minmax_scans,
            elapsed_ms=fnr_stats.elapsed_ms,
            passes=fnr_stats.passes,
        ),
    )
