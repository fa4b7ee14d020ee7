"""Impulse-noise removal for 8-bit grayscale images.

Core pieces: a PGM-backed grayscale image type, an instrumented hybrid
sort for window medians, seeded salt-and-pepper injection, the selective
extrema-triggered median filter plus the classic median baseline, PSNR
metrics, and a benchmarking CLI.
"""

from .filters import (
    FilterStats,
    WindowExtrema,
    classify_pixel,
    fnr_pass,
    mf_pass,
    run_filter,
    window_extrema,
)
from .fixtures import make_fixture, radial_image, ramp_image, structured_image
from .image import (
    GrayImage,
    PgmError,
    Window,
    WindowSpec,
    extract_window,
    get_pixel,
    load_pgm,
    new_image,
    read_pgm_file,
    save_pgm,
    write_pgm_file,
)
from .metrics import (
    ComparisonReport,
    MethodResult,
    QualityReport,
    build_comparison,
    mse,
    psnr,
    quality_report,
)
from .noise import NoiseMask, NoiseSpec, SplitMix64, inject_impulse
from .sorting import SortCounters, median_of, sort_values

__version__ = "0.1.0"

__all__ = [
    "ComparisonReport",
    "FilterStats",
    "GrayImage",
    "MethodResult",
    "NoiseMask",
    "NoiseSpec",
    "PgmError",
    "QualityReport",
    "SortCounters",
    "SplitMix64",
    "Window",
    "WindowExtrema",
    "WindowSpec",
    "build_comparison",
    "classify_pixel",
    "extract_window",
    "fnr_pass",
    "get_pixel",
    "inject_impulse",
    "load_pgm",
    "make_fixture",
    "median_of",
    "mf_pass",
    "mse",
    "new_image",
    "psnr",
    "quality_report",
    "radial_image",
    "ramp_image",
    "read_pgm_file",
    "run_filter",
    "save_pgm",
    "sort_values",
    "structured_image",
    "window_extrema",
    "write_pgm_file",
]
