"""Impulse-noise filtering passes: selective median replacement and the
every-pixel median baseline.

The fast path ("fnr") classifies a pixel as noise exactly when its
gray-level equals the minimum or maximum of its window, and replaces only
those pixels with the window median; everything else is copied through
untouched. The baseline ("mf") replaces every pixel with its window median.

Both passes read from an immutable input snapshot and write a fresh
buffer, so results are independent of pixel visitation order and rows can
be processed in parallel without changing any output byte or counter.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .image import GrayImage, Window, WindowSpec
from .sorting import SortCounters, median_of

METHOD_FNR = "fnr"
METHOD_MF = "mf"


@dataclass(frozen=True)
class WindowExtrema:
    min_gray: int
    max_gray: int


@dataclass
class FilterStats:
    """Per-run counters; elapsed_ms is informational (wall clock)."""

    minmax_scans: int = 0
    sorts: int = 0
    replacements: int = 0
    detected: int = 0
    elapsed_ms: float = 0.0
    passes: int = 0

    def to_dict(self) -> dict:
        return {
            "minmax_scans": self.minmax_scans,
            "sorts": self.sorts,
            "replacements": self.replacements,
            "detected": self.detected,
            "elapsed_ms": self.elapsed_ms,
            "passes": self.passes,
        }


def window_extrema(w: Window, stats: FilterStats | None = None) -> WindowExtrema:
    """Exact min and max of the window values (one counted scan)."""
    if stats is not None:
        stats.minmax_scans += 1
    values = w.values
    return WindowExtrema(min(values), max(values))


def classify_pixel(w: Window, extrema: WindowExtrema) -> bool:
    """True when the center pixel is noise: it equals a window extremum."""
    center = w.values[w.center_index]
    return center == extrema.min_gray or center == extrema.max_gray


def fnr_pass(img: GrayImage, spec: WindowSpec, stats: FilterStats) -> GrayImage:
    """One selective pass: replace only extremum-valued pixels by the median."""
    return _run_rows_threaded(img, spec, stats, fnr=True, threads=1)


def mf_pass(img: GrayImage, spec: WindowSpec, stats: FilterStats) -> GrayImage:
    """One baseline pass: replace every pixel by its window median."""
    return _run_rows_threaded(img, spec, stats, fnr=False, threads=1)


def run_filter(
    img: GrayImage,
    spec: WindowSpec,
    method: str,
    passes: int = 1,
    threads: int = 1,
) -> tuple[GrayImage, FilterStats]:
    """Apply the chosen filter ``passes`` times, each pass feeding the next.

    Stats accumulate across passes; elapsed_ms covers the whole run.
    """
    if method not in (METHOD_FNR, METHOD_MF):
        raise ValueError(f"unknown method {method!r}, expected 'fnr' or 'mf'")
    if passes < 1:
        raise ValueError(f"passes must be >= 1, got {passes}")
    stats = FilterStats()
    start = time.perf_counter()
    current = img
    for _ in range(passes):
        current = _run_rows_threaded(
            current, spec, stats, fnr=(method == METHOD_FNR), threads=threads
        )
    stats.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return current, stats


def _run_rows_threaded(
    img: GrayImage, spec: WindowSpec, stats: FilterStats, fnr: bool, threads: int
) -> GrayImage:
    out = bytearray(len(img.pixels))
    height = img.height
    workers = max(1, min(threads, height))
    if workers == 1:
        parts = [_filter_rows(img, spec.k, 0, height, out, fnr)]
    else:
        bounds = [height * i // workers for i in range(workers + 1)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_filter_rows, img, spec.k, bounds[i], bounds[i + 1], out, fnr)
                for i in range(workers)
            ]
            parts = [f.result() for f in futures]
    for scans, detected, replacements, counters in parts:
        stats.minmax_scans += scans
        stats.detected += detected
        stats.replacements += replacements
        stats.sorts += counters.sorts_performed
    stats.passes += 1
    return GrayImage(img.width, img.height, out)


def _filter_rows(
    img: GrayImage, k: int, y0: int, y1: int, out: bytearray, fnr: bool
) -> tuple[int, int, int, SortCounters]:
    """Filter rows [y0, y1) from the input snapshot into ``out``.

    Returns (minmax_scans, detected, replacements, sort counters) for the
    processed rows. Window values are gathered with replicate-edge
    clamping, matching extract_window.
    """
    w = img.width
    h = img.height
    px = img.pixels
    r = k // 2
    counters = SortCounters()
    scans = 0
    detected = 0
    replacements = 0

    # Clamped window columns for the border fallback path.
    edge_cols = {
        x: [min(max(x + dx, 0), w - 1) for dx in range(-r, r + 1)]
        for x in list(range(0, min(r, w))) + list(range(max(w - r, 0), w))
    }
    interior_lo = r
    interior_hi = w - r  # interior means the slice path applies

    for y in range(y0, y1):
        row_offsets = [min(max(y + dy, 0), h - 1) * w for dy in range(-r, r + 1)]
        base = y * w
        for x in range(w):
            if interior_lo <= x < interior_hi:
                left = x - r
                vals = bytearray()
                for off in row_offsets:
                    vals += px[off + left : off + left + k]
            else:
                cols = edge_cols[x]
                vals = bytearray(px[off + cx] for off in row_offsets for cx in cols)
            center = px[base + x]
            if fnr:
                scans += 1
                if center == min(vals) or center == max(vals):
                    detected += 1
                    m = median_of(vals, counters)
                    if m != center:
                        replacements += 1
                    out[base + x] = m
                else:
                    out[base + x] = center
            else:
                out[base + x] = median_of(vals, counters)
    return scans, detected, replacements, counters
