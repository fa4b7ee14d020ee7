"""Deterministic synthetic test images.

The "structured" fixture is the benchmark workhorse: a smooth horizontal
gradient (gray-level varies monotonically, as on a warm surface) carrying
thin vertical lines and a few 2x2 blobs, i.e. exactly the fine structure
an unconditional median filter tends to erase.
"""

from __future__ import annotations

import math

from .image import GrayImage

STRUCTURED_SIZE = 128
LINE_COLUMNS = (8, 24, 40, 56, 72, 88, 104, 120)
LINE_OFFSET = 120
BLOB_CORNERS = ((20, 20), (36, 92), (60, 28), (84, 100))
BLOB_OFFSET = 60

FIXTURE_NAMES = ("ramp", "radial", "structured")


def _half_up(v: float) -> int:
    return int(v + 0.5)


def ramp_image(width: int, height: int) -> GrayImage:
    """Horizontal linear gradient from 0 (left) to 255 (right)."""
    if width == 1:
        row = bytes([0])
    else:
        row = bytes(_half_up(255.0 * x / (width - 1)) for x in range(width))
    return GrayImage(width, height, row * height)


def radial_image(width: int, height: int) -> GrayImage:
    """Radial gradient, 255 at the center fading to 0 at the far corners.

    Distances are computed from exact integer squared offsets (doubled
    coordinates), so the image is exactly symmetric under 90-degree
    rotation when width == height.
    """
    # Doubled coordinates keep squared distances integral; the far corner's
    # doubled squared distance is exactly d2_max, so t spans [0, 1].
    d2_max = (width - 1) ** 2 + (height - 1) ** 2
    if d2_max == 0:
        return GrayImage(1, 1, bytes([255]))
    buf = bytearray(width * height)
    i = 0
    for y in range(height):
        ddy = 2 * y - (height - 1)
        for x in range(width):
            ddx = 2 * x - (width - 1)
            t = math.sqrt((ddx * ddx + ddy * ddy) / d2_max)
            buf[i] = _half_up(255.0 * (1.0 - t))
            i += 1
    return GrayImage(width, height, buf)


def structured_image() -> GrayImage:
    """128x128 ramp with 8 one-pixel vertical lines and four 2x2 blobs.

    Lines ride +120 gray-levels above the ramp (clamped to 255); blobs
    ride +60 per pixel so their left columns stay below their right
    columns and are not window extrema.
    """
    size = STRUCTURED_SIZE
    img = ramp_image(size, size)
    buf = img.pixels
    base_row = [buf[x] for x in range(size)]
    for c in LINE_COLUMNS:
        v = min(base_row[c] + LINE_OFFSET, 255)
        for y in range(size):
            buf[y * size + c] = v
    for bx, by in BLOB_CORNERS:
        for dy in (0, 1):
            for dx in (0, 1):
                x = bx + dx
                buf[(by + dy) * size + x] = min(base_row[x] + BLOB_OFFSET, 255)
    return img


def make_fixture(name: str, width: int, height: int) -> GrayImage:
    """Build a named fixture; "structured" is defined only at 128x128."""
    if name == "ramp":
        return ramp_image(width, height)
    if name == "radial":
        return radial_image(width, height)
    if name == "structured":
        if (width, height) != (STRUCTURED_SIZE, STRUCTURED_SIZE):
            raise ValueError(
                f"the structured fixture is {STRUCTURED_SIZE}x{STRUCTURED_SIZE}; "
                f"got {width}x{height}"
            )
        return structured_image()
    raise ValueError(f"unknown fixture {name!r}, expected one of {FIXTURE_NAMES}")
