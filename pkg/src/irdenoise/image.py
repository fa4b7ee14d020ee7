"""8-bit grayscale images, neighborhood windows, and PGM file I/O.

Images are stored as a flat row-major byte buffer with the origin at the
top-left corner and y increasing downward (PGM raster order). Window
extraction uses replicate-edge padding: out-of-image neighbor coordinates
are clamped to the nearest valid pixel, so every pixel of an image can be
filtered and no gray-level is ever invented.
"""

from __future__ import annotations

from dataclasses import dataclass


class PgmError(ValueError):
    """Raised for malformed PGM data; the message includes a byte offset."""


class GrayImage:
    """An 8-bit grayscale raster: width x height pixels, row-major.

    The pixel buffer is exposed as a bytearray for efficient scanning, but
    callers must treat a constructed image as immutable; all library
    operations return fresh images instead of mutating their inputs.
    """

    __slots__ = ("width", "height", "pixels")

    def __init__(self, width: int, height: int, pixels) -> None:
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
        buf = bytearray(pixels)
        if len(buf) != width * height:
            raise ValueError(
                f"pixel buffer has {len(buf)} entries, expected {width * height}"
            )
        self.width = width
        self.height = height
        self.pixels = buf

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GrayImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and self.pixels == other.pixels
        )

    def __repr__(self) -> str:
        return f"GrayImage({self.width}x{self.height})"

    def copy(self) -> "GrayImage":
        return GrayImage(self.width, self.height, self.pixels)


@dataclass(frozen=True)
class WindowSpec:
    """Side length of a square filter window (odd, >= 3: 3x3, 5x5, ...)."""

    k: int

    def __post_init__(self) -> None:
        if self.k < 3 or self.k % 2 == 0:
            raise ValueError(f"window side must be an odd integer >= 3, got {self.k}")

    @property
    def radius(self) -> int:
        return self.k // 2


@dataclass(frozen=True)
class Window:
    """The k*k gray-levels around a center pixel, in row-major raster order.

    ``values[center_index]`` is the center pixel's own gray-level.
    """

    values: list[int]
    center_index: int


def new_image(width: int, height: int, fill: int = 0) -> GrayImage:
    """Create a width x height image with every pixel set to ``fill``."""
    if not 0 <= fill <= 255:
        raise ValueError(f"fill must be in [0, 255], got {fill}")
    if width < 1 or height < 1:
        raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
    return GrayImage(width, height, bytes([fill]) * (width * height))


def get_pixel(img: GrayImage, x: int, y: int) -> int:
    """Gray-level at (x, y); raises IndexError outside the image."""
    if not (0 <= x < img.width and 0 <= y < img.height):
        raise IndexError(
            f"pixel ({x}, {y}) outside {img.width}x{img.height} image"
        )
    return img.pixels[y * img.width + x]


def extract_window(img: GrayImage, x: int, y: int, spec: WindowSpec) -> Window:
    """Neighborhood of (x, y) as a Window, with replicate-edge padding.

    The center must lie inside the image; neighbor coordinates outside
    it are clamped to the nearest valid pixel.
    """
    if not (0 <= x < img.width and 0 <= y < img.height):
        raise IndexError(
            f"window center ({x}, {y}) outside {img.width}x{img.height} image"
        )
    k = spec.k
    r = spec.radius
    w = img.width
    h = img.height
    px = img.pixels
    values = []
    for dy in range(-r, r + 1):
        sy = y + dy
        if sy < 0:
            sy = 0
        elif sy >= h:
            sy = h - 1
        row = sy * w
        for dx in range(-r, r + 1):
            sx = x + dx
            if sx < 0:
                sx = 0
            elif sx >= w:
                sx = w - 1
            values.append(px[row + sx])
    return Window(values=values, center_index=(k * k - 1) // 2)


# --- PGM (portable graymap) codec -----------------------------------------
#
# Loads binary P5 and ASCII P2 with maxval <= 255; header comments
# ("#" to end of line) are accepted anywhere whitespace is allowed.
# Saving always emits the exact header b"P5\n{width} {height}\n255\n"
# followed by the raw pixel bytes, with no comments.

_WHITESPACE = b" \t\r\n\v\f"


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Next whitespace-delimited token at/after ``pos``, skipping comments.

    Returns (token, position just past the token).
    """
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c == b"#":
            while pos < n and data[pos] not in b"\r\n":
                pos += 1
        elif c in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise PgmError(f"unexpected end of header at byte offset {pos}")
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos] != 0x23:
        pos += 1
    return data[start:pos], pos


def _parse_header_int(data: bytes, pos: int, what: str) -> tuple[int, int]:
    token, end = _next_token(data, pos)
    try:
        value = int(token)
    except ValueError:
        raise PgmError(
            f"bad {what} {token!r} at byte offset {end - len(token)}"
        ) from None
    return value, end


def load_pgm(data: bytes) -> GrayImage:
    """Parse P5 (binary) or P2 (ASCII) PGM bytes into a GrayImage."""
    data = bytes(data)
    if len(data) < 2:
        raise PgmError("missing magic number at byte offset 0")
    magic = data[:2]
    if magic not in (b"P5", b"P2"):
        raise PgmError(f"unsupported magic {magic!r} at byte offset 0")
    width, pos = _parse_header_int(data, 2, "width")
    height, pos = _parse_header_int(data, pos, "height")
    maxval, pos = _parse_header_int(data, pos, "maxval")
    if width < 1 or height < 1:
        raise PgmError(f"bad dimensions {width}x{height} at byte offset {pos}")
    if not 1 <= maxval <= 255:
        raise PgmError(f"unsupported maxval {maxval} at byte offset {pos}")
    count = width * height

    if magic == b"P5":
        # Exactly one whitespace byte separates the header from the raster.
        if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
            raise PgmError(f"missing raster separator at byte offset {pos}")
        pos += 1
        raster = data[pos : pos + count]
        if len(raster) < count:
            raise PgmError(
                f"truncated raster at byte offset {pos + len(raster)}: "
                f"expected {count} pixels, got {len(raster)}"
            )
        if maxval < 255 and max(raster) > maxval:
            raise PgmError(f"sample exceeds maxval {maxval} at byte offset {pos}")
        return GrayImage(width, height, raster)

    # P2: whitespace-separated ASCII samples.
    values = bytearray(count)
    for i in range(count):
        try:
            sample, pos = _parse_header_int(data, pos, "sample")
        except PgmError:
            raise PgmError(
                f"truncated raster at byte offset {pos}: "
                f"expected {count} pixels, got {i}"
            ) from None
        if not 0 <= sample <= maxval:
            raise PgmError(
                f"sample {sample} out of range [0, {maxval}] near byte offset {pos}"
            )
        values[i] = sample
    return GrayImage(width, height, values)


def save_pgm(img: GrayImage) -> bytes:
    """Serialize a GrayImage as binary P5 with maxval 255."""
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + bytes(img.pixels)


def read_pgm_file(path) -> GrayImage:
    with open(path, "rb") as fh:
        return load_pgm(fh.read())


def write_pgm_file(path, img: GrayImage) -> None:
    with open(path, "wb") as fh:
        fh.write(save_pgm(img))
