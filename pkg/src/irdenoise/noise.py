"""Seeded salt-and-pepper impulse injection with a ground-truth mask.

Corruption decisions are drawn from a SplitMix64 stream in row-major pixel
order, so a given (image, spec) pair produces bit-identical output on every
platform. Corrupted pixels take the fixed impulse values 0 or 255.
"""

from __future__ import annotations

from dataclasses import dataclass

from .image import GrayImage

_MASK64 = 0xFFFFFFFFFFFFFFFF


class SplitMix64:
    """The standard SplitMix64 generator (64-bit state, 64-bit output)."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next_uniform(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) / 9007199254740992.0  # 2**53


@dataclass(frozen=True)
class NoiseSpec:
    """Impulse-noise parameters: expected density, salt share, and seed."""

    density: float
    salt_fraction: float = 0.5
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must be in [0, 1], got {self.density}")
        if not 0.0 <= self.salt_fraction <= 1.0:
            raise ValueError(
                f"salt_fraction must be in [0, 1], got {self.salt_fraction}"
            )
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must be an unsigned 64-bit integer")


class NoiseMask:
    """Per-pixel corruption flags, row-major, matching a companion image."""

    __slots__ = ("width", "height", "flags")

    def __init__(self, width: int, height: int, flags) -> None:
        buf = bytearray(flags)
        if len(buf) != width * height:
            raise ValueError(
                f"mask has {len(buf)} flags, expected {width * height}"
            )
        self.width = width
        self.height = height
        self.flags = buf

    def __len__(self) -> int:
        return len(self.flags)

    def is_corrupted(self, x: int, y: int) -> bool:
        return bool(self.flags[y * self.width + x])

    @property
    def count(self) -> int:
        """Number of corrupted pixels."""
        return sum(self.flags)

    def to_image(self) -> GrayImage:
        """Render as an image: 255 where corrupted, 0 elsewhere."""
        return GrayImage(
            self.width, self.height, bytes(255 if f else 0 for f in self.flags)
        )


def inject_impulse(img: GrayImage, spec: NoiseSpec) -> tuple[GrayImage, NoiseMask]:
    """Corrupt ~density of the pixels with fixed-value impulses.

    Pixels are visited in row-major order; per pixel, one uniform draw
    decides corruption and (only when corrupted) a second draw picks salt
    (255) versus pepper (0). Uncorrupted pixels are copied unchanged.
    """
    rng = SplitMix64(spec.seed)
    d = spec.density
    salt = spec.salt_fraction
    out = bytearray(img.pixels)
    flags = bytearray(len(out))
    next_uniform = rng.next_uniform
    for i in range(len(out)):
        if next_uniform() < d:
            out[i] = 255 if next_uniform() < salt else 0
            flags[i] = 1
    return GrayImage(img.width, img.height, out), NoiseMask(img.width, img.height, flags)
