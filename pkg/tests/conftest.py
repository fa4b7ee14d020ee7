import random
from pathlib import Path

import pytest

from irdenoise.image import GrayImage

DATA_DIR = Path(__file__).parent / "data"


def random_image(rng: random.Random, width: int, height: int) -> GrayImage:
    return GrayImage(width, height, bytes(rng.randrange(256) for _ in range(width * height)))


def ramp16() -> GrayImage:
    """16x16 horizontal ramp with gray-level 16*x (0, 16, ..., 240)."""
    row = bytes(16 * x for x in range(16))
    return GrayImage(16, 16, row * 16)


@pytest.fixture(scope="session")
def structured():
    from irdenoise.fixtures import structured_image

    return structured_image()
