"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (O(n^2) sorting, direct neighborhood
enumeration) and shares no code with the library paths it checks.
"""

from irdenoise.image import GrayImage


def insertion_sorted(values) -> list[int]:
    """Plain O(n^2) insertion sort on a copy."""
    out = list(values)
    for i in range(1, len(out)):
        v = out[i]
        j = i - 1
        while j >= 0 and out[j] > v:
            out[j + 1] = out[j]
            j -= 1
        out[j + 1] = v
    return out


def median_reference(values) -> int:
    s = insertion_sorted(values)
    return s[(len(s) - 1) // 2]


def window_values_reference(img: GrayImage, x: int, y: int, k: int) -> list[int]:
    """Direct double loop over the neighborhood with coordinate clamping."""
    r = k // 2
    vals = []
    for dy in range(-r, r + 1):
        sy = min(max(y + dy, 0), img.height - 1)
        for dx in range(-r, r + 1):
            sx = min(max(x + dx, 0), img.width - 1)
            vals.append(img.pixels[sy * img.width + sx])
    return vals


def mf_reference(img: GrayImage, k: int) -> GrayImage:
    """Brute-force median filter: every pixel becomes its window median."""
    out = bytearray(len(img.pixels))
    for y in range(img.height):
        for x in range(img.width):
            out[y * img.width + x] = median_reference(
                window_values_reference(img, x, y, k)
            )
    return GrayImage(img.width, img.height, out)


def fnr_reference(img: GrayImage, k: int) -> GrayImage:
    """Brute-force selective filter: median-replace only extremum centers."""
    out = bytearray(len(img.pixels))
    for y in range(img.height):
        for x in range(img.width):
            vals = window_values_reference(img, x, y, k)
            center = img.pixels[y * img.width + x]
            if center == min(vals) or center == max(vals):
                out[y * img.width + x] = median_reference(vals)
            else:
                out[y * img.width + x] = center
    return GrayImage(img.width, img.height, out)


def m3killer(n: int) -> list[int]:
    """Permutation of 1..n that degrades median-of-three quicksort.

    Built for even n; odd n gets the even construction plus a final n.
    """
    if n % 2:
        return m3killer(n - 1) + [n]
    k = n // 2
    a = [0] * n
    for i in range(1, k + 1):
        if i % 2 == 1:
            a[i - 1] = i
            a[i] = k + i
        a[k + i - 1] = 2 * i
    return a
