"""Instrumented hybrid sort used to pick window medians.

The sort is a classic introspective scheme over a copied buffer: quicksort
with a median-of-three pivot, a recursion depth limit of 2*floor(log2 n)
beyond which the current partition falls back to heapsort, and partitions
of length <= 16 left for a single finishing insertion-sort pass. Those are
the canonical parameters; they are fixed so counter values are reproducible.

Counters track whole-sort invocations (one per processed window during
filtering), element comparisons, and depth-limit fallbacks. The fallback
counter exists so tests can prove the heapsort switch is reachable.
"""

from __future__ import annotations

INSERTION_CUTOFF = 16


class SortCounters:
    """Tallies for sort instrumentation; monotonically non-decreasing."""

    __slots__ = ("sorts_performed", "comparisons", "depth_switches")

    def __init__(self) -> None:
        self.sorts_performed = 0
        self.comparisons = 0
        self.depth_switches = 0

    def merge(self, other: "SortCounters") -> None:
        self.sorts_performed += other.sorts_performed
        self.comparisons += other.comparisons
        self.depth_switches += other.depth_switches


def sort_values(values, counters: SortCounters) -> list[int]:
    """Return the values as a new non-decreasing list; counts one sort.

    Raises ValueError on empty input.
    """
    buf = list(values)
    n = len(buf)
    if n == 0:
        raise ValueError("cannot sort an empty sequence")
    if n > INSERTION_CUTOFF:
        _introsort_loop(buf, 0, n, 2 * (n.bit_length() - 1), counters)
    counters.comparisons += _insertion_pass(buf, 0, n)
    counters.sorts_performed += 1
    return buf


def median_of(values, counters: SortCounters) -> int:
    """Median of an odd-length sequence via one counted sort."""
    n = len(values)
    if n % 2 == 0:
        raise ValueError(f"median needs an odd-length sequence, got length {n}")
    return sort_values(values, counters)[(n - 1) // 2]


def _introsort_loop(a: list, lo: int, hi: int, depth: int, counters: SortCounters) -> None:
    """Quicksort [lo, hi) down to partitions of INSERTION_CUTOFF or less.

    Each level of recursion spends one unit of depth budget; once the
    budget is gone the remaining partition is heapsorted so the worst
    case stays O(n log n).
    """
    while hi - lo > INSERTION_CUTOFF:
        if depth == 0:
            counters.depth_switches += 1
            counters.comparisons += _heapsort_range(a, lo, hi)
            return
        depth -= 1
        cut = _partition(a, lo, hi, counters)
        _introsort_loop(a, cut, hi, depth, counters)
        hi = cut


def _partition(a: list, lo: int, hi: int, counters: SortCounters) -> int:
    """Median-of-three Hoare partition of [lo, hi); returns the split point.

    Afterwards a[lo:cut] <= pivot <= a[cut:hi], with both sides non-empty.
    Requires hi - lo >= 3 (guaranteed by the cutoff).
    """
    comps = 0
    mid = (lo + hi) // 2
    last = hi - 1
    # Sort a[lo], a[mid], a[last] so the ends act as scan sentinels.
    if a[mid] < a[lo]:
        a[mid], a[lo] = a[lo], a[mid]
    if a[last] < a[mid]:
        a[last], a[mid] = a[mid], a[last]
        if a[mid] < a[lo]:
            a[mid], a[lo] = a[lo], a[mid]
        comps += 3
    else:
        comps += 2
    pivot = a[mid]

    i = lo
    j = last
    while True:
        i += 1
        while a[i] < pivot:
            comps += 1
            i += 1
        comps += 1
        j -= 1
        while a[j] > pivot:
            comps += 1
            j -= 1
        comps += 1
        if i >= j:
            counters.comparisons += comps
            return j + 1
        a[i], a[j] = a[j], a[i]


def _heapsort_range(a: list, lo: int, hi: int) -> int:
    """In-place heapsort of a[lo:hi]; returns the comparison count."""
    comps = 0
    n = hi - lo

    def sift_down(root: int, end: int) -> int:
        c = 0
        while True:
            child = 2 * root + 1
            if child >= end:
                return c
            right = child + 1
            if right < end:
                c += 1
                if a[lo + child] < a[lo + right]:
                    child = right
            c += 1
            if a[lo + root] < a[lo + child]:
                a[lo + root], a[lo + child] = a[lo + child], a[lo + root]
                root = child
            else:
                return c

    for start in range(n // 2 - 1, -1, -1):
        comps += sift_down(start, n)
    for end in range(n - 1, 0, -1):
        a[lo], a[lo + end] = a[lo + end], a[lo]
        comps += sift_down(0, end)
    return comps


def _insertion_pass(a: list, lo: int, hi: int) -> int:
    """One insertion-sort pass over a[lo:hi]; returns the comparison count."""
    comps = 0
    for i in range(lo + 1, hi):
        v = a[i]
        j = i - 1
        while j >= lo:
            comps += 1
            if a[j] > v:
                a[j + 1] = a[j]
                j -= 1
            else:
                break
        a[j + 1] = v
    return comps
