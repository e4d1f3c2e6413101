"""Pure-Python bit-sliced evaluation over the whole binary input space.

Each wire carries a 2**width-bit integer slice; bit v of wire i's slice is
the value of wire i when the network runs on input number v.  Input v maps
to the vector whose wire-0 bit is the *most* significant bit of v, so the
numeric order of input indices is the lexicographic order of input vectors.
A comparator is then one conjunction plus one disjunction on slices.

This module is the fallback for the compiled kernels in ``_kernels``; both
expose ``first_unsorted`` and ``leq_masks`` with identical semantics.
"""

from __future__ import annotations

from typing import Sequence


def input_patterns(width: int) -> list[int]:
    """Initial slice per wire: bit v of pattern i is bit (width-1-i) of v."""
    nbits = 1 << width
    pats = []
    for i in range(width):
        j = width - 1 - i  # bit position of v driving wire i
        block = 1 << j
        period = block << 1
        ones = ((1 << block) - 1) << block
        reps = nbits // period
        pats.append(ones * (((1 << (reps * period)) - 1) // ((1 << period) - 1)))
    return pats


def evaluate(width: int, lows: Sequence[int], highs: Sequence[int]) -> list[int]:
    """Final slice per wire after applying all comparators."""
    pats = input_patterns(width)
    for a, b in zip(lows, highs):
        both = pats[a] & pats[b]
        pats[b] = pats[a] | pats[b]
        pats[a] = both
    return pats


def first_unsorted(width: int, lows: Sequence[int], highs: Sequence[int]) -> int:
    """Least input index whose output is not non-decreasing, or -1."""
    pats = evaluate(width, lows, highs)
    full = (1 << (1 << width)) - 1
    bad = 0
    for lo, hi in zip(pats, pats[1:]):
        bad |= lo & (full ^ hi)
    if bad == 0:
        return -1
    return (bad & -bad).bit_length() - 1


def leq_masks(width: int, lows: Sequence[int], highs: Sequence[int]) -> list[int]:
    """Per-wire bitmask rows of the always-at-most relation.

    Bit b of row a is set iff no binary input yields wire a = 1, wire b = 0.
    """
    pats = evaluate(width, lows, highs)
    full = (1 << (1 << width)) - 1
    complements = [full ^ p for p in pats]
    rows = []
    for a in range(width):
        row = 0
        pa = pats[a]
        for b in range(width):
            if pa & complements[b] == 0:
                row |= 1 << b
        rows.append(row)
    return rows
