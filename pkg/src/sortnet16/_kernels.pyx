# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bit-sliced kernels for exhaustive comparator-network checks.

Same contract as ``_bitslice``: one 2**width-bit slice per wire, laid out
as 64-bit words; input v maps to the vector whose wire-0 bit is the most
significant bit of v.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

ctypedef uint64_t u64

cdef u64 _LOW_PATTERNS[6]
_LOW_PATTERNS[0] = <u64>0xAAAAAAAAAAAAAAAAULL
_LOW_PATTERNS[1] = <u64>0xCCCCCCCCCCCCCCCCULL
_LOW_PATTERNS[2] = <u64>0xF0F0F0F0F0F0F0F0ULL
_LOW_PATTERNS[3] = <u64>0xFF00FF00FF00FF00ULL
_LOW_PATTERNS[4] = <u64>0xFFFF0000FFFF0000ULL
_LOW_PATTERNS[5] = <u64>0xFFFFFFFF00000000ULL


cdef int _ctz64(u64 x):
    cdef int n = 0
    while not (x & 1):
        x >>= 1
        n += 1
    return n


cdef u64* _eval(int width, list lows, list highs, int64_t nwords, u64 tail_mask) except NULL:
    cdef u64* s = <u64*> malloc(<size_t>width * <size_t>nwords * sizeof(u64))
    if s == NULL:
        raise MemoryError()
    cdef int i, j, a, b
    cdef int64_t k, c, ncomps
    cdef u64 word, x, y
    cdef u64* ra
    cdef u64* rb
    for i in range(width):
        j = width - 1 - i
        ra = s + i * nwords
        if j >= 6:
            for k in range(nwords):
                ra[k] = <u64>0xFFFFFFFFFFFFFFFFULL if (k >> (j - 6)) & 1 else 0
        else:
            word = _LOW_PATTERNS[j]
            for k in range(nwords):
                ra[k] = word
        ra[nwords - 1] &= tail_mask
    ncomps = len(lows)
    for c in range(ncomps):
        a = lows[c]
        b = highs[c]
        ra = s + a * nwords
        rb = s + b * nwords
        for k in range(nwords):
            x = ra[k]
            y = rb[k]
            ra[k] = x & y
            rb[k] = x | y
    return s


cdef inline int64_t _nwords(int width):
    cdef int64_t nbits = <int64_t>1 << width
    return (nbits + 63) >> 6


cdef inline u64 _tail(int width):
    cdef int64_t nbits = <int64_t>1 << width
    if nbits % 64 == 0:
        return <u64>0xFFFFFFFFFFFFFFFFULL
    return (<u64>1 << (nbits % 64)) - 1


def _check_width(int width):
    if width < 1 or width > 28:
        raise ValueError("kernel supports widths 1..28")


cdef void _check_comps(int width, list lows, list highs) except *:
    cdef int64_t c
    cdef int a, b
    for c in range(len(lows)):
        a = lows[c]
        b = highs[c]
        if not (0 <= a < b < width):
            raise ValueError(f"comparator ({a}, {b}) invalid for width {width}")


def first_unsorted(int width, lows, highs):
    """Least input index whose output is not non-decreasing, or -1."""
    _check_width(width)
    cdef list lo_list = list(lows)
    cdef list hi_list = list(highs)
    _check_comps(width, lo_list, hi_list)
    cdef int64_t nwords = _nwords(width)
    cdef u64* s = _eval(width, lo_list, hi_list, nwords, _tail(width))
    cdef int i
    cdef int64_t k
    cdef u64 bad
    cdef int64_t found = -1
    try:
        for k in range(nwords):
            bad = 0
            for i in range(width - 1):
                bad |= s[i * nwords + k] & ~s[(i + 1) * nwords + k]
            if bad:
                found = k * 64 + _ctz64(bad)
                break
    finally:
        free(s)
    return found


def leq_masks(int width, lows, highs):
    """Bitmask rows of the always-at-most relation between wires."""
    _check_width(width)
    cdef list lo_list = list(lows)
    cdef list hi_list = list(highs)
    _check_comps(width, lo_list, hi_list)
    cdef int64_t nwords = _nwords(width)
    cdef u64* s = _eval(width, lo_list, hi_list, nwords, _tail(width))
    cdef int a, b
    cdef int64_t k
    cdef u64 row
    cdef bint ok
    rows = []
    try:
        for a in range(width):
            row = 0
            for b in range(width):
                ok = True
                for k in range(nwords):
                    if s[a * nwords + k] & ~s[b * nwords + k]:
                        ok = False
                        break
                if ok:
                    row |= <u64>1 << b
            rows.append(int(row))
    finally:
        free(s)
    return rows
