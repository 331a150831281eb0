# cython: boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels: int64 Bareiss rank and per-piece Cech dimensions.

Both release the GIL. Whenever a Hadamard bound shows that int64 minors
could overflow, the entry is reported as -1 and the caller falls back to the
arbitrary-precision Python path.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport log2
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

cnp.import_array()

BACKEND = "cython"

cdef extern from *:
    """
    typedef __int128 kk_i128;
    static inline int kk_popcount(unsigned int x) { return __builtin_popcount(x); }
    """
    ctypedef long long kk_i128
    int kk_popcount(unsigned int x) nogil

# bound on log2 of the Hadamard product; keeps 2*H^2 inside int128
cdef double LOG2_LIMIT = 61.0


cdef double _log2_hadamard(long long* a, int m, int c) noexcept nogil:
    cdef double total = 0.0
    cdef double s
    cdef int i, j
    cdef double x
    for i in range(m):
        s = 0.0
        for j in range(c):
            x = <double>a[i * c + j]
            s += x * x
        if s == 0.0:
            continue  # minors through a zero row vanish
        total += 0.5 * log2(s)
    return total


cdef int _bareiss_rank(long long* a, int m, int c) noexcept nogil:
    cdef int rank = 0
    cdef int col, i, j, piv
    cdef long long prev = 1
    cdef long long p, f, t
    cdef kk_i128 v
    for col in range(c):
        if rank == m:
            break
        piv = -1
        for i in range(rank, m):
            if a[i * c + col] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            for j in range(c):
                t = a[piv * c + j]
                a[piv * c + j] = a[rank * c + j]
                a[rank * c + j] = t
        p = a[rank * c + col]
        for i in range(rank + 1, m):
            f = a[i * c + col]
            for j in range(col + 1, c):
                v = (<kk_i128>p) * a[i * c + j] - (<kk_i128>f) * a[rank * c + j]
                a[i * c + j] = <long long>(v / prev)
            a[i * c + col] = 0
        prev = p
        rank += 1
    return rank


cdef int _checked_rank(long long* a, int m, int c) noexcept nogil:
    if m == 0 or c == 0:
        return 0
    if _log2_hadamard(a, m, c) > LOG2_LIMIT:
        return -1
    return _bareiss_rank(a, m, c)


def int_rank(cnp.int64_t[:, ::1] mat):
    """Rank of an int64 matrix, or -1 if int64 elimination might overflow."""
    cdef int m = mat.shape[0]
    cdef int c = mat.shape[1]
    cdef int r
    if m == 0 or c == 0:
        return 0
    cdef long long* buf = <long long*>malloc(m * c * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    memcpy(buf, &mat[0, 0], m * c * sizeof(long long))
    with nogil:
        r = _checked_rank(buf, m, c)
    free(buf)
    return r


cdef int _build_coboundary(int nbits, int p, unsigned int neg, int* sizes,
                           unsigned int* masks, int* offsets, int* colindex,
                           long long* out, int* nrows) noexcept nogil:
    # returns number of columns; fills out (nrows x ncols, row-major)
    cdef int ncols = 0
    cdef int rows = 0
    cdef int k, b, j, idx
    cdef unsigned int s, big, bit
    if p < 0 or p + 1 > nbits:
        nrows[0] = 0
        return 0
    for k in range(sizes[p + 1]):
        s = masks[offsets[p + 1] + k]
        if (s & neg) == neg:
            colindex[s] = ncols
            ncols += 1
    if p + 2 > nbits or ncols == 0:
        nrows[0] = 0
        return ncols
    for k in range(sizes[p + 2]):
        big = masks[offsets[p + 2] + k]
        if (big & neg) != neg:
            continue
        for j in range(ncols):
            out[rows * ncols + j] = 0
        for b in range(nbits):
            bit = (<unsigned int>1) << b
            if (big & bit) and not (neg & bit):
                j = kk_popcount(big & (bit - 1))
                idx = colindex[big ^ bit]
                out[rows * ncols + idx] = -1 if (j & 1) else 1
        rows += 1
    nrows[0] = rows
    return ncols


def cech_piece_dims(int n, int q, cnp.int64_t[:, ::1] multidegrees, cnp.int64_t[::1] out):
    """Fill ``out[i]`` with the degree-q dimension of piece ``multidegrees[i]``.

    Entries the int64 path cannot certify are set to -1.
    """
    cdef int nbits = n + 1
    if nbits > 24:
        raise ValueError("compiled kernel supports at most 24 charts")
    cdef int npieces = multidegrees.shape[0]
    if multidegrees.shape[1] != nbits:
        raise ValueError("multidegree width must be n + 1")
    cdef unsigned int full = (<unsigned int>1) << nbits
    cdef int* sizes = <int*>malloc((nbits + 2) * sizeof(int))
    cdef int* offsets = <int*>malloc((nbits + 2) * sizeof(int))
    cdef unsigned int* masks = <unsigned int*>malloc(full * sizeof(unsigned int))
    cdef int* colindex = <int*>malloc(full * sizeof(int))
    cdef int maxgroup = 0
    cdef int k, i, pc, ncols_q, ncols_p, rows_q, rows_p, rank_q, rank_p
    cdef unsigned int s, neg
    for k in range(nbits + 2):
        sizes[k] = 0
    for s in range(1, full):
        sizes[kk_popcount(s)] += 1
    offsets[0] = 0
    for k in range(1, nbits + 2):
        offsets[k] = offsets[k - 1] + sizes[k - 1]
        if sizes[k] > maxgroup:
            maxgroup = sizes[k]
    cdef int* fill = <int*>malloc((nbits + 2) * sizeof(int))
    for k in range(nbits + 2):
        fill[k] = 0
    for s in range(1, full):
        pc = kk_popcount(s)
        masks[offsets[pc] + fill[pc]] = s
        fill[pc] += 1
    free(fill)
    cdef long long* mat = <long long*>malloc((<size_t>maxgroup) * maxgroup * sizeof(long long) + 8)
    if sizes == NULL or offsets == NULL or masks == NULL or colindex == NULL or mat == NULL:
        free(sizes); free(offsets); free(masks); free(colindex); free(mat)
        raise MemoryError()
    with nogil:
        for i in range(npieces):
            neg = 0
            for k in range(nbits):
                if multidegrees[i, k] < 0:
                    neg |= (<unsigned int>1) << k
            ncols_q = _build_coboundary(nbits, q, neg, sizes, masks, offsets, colindex, mat, &rows_q)
            if ncols_q == 0:
                out[i] = 0
                continue
            rank_q = _checked_rank(mat, rows_q, ncols_q)
            rank_p = 0
            if q >= 1 and rank_q >= 0:
                ncols_p = _build_coboundary(nbits, q - 1, neg, sizes, masks, offsets, colindex, mat, &rows_p)
                rank_p = _checked_rank(mat, rows_p, ncols_p)
            if rank_q < 0 or rank_p < 0:
                out[i] = -1
            else:
                out[i] = ncols_q - rank_q - rank_p
    free(sizes)
    free(offsets)
    free(masks)
    free(colindex)
    free(mat)
    return np.asarray(out)
