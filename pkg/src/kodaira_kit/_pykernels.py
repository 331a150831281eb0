"""Pure-Python kernels; reference implementations of the compiled ``_ckernels``."""

BACKEND = "python"


def bareiss_rank(rows):
    """Rank of an integer matrix (list of row lists) by fraction-free elimination."""
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    c = len(a[0])
    rank = 0
    prev = 1
    for col in range(c):
        if rank == m:
            break
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        if piv != rank:
            a[piv], a[rank] = a[rank], a[piv]
        p = a[rank][col]
        prow = a[rank]
        for i in range(rank + 1, m):
            row = a[i]
            f = row[col]
            for j in range(col + 1, c):
                row[j] = (p * row[j] - f * prow[j]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank


def int_rank(matrix):
    """Rank of a 2-D integer array-like; never reports overflow."""
    return bareiss_rank([[int(x) for x in row] for row in matrix])


def _masks_by_size(nbits):
    groups = [[] for _ in range(nbits + 1)]
    for mask in range(1, 1 << nbits):
        groups[bin(mask).count("1")].append(mask)
    return groups


def coboundary_rows(nbits, p, neg_mask, groups=None):
    """Signed coboundary matrix of degree ``p`` restricted to simplices containing ``neg_mask``.

    Simplices are bitmasks over chart indices; a simplex carries a nonzero
    section space exactly when it contains every chart index with a negative
    exponent. Returns ``(rows, ncols)``.
    """
    if groups is None:
        groups = _masks_by_size(nbits)
    if p + 1 > nbits or p < 0:
        return [], 0
    cols = [s for s in groups[p + 1] if s & neg_mask == neg_mask]
    if p + 2 > nbits:
        return [], len(cols)
    index = {s: k for k, s in enumerate(cols)}
    rows = []
    for big in groups[p + 2]:
        if big & neg_mask != neg_mask:
            continue
        row = [0] * len(cols)
        for k in range(nbits):
            bit = 1 << k
            if big & bit and not neg_mask & bit:
                j = bin(big & (bit - 1)).count("1")
                row[index[big ^ bit]] = -1 if j & 1 else 1
        rows.append(row)
    return rows, len(cols)


def piece_dim(nbits, q, multidegree, groups=None):
    """Dimension of degree-q Cech cohomology on one graded piece."""
    neg = 0
    for i, a in enumerate(multidegree):
        if a < 0:
            neg |= 1 << i
    if groups is None:
        groups = _masks_by_size(nbits)
    rows_q, ncols_q = coboundary_rows(nbits, q, neg, groups)
    if ncols_q == 0:
        return 0
    rank_q = bareiss_rank(rows_q) if rows_q else 0
    rank_prev = 0
    if q >= 1:
        rows_prev, _ = coboundary_rows(nbits, q - 1, neg, groups)
        rank_prev = bareiss_rank(rows_prev) if rows_prev else 0
    return ncols_q - rank_q - rank_prev


def cech_piece_dims(n, q, multidegrees, out):
    """Fill ``out[i]`` with the degree-q dimension of graded piece ``multidegrees[i]``."""
    nbits = n + 1
    groups = _masks_by_size(nbits)
    for i in range(len(multidegrees)):
        out[i] = piece_dim(nbits, q, [int(a) for a in multidegrees[i]], groups)
    return out
