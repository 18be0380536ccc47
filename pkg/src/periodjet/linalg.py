"""Small exact linear algebra over Fraction: echelon form, determinant,
row-span membership. Matrices are lists of lists of Fractions; every
routine copies its input. Dimensions stay in the single digits here, so
plain Gaussian elimination with exact pivots is all that is needed.
"""

from fractions import Fraction


def _copy(rows):
    return [[Fraction(x) for x in r] for r in rows]


def row_echelon(rows):
    """Return (echelon, rank); echelon rows have strictly increasing pivots."""
    m = _copy(rows)
    if not m:
        return [], 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, len(m)):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                c = m[r][col]
                m[r] = [x - c * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return m[:rank], rank


def det(rows):
    """Exact determinant of a square matrix."""
    m = _copy(rows)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = None
        for r in range(col, n):
            if m[r][col] != 0:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            sign = -sign
        result *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                c = m[r][col] * inv
                m[r] = [x - c * y for x, y in zip(m[r], m[col])]
    return sign * result


def in_row_span(rows, vec):
    """Is vec a rational combination of the given rows?"""
    basis, rank = row_echelon(rows)
    _, joint_rank = row_echelon(basis + [list(vec)])
    return joint_rank == rank
