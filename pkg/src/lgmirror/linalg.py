"""Exact linear algebra over a coefficient field.

Sparse rows (``{column: value}``) for the large but very sparse maps the
truncated homology solver produces; a small dense nullspace routine for
2x2 monodromy work.
"""

from __future__ import annotations


def sparse_rank(rows, field) -> int:
    """Rank of a matrix given as an iterable of sparse rows."""
    F = field
    pivots: dict = {}
    for row in rows:
        row = {c: v for c, v in row.items() if not F.is_zero(v)}
        while row:
            c = min(row)
            prow = pivots.get(c)
            if prow is None:
                inv = F.inv(row[c])
                pivots[c] = {k: F.mul(v, inv) for k, v in row.items()}
                break
            f = row[c]
            for k, v in prow.items():
                s = F.sub(row.get(k, F.zero), F.mul(f, v))
                if F.is_zero(s):
                    row.pop(k, None)
                else:
                    row[k] = s
    return len(pivots)


def rref(matrix, field):
    """Reduced row echelon form of a dense matrix; returns (rows, pivot columns)."""
    F = field
    M = [[F.convert(x) for x in row] for row in matrix]
    nrows = len(M)
    ncols = len(M[0]) if M else 0
    pivcols = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if not F.is_zero(M[i][c])), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = F.inv(M[r][c])
        M[r] = [F.mul(x, inv) for x in M[r]]
        for i in range(nrows):
            if i != r and not F.is_zero(M[i][c]):
                f = M[i][c]
                M[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(M[i], M[r])]
        pivcols.append(c)
        r += 1
        if r == nrows:
            break
    return M, pivcols


def rank(matrix, field) -> int:
    return len(rref(matrix, field)[1])


def nullspace(matrix, field) -> list:
    """Basis of ``{v : matrix @ v = 0}``, one vector per free column."""
    F = field
    ncols = len(matrix[0]) if matrix else 0
    M, pivcols = rref(matrix, field)
    free = [c for c in range(ncols) if c not in pivcols]
    basis = []
    for fc in free:
        v = [F.zero] * ncols
        v[fc] = F.one
        for r, pc in enumerate(pivcols):
            v[pc] = F.neg(M[r][fc])
        basis.append(v)
    return basis
