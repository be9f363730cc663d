"""Dense exact linear algebra over a :class:`~gnetcode.field.Field`.

Vectors are tuples of field elements (integers), matrices are tuples of
row tuples.  Everything is immutable and hashable, which the channel and
distance engines rely on for set membership.
"""

from __future__ import annotations

from .field import Field

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]


def zeros(rows: int, cols: int) -> Matrix:
    return ((0,) * cols,) * rows


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def dims(a: Matrix) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def vec_add(f: Field, u: Vector, v: Vector) -> Vector:
    return tuple(f.add(x, y) for x, y in zip(u, v, strict=True))


def vec_sub(f: Field, u: Vector, v: Vector) -> Vector:
    return tuple(f.sub(x, y) for x, y in zip(u, v, strict=True))


def vec_neg(f: Field, u: Vector) -> Vector:
    return tuple(f.neg(x) for x in u)


def vec_scale(f: Field, s: int, u: Vector) -> Vector:
    return tuple(f.mul(s, x) for x in u)


def mat_add(f: Field, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_add(f, ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_sub(f: Field, a: Matrix, b: Matrix) -> Matrix:
    return tuple(vec_sub(f, ra, rb) for ra, rb in zip(a, b, strict=True))


def mat_neg(f: Field, a: Matrix) -> Matrix:
    return tuple(vec_neg(f, r) for r in a)


def mat_scale(f: Field, s: int, a: Matrix) -> Matrix:
    return tuple(vec_scale(f, s, r) for r in a)


def mat_mul(f: Field, a: Matrix, b: Matrix) -> Matrix:
    ra, ca = dims(a)
    rb, cb = dims(b)
    if ca != rb:
        raise ValueError(f"dimension mismatch: {ra}x{ca} times {rb}x{cb}")
    bt = transpose(b)
    return tuple(tuple(_dot(f, row, col) for col in bt) for row in a)


def vec_mat_mul(f: Field, v: Vector, a: Matrix) -> Vector:
    ra, _ = dims(a)
    if len(v) != ra:
        raise ValueError(f"dimension mismatch: 1x{len(v)} times {ra}x{dims(a)[1]}")
    return tuple(_dot(f, v, col) for col in transpose(a))


def _dot(f: Field, u: Vector, v: Vector) -> int:
    acc = 0
    for x, y in zip(u, v):
        acc = f.add(acc, f.mul(x, y))
    return acc


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def columns(a: Matrix) -> list[Vector]:
    return [tuple(row[j] for row in a) for j in range(dims(a)[1])]


def from_columns(cols: list[Vector]) -> Matrix:
    return tuple(zip(*cols)) if cols else ()


def block_diag(blocks: list[Matrix]) -> Matrix:
    """Block-diagonal assembly of the given matrices."""
    total_r = sum(dims(b)[0] for b in blocks)
    total_c = sum(dims(b)[1] for b in blocks)
    out = [[0] * total_c for _ in range(total_r)]
    r0 = c0 = 0
    for b in blocks:
        br, bc = dims(b)
        for i in range(br):
            for j in range(bc):
                out[r0 + i][c0 + j] = b[i][j]
        r0 += br
        c0 += bc
    return tuple(tuple(row) for row in out)


def _echelon(f: Field, a: Matrix) -> tuple[list[list[int]], list[int]]:
    """Row echelon form (in place on a copy); returns (rows, pivot columns)."""
    mat = [list(r) for r in a]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r >= nrows:
            break
        pivot = next((i for i in range(r, nrows) if mat[i][col] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = f.inv(mat[r][col])
        mat[r] = [f.mul(inv, x) for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][col] != 0:
                factor = mat[i][col]
                mat[i] = [f.sub(x, f.mul(factor, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    return mat, pivots


def rank(f: Field, a: Matrix) -> int:
    return len(_echelon(f, a)[1])


def pivot_columns(f: Field, a: Matrix) -> list[int]:
    """Leftmost maximal independent column set (lexicographically first)."""
    return _echelon(f, a)[1]


def solve_in_span(f: Field, basis: list[Vector], target: Vector) -> Vector | None:
    """Coefficients c with sum(c_i * basis_i) == target, or None.

    The basis columns must be linearly independent, so a solution, when it
    exists, is unique.
    """
    if not basis:
        return () if all(x == 0 for x in target) else None
    aug = from_columns(basis + [target])
    reduced, pivots = _echelon(f, aug)
    ncols = len(basis)
    if ncols in pivots:
        return None  # target is outside the span
    coeffs = [0] * ncols
    for row, col in zip(range(len(pivots)), pivots):
        coeffs[col] = reduced[row][ncols]
    return tuple(coeffs)
