"""Exact dense linear algebra over Q and Q(sqrt(d)).

Matrices are lists of rows; vectors are tuples.  Entries are any exact field
elements (``Fraction`` or :class:`~axial.scalars.QuadExt`).  Elimination
pivots on the first nonzero entry of a column, which is all exact arithmetic
needs.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)

Vector = tuple
Matrix = list


def zeros(n: int) -> tuple:
    return (ZERO,) * n


def unit(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def identity(n: int) -> Matrix:
    return [list(unit(n, i)) for i in range(n)]


def is_zero(v) -> bool:
    return not any(v)


def add(u, v) -> tuple:
    return tuple(x + y for x, y in zip(u, v))


def sub(u, v) -> tuple:
    return tuple(x - y for x, y in zip(u, v))


def scale(c, v) -> tuple:
    return tuple(c * x for x in v)


def combo(coeffs, vectors, n: int | None = None) -> tuple:
    """Linear combination ``sum(c * v)``."""
    if n is None:
        n = len(vectors[0])
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for i, x in enumerate(v):
            if x:
                out[i] += c * x
    return tuple(out)


def dot(u, v):
    s = ZERO
    for x, y in zip(u, v):
        if x and y:
            s += x * y
    return s


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def matvec(m: Matrix, v) -> tuple:
    return tuple(dot(row, v) for row in m)


def matpow(m: Matrix, k: int) -> Matrix:
    result = identity(len(m))
    for _ in range(k):
        result = matmul(result, m)
    return result


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, m: Matrix) -> Matrix:
    return [[c * x for x in row] for row in m]


def shift(m: Matrix, lam) -> Matrix:
    """``m - lam * I``."""
    return [[x - lam if i == j else x for j, x in enumerate(row)] for i, row in enumerate(m)]


def columns_to_matrix(cols: Sequence) -> Matrix:
    return [list(r) for r in zip(*cols)]


def mat_equal(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def is_identity(m: Matrix) -> bool:
    return mat_equal(m, identity(len(m)))


def rref(rows: Iterable[Sequence]) -> tuple[list[list], list[int]]:
    """Reduced row-echelon form.  Returns the nonzero rows and their pivots."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = ONE / m[r][c]   # keeps int input exact
        m[r] = [x * inv if x else x for x in m[r]]
        prow = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def nullspace(m: Matrix, ncols: int | None = None) -> list[tuple]:
    """Basis of ``{x : m x = 0}`` read off the RREF."""
    if ncols is None:
        ncols = len(m[0]) if m else 0
    rows, pivots = rref(m)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(rows, pivots):
            if row[f]:
                x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve(m: Matrix, rhs: Sequence):
    """One solution of ``m x = rhs`` or ``None`` when inconsistent."""
    ncols = len(m[0])
    aug = [list(row) + [b] for row, b in zip(m, rhs)]
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == ncols:
        return None
    x = [ZERO] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[-1]
    return tuple(x)


def det(m: Matrix):
    n = len(m)
    a = [list(r) for r in m]
    result = ONE
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            result = -result
        piv = a[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * (ONE / piv)
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(row) + list(unit(n, i)) for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in rows]


class Subspace:
    """A subspace stored by its canonical RREF basis.

    Equal subspaces have identical ``basis`` tuples, so ``==`` is exact.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, vectors: Iterable[Sequence], ambient: int):
        rows, pivots = rref([v for v in vectors]) if vectors is not None else ([], [])
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in rows)
        self.pivots = tuple(pivots)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls([], ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(identity(ambient), ambient)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def reduce(self, v) -> tuple:
        """``v`` minus its component along the pivot columns (zero iff v is inside)."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                out = [x - c * y if y else x for x, y in zip(out, row)]
        return tuple(out)

    def contains(self, v) -> bool:
        return is_zero(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def coordinates(self, v) -> tuple:
        """Coordinates of a member ``v`` in the RREF basis."""
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def includes(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(list(self.basis) + list(other.basis), self.ambient)

    def intersection(self, other: "Subspace") -> "Subspace":
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient)
        # x in self and in other: solve sum(a_i u_i) = sum(b_j w_j)
        cols = list(self.basis) + [scale(-1, w) for w in other.basis]
        kernel = nullspace(columns_to_matrix(cols), len(cols))
        k = len(self.basis)
        vecs = [combo(x[:k], self.basis, self.ambient) for x in kernel]
        return Subspace(vecs, self.ambient)

    def with_vectors(self, vectors) -> "Subspace":
        return Subspace(list(self.basis) + list(vectors), self.ambient)


def independent(vectors, ambient: int) -> bool:
    return Subspace(vectors, ambient).dim == len(vectors)
