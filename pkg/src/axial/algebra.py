"""Commutative non-associative algebras given by structure constants."""
from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .linalg import ZERO, ONE, Subspace
from .scalars import (
    as_scalar,
    common_radicand,
    format_scalar,
    parse_scalar,
)

__all__ = [
    "Algebra",
    "NotAnIdealError",
    "ClosureError",
    "multiply",
    "ad_matrix",
    "eigenspace",
    "subalgebra_closure",
    "ideal_closure",
    "is_ideal",
    "quotient",
    "Quotient",
    "identity_element",
    "jordan_identity_check",
    "JordanCheck",
    "restrict",
    "load_algebra",
    "dump_algebra",
]


class NotAnIdealError(ValueError):
    pass


class ClosureError(RuntimeError):
    """A closure loop failed to stabilize within the dimension bound."""


class Algebra:
    """Commutative algebra with basis ``e_0 .. e_{n-1}``.

    ``products`` maps ``(i, j)`` with ``i <= j`` to the coordinate vector of
    ``e_i e_j``; missing pairs are zero.  ``axes`` holds distinguished axis
    vectors and ``form`` an optional Gram matrix of a Frobenius form.
    """

    def __init__(self, dim: int, products: dict, *, labels=None, axes=(), form=None,
                 radicand: int | None = None, name: str = ""):
        if dim <= 0:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.name = name
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("one label per basis element is required")
        table = [[None] * dim for _ in range(dim)]
        for (i, j), vec in products.items():
            vec = tuple(as_scalar(x) for x in vec)
            if len(vec) != dim:
                raise ValueError(f"product ({i},{j}) has length {len(vec)}, expected {dim}")
            if i > j:
                i, j = j, i
            table[i][j] = table[j][i] = vec
        zero = la.zeros(dim)
        self._table = tuple(tuple(v if v is not None else zero for v in row) for row in table)
        # sparse copy for fast multiplication
        self._sparse = tuple(
            tuple(tuple((k, x) for k, x in enumerate(v) if x) for v in row) for row in self._table
        )
        consts = (x for row in self._table for v in row for x in v)
        self.radicand = common_radicand(consts, radicand)
        self.axes = tuple(self._as_vector(a) for a in axes)
        self.form = [list(r) for r in form] if form is not None else None

    def _as_vector(self, a):
        if isinstance(a, int):
            return la.unit(self.dim, a)
        v = tuple(as_scalar(x) for x in a)
        if len(v) != self.dim:
            raise ValueError("vector length does not match the algebra dimension")
        return v

    def __repr__(self):
        name = f" {self.name}" if self.name else ""
        return f"<Algebra{name} dim={self.dim}>"

    def product(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def basis(self, i: int) -> tuple:
        return la.unit(self.dim, i)

    def basis_vectors(self) -> list[tuple]:
        return [la.unit(self.dim, i) for i in range(self.dim)]

    def vector(self, coords: Sequence) -> tuple:
        return self._as_vector(coords)

    def element(self, **coeffs) -> tuple:
        """Vector from label coefficients, e.g. ``A.element(a=1, b=-1)``."""
        v = [ZERO] * self.dim
        for name, c in coeffs.items():
            v[self.labels.index(name)] = as_scalar(c)
        return tuple(v)

    def mul(self, u, v) -> tuple:
        if len(u) != self.dim or len(v) != self.dim:
            raise ValueError("dimension mismatch")
        out = [ZERO] * self.dim
        sp = self._sparse
        nz_v = [(j, y) for j, y in enumerate(v) if y]
        for i, x in enumerate(u):
            if not x:
                continue
            row = sp[i]
            for j, y in nz_v:
                c = x * y
                for k, g in row[j]:
                    out[k] += c * g
        return tuple(out)

    def mul_basis(self, u, j: int) -> tuple:
        """``u * e_j``."""
        out = [ZERO] * self.dim
        sp = self._sparse
        for i, x in enumerate(u):
            if x:
                for k, g in sp[i][j]:
                    out[k] += x * g
        return tuple(out)

    def square(self, u) -> tuple:
        return self.mul(u, u)

    def is_idempotent(self, u) -> bool:
        return self.mul(u, u) == tuple(u)

    def structure_tensor(self) -> list:
        return [[list(v) for v in row] for row in self._table]

    def bilinear(self, u, v):
        """Value of the attached Frobenius form."""
        if self.form is None:
            raise ValueError("no Frobenius form attached")
        return la.dot(u, la.matvec(self.form, v))

    def with_form(self, gram) -> "Algebra":
        return self.replace(form=gram)

    def with_axes(self, axes) -> "Algebra":
        return self.replace(axes=axes)

    def replace(self, **changes) -> "Algebra":
        kw = dict(labels=self.labels, axes=self.axes, form=self.form,
                  radicand=self.radicand, name=self.name)
        kw.update(changes)
        return Algebra(self.dim, self._products(), **kw)

    def _products(self) -> dict:
        return {(i, j): self._table[i][j]
                for i in range(self.dim) for j in range(i, self.dim) if any(self._table[i][j])}

    def is_rational(self) -> bool:
        return self.radicand is None


def multiply(A: Algebra, u, v) -> tuple:
    return A.mul(u, v)


def ad_matrix(A: Algebra, a) -> la.Matrix:
    """Matrix of ``u -> a u``; column ``j`` is ``a e_j``."""
    cols = [A.mul_basis(a, j) for j in range(A.dim)]
    return la.columns_to_matrix(cols)


def eigenspace(M: la.Matrix, lam) -> Subspace:
    n = len(M)
    return Subspace(la.nullspace(la.shift(M, lam), n), n)


def subalgebra_closure(A: Algebra, S: Iterable) -> Subspace:
    """Smallest product-closed subspace containing ``S``."""
    span = Subspace(list(S), A.dim)
    for _ in range(A.dim + 1):
        basis = span.basis
        new = [A.mul(basis[i], basis[j]) for i in range(len(basis)) for j in range(i, len(basis))]
        grown = span.with_vectors(new)
        if grown.dim == span.dim:
            return span
        span = grown
    raise ClosureError("subalgebra closure did not stabilize")


def ideal_closure(A: Algebra, S: Iterable) -> Subspace:
    """Smallest subspace containing ``S`` and closed under multiplication by ``A``."""
    span = Subspace(list(S), A.dim)
    for _ in range(A.dim + 1):
        new = [A.mul_basis(v, j) for v in span.basis for j in range(A.dim)]
        grown = span.with_vectors(new)
        if grown.dim == span.dim:
            return span
        span = grown
    raise ClosureError("ideal closure did not stabilize")


def is_ideal(A: Algebra, I: Subspace) -> bool:
    return all(I.contains(A.mul_basis(v, j)) for v in I.basis for j in range(A.dim))


class Quotient:
    """``A / I`` on the complement spanned by the non-pivot basis vectors of ``I``."""

    def __init__(self, algebra: Algebra, ideal: Subspace, complement: tuple):
        self.algebra = algebra
        self.ideal = ideal
        self.complement = complement

    def project(self, v) -> tuple:
        r = self.ideal.reduce(v)
        return tuple(r[c] for c in self.complement)

    def lift(self, w) -> tuple:
        v = [ZERO] * self.ideal.ambient
        for c, x in zip(self.complement, w):
            v[c] = x
        return tuple(v)

    def projection_matrix(self) -> la.Matrix:
        n = self.ideal.ambient
        return la.columns_to_matrix([self.project(la.unit(n, i)) for i in range(n)])


def quotient(A: Algebra, I: Subspace) -> tuple[Algebra, Quotient]:
    """``A / I`` together with the projection data."""
    if not is_ideal(A, I):
        raise NotAnIdealError("subspace is not an ideal")
    complement = tuple(c for c in range(A.dim) if c not in set(I.pivots))
    if not complement:
        raise ValueError("quotient by the whole algebra is zero")
    q = Quotient(A, I, complement)
    products = {}
    for x, i in enumerate(complement):
        for y in range(x, len(complement)):
            products[(x, y)] = q.project(A.product(i, complement[y]))
    axes = []
    for a in A.axes:
        pa = q.project(a)
        if any(pa) and pa not in axes:
            axes.append(pa)
    B = Algebra(len(complement), products, labels=[A.labels[c] for c in complement],
                axes=axes, radicand=A.radicand, name=f"{A.name}/I" if A.name else "")
    return B, q


def restrict(A: Algebra, S: Subspace) -> Algebra:
    """A product-closed subspace as an algebra in its RREF basis coordinates."""
    basis = S.basis
    products = {}
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            p = A.mul(basis[i], basis[j])
            products[(i, j)] = S.coordinates(p)
    return Algebra(len(basis), products, radicand=A.radicand)


def identity_element(A: Algebra):
    """The identity ``e`` (``e e_i = e_i`` for all i) or ``None``."""
    n = A.dim
    # unknown e = sum x_k e_k ; equation block for each i: sum_k x_k (e_k e_i) = e_i
    rows, rhs = [], []
    for i in range(n):
        for m in range(n):
            rows.append([A.product(k, i)[m] for k in range(n)])
            rhs.append(ONE if m == i else ZERO)
    return la.solve(rows, rhs)


class JordanCheck:
    def __init__(self, passed: bool, witness=None):
        self.passed = passed
        self.witness = witness

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return f"JordanCheck(passed={self.passed}, witness={self.witness})"


def _integer_tensor(A: Algebra):
    """Structure tensor scaled to integers (exact), or an object array of scalars."""
    g = [[list(v) for v in row] for row in A._table]
    if A.is_rational():
        from math import lcm

        den = 1
        for row in g:
            for v in row:
                for x in v:
                    den = lcm(den, Fraction(x).denominator)
        ints = [[[int(Fraction(x) * den) for x in v] for v in row] for row in g]
        bound = max((abs(x) for row in ints for v in row for x in v), default=0)
        n = A.dim
        # four nested contractions of size n each stay below 2**62
        if bound == 0 or (bound ** 3) * (n ** 4) * 3 < 2 ** 62:
            return np.array(ints, dtype=np.int64)
        return np.array(ints, dtype=object)
    return np.array(g, dtype=object)


def jordan_identity_check(A: Algebra) -> JordanCheck:
    """Check the fully linearized Jordan identity on all basis quadruples.

    In characteristic 0, ``u(v u^2) = (u v) u^2`` holds identically iff for
    all basis vectors x1, x2, x3, y::

        sum over k of ((x_i x_j) y) x_k - (x_i x_j)(y x_k) = 0,

    where ``{i, j, k} = {1, 2, 3}``.  The witness is the first failing
    quadruple ``(x1, x2, x3, y)`` of basis indices.
    """
    g = _integer_tensor(A)
    # P[i,j,y,m] = ((e_i e_j) e_y)_m
    P = np.tensordot(g, g, axes=([2], [0]))
    # first[i,j,y,k,m] = (((e_i e_j) e_y) e_k)_m
    first = np.tensordot(P, g, axes=([3], [0]))
    # second[i,j,y,k,m] = ((e_i e_j)(e_y e_k))_m = sum_p (e_y e_k)_p * P[i,j,p,m]
    second = np.tensordot(P, g, axes=([2], [2]))  # [i,j,m,y,k]
    second = second.transpose(0, 1, 3, 4, 2)
    term = first - second  # indexed [i, j, y, k, m]; symmetric in i, j
    # total[x1,x2,x3,y,m] = term[x1,x2,y,x3] + term[x1,x3,y,x2] + term[x2,x3,y,x1]
    t = term.transpose(0, 1, 3, 2, 4)  # [i, j, k, y, m]
    total = t + t.transpose(0, 2, 1, 3, 4) + t.transpose(2, 1, 0, 3, 4)
    nz = np.argwhere(total != 0)
    if len(nz) == 0:
        return JordanCheck(True)
    x1, x2, x3, y, _ = (int(v) for v in nz[0])
    return JordanCheck(False, (x1, x2, x3, y))


# -- serialization ----------------------------------------------------------

def dump_algebra(A: Algebra) -> dict:
    gamma = {}
    for i in range(A.dim):
        for j in range(i, A.dim):
            v = A.product(i, j)
            if any(v):
                gamma[f"{i},{j}"] = [format_scalar(x) for x in v]
    data = {
        "dim": A.dim,
        "field": {"radicand": A.radicand},
        "labels": list(A.labels),
        "gamma": gamma,
    }
    if A.axes:
        axes = []
        for a in A.axes:
            nz = [i for i, x in enumerate(a) if x]
            if len(nz) == 1 and a[nz[0]] == 1:
                axes.append(nz[0])
            else:
                axes.append([format_scalar(x) for x in a])
        data["axes"] = axes
    if A.form is not None:
        data["form"] = [[format_scalar(x) for x in row] for row in A.form]
    return data


def load_algebra(data) -> Algebra:
    """Build an algebra from the JSON structure (or a JSON string)."""
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["dim"])
    products = {}
    for key, vec in data.get("gamma", {}).items():
        i, j = (int(x) for x in key.split(","))
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"pair {key} out of range")
        products[(i, j)] = [parse_scalar(x) for x in vec]
    axes = []
    for a in data.get("axes", []):
        axes.append(a if isinstance(a, int) else [parse_scalar(x) for x in a])
    form = data.get("form")
    if form is not None:
        form = [[parse_scalar(x) for x in row] for row in form]
    radicand = (data.get("field") or {}).get("radicand")
    return Algebra(n, products, labels=data.get("labels"), axes=axes, form=form,
                   radicand=radicand)
