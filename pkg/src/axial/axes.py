"""Axes of Jordan type: fusion-law verification, Miyamoto involutions, Frobenius forms."""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .algebra import Algebra, ad_matrix, eigenspace, is_ideal
from .linalg import ZERO, ONE, Subspace
from .scalars import as_scalar, format_scalar, sort_key

HALF = Fraction(1, 2)

__all__ = [
    "FusionLaw",
    "jordan_law",
    "AxisReport",
    "FusionViolation",
    "axis_check",
    "miyamoto",
    "NotAnAxisError",
    "FrobeniusResult",
    "FrobeniusError",
    "frobenius_form",
    "gram_determinant",
    "radical",
    "axis_closure",
    "ClosureResult",
    "spans_check",
    "seress_check",
    "projection_graph",
    "ProjectionGraph",
]


class FusionLaw:
    """The Jordan-type law J(eta) on eigenvalues {1, 0, eta}."""

    def __init__(self, eta=HALF):
        eta = as_scalar(eta)
        if eta in (0, 1):
            raise ValueError("eta must differ from 0 and 1")
        self.eta = eta
        self.values = (ONE, ZERO, eta)
        self._rules = {
            (ONE, ONE): {ONE},
            (ZERO, ZERO): {ZERO},
            (ONE, ZERO): set(),
            (ONE, eta): {eta},
            (ZERO, eta): {eta},
            (eta, eta): {ONE, ZERO},
        }

    def __call__(self, lam, mu) -> set:
        key = (lam, mu) if (lam, mu) in self._rules else (mu, lam)
        return self._rules[key]

    def __repr__(self):
        return f"FusionLaw(eta={format_scalar(self.eta)})"


def jordan_law(eta=HALF) -> FusionLaw:
    return FusionLaw(eta)


@dataclass
class FusionViolation:
    pair: tuple          # (lambda, mu)
    witness: tuple       # (u, v) eigenvectors
    component: tuple     # (nu, component vector) that should vanish

    def to_json(self) -> dict:
        lam, mu = self.pair
        nu, comp = self.component
        return {
            "pair": [format_scalar(lam), format_scalar(mu)],
            "witness": [[format_scalar(x) for x in w] for w in self.witness],
            "eigenvalue": format_scalar(nu),
            "component": [format_scalar(x) for x in comp],
        }


@dataclass
class AxisReport:
    is_idempotent: bool
    eigen_dims: dict
    semisimple: bool
    fusion_violations: list = field(default_factory=list)
    primitive: bool = False
    miyamoto: list | None = None
    eta: object = HALF
    eigenspaces: dict = field(default_factory=dict, repr=False)

    @property
    def is_axis(self) -> bool:
        """Idempotent, semisimple with spectrum in the law, fusion law obeyed."""
        return self.is_idempotent and self.semisimple and not self.fusion_violations

    @property
    def passed(self) -> bool:
        """Full check: a primitive axis."""
        return self.is_axis and self.primitive

    @property
    def miyamoto_trivial(self) -> bool:
        return self.is_axis and self.eigen_dims.get(self.eta, 0) == 0

    def to_json(self) -> dict:
        return {
            "is_idempotent": self.is_idempotent,
            "eigen_dims": {format_scalar(k): v for k, v in self.eigen_dims.items()},
            "semisimple": self.semisimple,
            "fusion_violations": [v.to_json() for v in self.fusion_violations],
            "primitive": self.primitive,
            "is_axis": self.is_axis,
            "passed": self.passed,
            "miyamoto_trivial": self.miyamoto_trivial,
            "miyamoto": None if self.miyamoto is None
            else [[format_scalar(x) for x in row] for row in self.miyamoto],
        }


def _annihilated(M, roots) -> bool:
    prod = la.identity(len(M))
    for r in roots:
        prod = la.matmul(prod, la.shift(M, r))
    return all(not x for row in prod for x in row)


def axis_check(A: Algebra, a, eta=HALF, *, with_miyamoto: bool = True,
               first_violation_only: bool = False) -> AxisReport:
    """Verify that ``a`` is an axis of Jordan type ``eta`` in ``A``.

    Fusion is checked on every pair of eigenbasis vectors: the product is
    written in the eigenbasis and components outside ``lam * mu`` must vanish.
    """
    law = FusionLaw(eta)
    a = A.vector(a)
    n = A.dim
    idem = A.is_idempotent(a)
    M = ad_matrix(A, a)
    spaces = {lam: eigenspace(M, lam) for lam in law.values}
    dims = {lam: sp.dim for lam, sp in spaces.items()}
    semisimple = sum(dims.values()) == n
    # minimal-polynomial cross-check of the dimension count
    assert semisimple == _annihilated(M, law.values), "eigenspace count disagrees with minimal polynomial"
    report = AxisReport(idem, dims, semisimple, primitive=False, eta=law.eta, eigenspaces=spaces)
    if not semisimple:
        return report
    report.primitive = idem and spaces[ONE].dim == 1 and spaces[ONE].contains(a)
    order = [(lam, v) for lam in law.values for v in spaces[lam].basis]
    P = la.columns_to_matrix([v for _, v in order])
    Pinv = la.inverse(P)
    labels = [lam for lam, _ in order]
    for x in range(n):
        lam, u = order[x]
        for y in range(x, n):
            mu, v = order[y]
            allowed = law(lam, mu)
            coords = la.matvec(Pinv, A.mul(u, v))
            for nu in law.values:
                if nu in allowed:
                    continue
                comp_coeffs = [c if labels[k] == nu else ZERO for k, c in enumerate(coords)]
                if any(comp_coeffs):
                    comp = la.matvec(P, comp_coeffs)
                    report.fusion_violations.append(FusionViolation((lam, mu), (u, v), (nu, comp)))
                    if first_violation_only:
                        break
            if first_violation_only and report.fusion_violations:
                break
        if first_violation_only and report.fusion_violations:
            break
    if report.is_axis and with_miyamoto:
        report.miyamoto = _tau_from_spaces(spaces, law, n)
    return report


def _tau_from_spaces(spaces, law, n):
    cols, signs = [], []
    for lam in law.values:
        for v in spaces[lam].basis:
            cols.append(v)
            signs.append(-ONE if lam == law.eta else ONE)
    P = la.columns_to_matrix(cols)
    D = [[signs[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    return la.matmul(la.matmul(P, D), la.inverse(P))


class NotAnAxisError(ValueError):
    pass


def miyamoto(A: Algebra, a, eta=HALF, *, verify: bool = True):
    """Miyamoto involution of ``a``: +1 on A_1 + A_0, -1 on A_eta.

    Returns the matrix acting on column vectors.  When ``verify`` is set the
    result is checked to be an involution and an algebra automorphism.
    """
    rep = axis_check(A, a, eta)
    if not rep.is_axis:
        raise NotAnAxisError("vector is not an axis")
    tau = rep.miyamoto
    if verify:
        if not la.is_identity(la.matmul(tau, tau)):
            raise AssertionError("Miyamoto map is not an involution")
        if not is_automorphism(A, tau):
            raise AssertionError("Miyamoto map is not an automorphism")
    return tau


def is_automorphism(A: Algebra, phi) -> bool:
    """``phi(e_i e_j) = phi(e_i) phi(e_j)`` on all basis pairs."""
    cols = la.transpose(phi)
    for i in range(A.dim):
        for j in range(i, A.dim):
            if la.matvec(phi, A.product(i, j)) != A.mul(cols[i], cols[j]):
                return False
    return True


# -- Frobenius forms --------------------------------------------------------

class FrobeniusError(ValueError):
    def __init__(self, message, free_dim=None):
        super().__init__(message)
        self.free_dim = free_dim


@dataclass
class FrobeniusResult:
    gram: list
    homogeneous_dim: int     # dimension of all associating symmetric forms
    solution_dim: int        # dimension left after the normalization B(a, a) = 1


def _pair_index(n):
    idx = {}
    k = 0
    for i in range(n):
        for j in range(i, n):
            idx[(i, j)] = idx[(j, i)] = k
            k += 1
    return idx, k


class _Eliminator:
    """Incremental sparse row reduction.

    Rows are dicts ``column -> value``; column ``ncols`` holds the right-hand
    side.  Every stored row has its pivot as its smallest column, so one
    ascending sweep reduces a new row.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows = {}
        self.inconsistent = False

    def add(self, row: dict) -> bool:
        row = {k: v for k, v in row.items() if v}
        heap = list(row)
        heapq.heapify(heap)
        pivot = None
        while heap:
            p = heapq.heappop(heap)
            if p not in row or p == self.ncols:
                continue
            if p in self.rows:
                f = row.pop(p)
                for k, v in self.rows[p].items():
                    if k == p:
                        continue
                    if k in row:
                        nv = row[k] - f * v
                        if nv:
                            row[k] = nv
                        else:
                            del row[k]
                    else:
                        row[k] = -f * v
                        heapq.heappush(heap, k)
            else:
                pivot = p
                break
        if pivot is None:
            if row:
                self.inconsistent = True
            return False
        inv = ONE / row[pivot]
        self.rows[pivot] = {k: v * inv for k, v in row.items()}
        return True


def frobenius_form(A: Algebra, axes=None) -> FrobeniusResult:
    """Solve for the Frobenius form with ``(a, a) = 1`` on every listed axis.

    Unknowns are the Gram entries ``B[i][j]`` (``i <= j``); equations are
    ``B(e_i e_j, e_k) = B(e_i, e_j e_k)`` over all basis triples.
    """
    axes = A.axes if axes is None else tuple(A.vector(x) for x in axes)
    if not axes:
        raise FrobeniusError("at least one axis is required")
    n = A.dim
    idx, m = _pair_index(n)
    elim = _Eliminator(m)
    for i in range(n):
        for j in range(n):
            for k in range(i, n):
                row = {}
                for l, c in enumerate(A.product(i, j)):
                    if c:
                        key = idx[(l, k)]
                        row[key] = row.get(key, ZERO) + c
                for l, c in enumerate(A.product(j, k)):
                    if c:
                        key = idx[(i, l)]
                        row[key] = row.get(key, ZERO) - c
                elim.add(row)
    homogeneous_dim = m - len(elim.rows)
    for a in axes:
        row = {}
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(a):
                if y:
                    key = idx[(i, j)]
                    row[key] = row.get(key, ZERO) + x * y
        row[m] = ONE
        elim.add(row)
    if elim.inconsistent:
        raise FrobeniusError("no Frobenius form satisfies the normalization")
    solution_dim = m - len(elim.rows)
    if solution_dim:
        raise FrobeniusError(f"Frobenius form is not unique (free dimension {solution_dim})",
                             solution_dim)
    # each stored row only involves columns at or after its pivot
    values = {}
    for p in sorted(elim.rows, reverse=True):
        row = elim.rows[p]
        val = row.get(m, ZERO)
        for k, v in row.items():
            if k != m and k != p:
                val -= v * values[k]
        values[p] = val
    gram = [[values[idx[(i, j)]] for j in range(n)] for i in range(n)]
    return FrobeniusResult(gram, homogeneous_dim, solution_dim)


def gram_determinant(G):
    return la.det(G)


def radical(A: Algebra, G=None) -> Subspace:
    """Kernel of the Gram matrix; verified to be an ideal."""
    G = A.form if G is None else G
    if G is None:
        G = frobenius_form(A).gram
    R = Subspace(la.nullspace(G, A.dim), A.dim)
    if not is_ideal(A, R):
        raise AssertionError("radical of a Frobenius form is not an ideal")
    return R


def form_value(G, u, v):
    return la.dot(u, la.matvec(G, v))


# -- closure and graphs -----------------------------------------------------

@dataclass
class ClosureResult:
    axes: list
    closed: bool
    taus: list

    @property
    def size(self):
        return len(self.axes)


def axis_closure(A: Algebra, X, cap: int = 1000, eta=HALF) -> ClosureResult:
    """Close ``X`` under the Miyamoto involutions of its members, round by round."""
    found = []
    seen = set()
    for x in X:
        x = A.vector(x)
        if x not in seen:
            seen.add(x)
            found.append(x)
    taus = [miyamoto(A, x, eta, verify=False) for x in found]
    frontier = list(range(len(found)))
    done = 0
    while True:
        new = []
        new_set = set()
        # every involution acts on every axis discovered in the previous round
        for bi in range(len(found)):
            tau = taus[bi]
            targets = frontier if bi < done else range(len(found))
            for xi in targets:
                img = la.matvec(tau, found[xi])
                if img not in seen and img not in new_set:
                    new_set.add(img)
                    new.append(img)
        done = len(found)
        if not new:
            return ClosureResult(found, True, taus)
        new.sort(key=lambda v: tuple(sort_key(x) for x in v))
        start = len(found)
        for v in new:
            seen.add(v)
            found.append(v)
            if len(found) > cap:
                return ClosureResult(found, False, taus)
            taus.append(miyamoto(A, v, eta, verify=False))
        frontier = list(range(start, len(found)))


def spans_check(A: Algebra, X) -> bool:
    return Subspace([A.vector(x) for x in X], A.dim).dim == A.dim


def seress_check(A: Algebra, a, eta=HALF):
    """``a(v w) = (a v) w`` for basis ``v`` and ``w`` in A_1(a) + A_0(a).

    Returns ``(True, None)`` or ``(False, (v_index, w))``.
    """
    a = A.vector(a)
    M = ad_matrix(A, a)
    W = eigenspace(M, ONE) + eigenspace(M, ZERO)
    for i in range(A.dim):
        v = A.basis(i)
        av = A.mul(a, v)
        for w in W.basis:
            if A.mul(a, A.mul(v, w)) != A.mul(av, w):
                return False, (i, w)
    return True, None


@dataclass
class ProjectionGraph:
    edges: list
    components: list

    @property
    def connected(self) -> bool:
        return len(self.components) <= 1


def projection_graph(X, G) -> ProjectionGraph:
    """Axes adjacent when their form value is nonzero; components by union-find."""
    X = list(X)
    parent = list(range(len(X)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edges = []
    for i in range(len(X)):
        gi = la.matvec(G, X[i])
        for j in range(i + 1, len(X)):
            if la.dot(X[j], gi):
                edges.append((i, j))
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[max(ri, rj)] = min(ri, rj)
    comps = {}
    for i in range(len(X)):
        comps.setdefault(find(i), []).append(i)
    return ProjectionGraph(edges, sorted(comps.values()))
