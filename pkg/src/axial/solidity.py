"""Solid lines, the rho-grading of an algebra around a 2-generated subalgebra,
idempotent varieties of the exceptional 2-generated algebras, and
recognition of Matsuo algebras."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import linalg as la
from .algebra import Algebra, identity_element, restrict, subalgebra_closure
from .axes import AxisReport, axis_check, frobenius_form, is_automorphism, miyamoto
from .catalog import (NilpotentFrame, idempotent_family, nilpotent_frame,
                      pair_alpha, two_gen_hom)
from .fischer import FischerSpace, MatrixElement, element_order, matsuo_algebra
from .linalg import ZERO, Subspace
from .scalars import as_scalar, format_scalar

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

__all__ = [
    "xi_samples",
    "LineSubalgebra",
    "line_subalgebra",
    "LineClassification",
    "SolidityCounterexample",
    "solidity_check",
    "family_axis_census",
    "GradingDecomposition",
    "rho_decomposition",
    "w_operator_matrices",
    "universal_w_basis",
    "transcribed_st",
    "grading_automorphism",
    "grading_closed",
    "pair_orbits",
    "Component",
    "IdempotentVariety",
    "idempotent_variety_2gen",
    "Recognition",
    "recognize_matsuo",
    "CensusRecord",
    "solidity_census",
]

_GENERIC = [1, -1, 2, -2, HALF, -HALF, 3, Fraction(1, 3), 5]
_RESERVE = [-3, 7, Fraction(-1, 3), Fraction(1, 5), -5, Fraction(1, 7), 11, Fraction(-1, 5)]


def xi_samples(frame: NilpotentFrame, count: int = 12) -> list:
    """Family parameters: a, b and a^(tau_b) first, then generic values.

    Duplicates are dropped and the list is padded from a reserve, so the
    result always has ``count`` distinct nonzero entries (``count >= 3``).
    """
    out = []
    for x in [1 / frame.nu, 1 / frame.mu, frame.c_parameter] + _GENERIC + _RESERVE:
        x = as_scalar(x)
        if x and x not in out:
            out.append(x)
        if len(out) == count:
            return out
    k = 2
    while len(out) < count:
        x = Fraction(1, 10 ** k) + k
        if x not in out:
            out.append(x)
        k += 1
    return out


# -- lines and their classification --------------------------------------------

@dataclass
class LineSubalgebra:
    span: Subspace
    alpha: object
    one: tuple | None

    @property
    def dim(self) -> int:
        return self.span.dim


def _sub_identity(A: Algebra, S: Subspace):
    e = identity_element(restrict(A, S))
    if e is None:
        return None
    return la.combo(e, S.basis, A.dim)


def line_subalgebra(A: Algebra, a, b) -> LineSubalgebra:
    a, b = A.vector(a), A.vector(b)
    S = subalgebra_closure(A, [a, b])
    return LineSubalgebra(S, pair_alpha(A, a, b), _sub_identity(A, S))


class SolidityCounterexample(AssertionError):
    """A sampled idempotent contradicts the solidity theorem."""

    def __init__(self, message, xi=None, report=None):
        super().__init__(message)
        self.xi = xi
        self.report = report


@dataclass
class LineClassification:
    alpha: object
    kind: str               # solid | non-solid | trivially-solid-2B | degenerate
    method: str             # theorem | a-prime | sampling | "theorem (char 0) + sampled evidence"
    witnesses: list = field(default_factory=list)
    samples: list = field(default_factory=list)    # (parameter, AxisReport)

    @property
    def solid(self) -> bool:
        return self.kind in ("solid", "trivially-solid-2B")

    def to_json(self) -> dict:
        out = {
            "alpha": None if self.alpha is None else format_scalar(self.alpha),
            "kind": self.kind,
            "method": self.method,
            "witnesses": self.witnesses,
        }
        if self.samples:
            out["samples"] = [{"parameter": format_scalar(x) if not isinstance(x, str) else x,
                               "passed": r.passed} for x, r in self.samples]
        return out


def _violation_witness(report: AxisReport) -> dict:
    w = {"idempotent": report.is_idempotent, "semisimple": report.semisimple,
         "primitive": report.primitive, "fusion_violations": len(report.fusion_violations)}
    if report.fusion_violations:
        w["first"] = report.fusion_violations[0].to_json()
    return w


def family_axis_census(A: Algebra, frame: NilpotentFrame, xis, eta=HALF) -> list:
    """``[(xi, axis_check(u(xi)))]``; every member is checked to be idempotent first."""
    out = []
    for xi in xis:
        u = idempotent_family(frame, xi)
        if not A.is_idempotent(u):
            raise AssertionError(f"family member at xi={format_scalar(xi)} is not idempotent")
        out.append((xi, axis_check(A, u, eta, with_miyamoto=False)))
    return out


def _variety_points(alpha, count: int):
    """Sample idempotents of J(alpha) for alpha in {0, 1}, in the basis (a, b, sigma)."""
    params = [as_scalar(x) for x in (_GENERIC + _RESERVE)][:count]
    pts = []
    for lam in params:
        if alpha == 1:
            pts.append((lam, (lam, 1 - lam, 2 * lam * (1 - lam))))
        else:
            pts.append((lam, (1 + lam, lam, 2 * lam)))
            pts.append((lam, (lam, 1 + lam, 2 * lam)))
    return pts[:count]


def solidity_check(A: Algebra, a, b, samples: int = 12, *, quarter_sampling: bool = False,
                   matsuo: bool = True, allow_extension: bool = True) -> LineClassification:
    """Decide whether ``<<a, b>>`` is solid in ``A``.

    Routes, by ``alpha = (a, b)``:

    * ``ab = 0`` with a 2-dimensional span: the 2B algebra, trivially solid;
    * ``alpha = 1/4``: ``a' = 1_J - a`` is tested (when ``matsuo`` is false a
      passing ``a'`` is confirmed by sampling the family);
    * ``alpha`` outside ``{0, 1/4, 1}``: solid by theorem, verified on ``samples``
      family members;
    * ``alpha`` in ``{0, 1}``: solid by theorem in characteristic 0, verified on
      the closed-form idempotent families.

    A failing sample on the theorem routes raises :class:`SolidityCounterexample`.
    """
    a, b = A.vector(a), A.vector(b)
    if a == b:
        return LineClassification(None, "degenerate", "theorem", ["a = b"])
    for name, x in (("a", a), ("b", b)):
        rep = axis_check(A, x, with_miyamoto=False)
        if not rep.passed:
            return LineClassification(None, "degenerate", "theorem",
                                      [{"not_a_primitive_axis": name, **_violation_witness(rep)}])
    line = line_subalgebra(A, a, b)
    alpha = line.alpha
    ab = A.mul(a, b)
    if line.dim == 2 and not any(ab):
        return LineClassification(alpha, "trivially-solid-2B", "theorem")

    if alpha == QUARTER and line.one is not None:
        a_prime = la.sub(line.one, a)
        rep = axis_check(A, a_prime, with_miyamoto=False)
        result = LineClassification(alpha, "solid" if rep.passed else "non-solid", "a-prime")
        if not rep.passed:
            result.witnesses.append({"a_prime": [format_scalar(x) for x in a_prime],
                                     **_violation_witness(rep)})
        if quarter_sampling or (rep.passed and not matsuo):
            frame = nilpotent_frame(A, a, b, allow_extension=allow_extension)
            result.samples = family_axis_census(frame.algebra, frame, xi_samples(frame, samples))
            failed = [(xi, r) for xi, r in result.samples if not r.passed]
            if rep.passed and not matsuo:
                result.method = "sampling"
                if failed:
                    result.kind = "non-solid"
                    xi, r = failed[0]
                    result.witnesses.append({"xi": format_scalar(xi), **_violation_witness(r)})
        return result

    if alpha in (0, 1):
        hom = two_gen_hom(A, a, b)
        result = LineClassification(alpha, "solid", "theorem (char 0) + sampled evidence")
        for lam, pt in _variety_points(alpha, samples):
            u = hom(pt)
            rep = axis_check(A, u, with_miyamoto=False)
            result.samples.append((lam, rep))
            if not rep.passed:
                raise SolidityCounterexample(
                    f"idempotent {pt} of J({alpha}) is not a primitive axis", lam, rep)
        return result

    frame = nilpotent_frame(A, a, b, allow_extension=allow_extension)
    result = LineClassification(alpha, "solid", "theorem")
    result.samples = family_axis_census(frame.algebra, frame, xi_samples(frame, samples))
    for xi, rep in result.samples:
        if not rep.passed:
            raise SolidityCounterexample(
                f"family member at xi={format_scalar(xi)} is not a primitive axis", xi, rep)
    return result


# -- the rho-grading -----------------------------------------------------------

@dataclass
class GradingDecomposition:
    """``A = A_-2 + A_-1 + A_0 + A_1 + A_2`` around ``J = <<a, b>>``."""

    algebra: Algebra
    frame: NilpotentFrame
    parts: dict             # k -> Subspace
    W: Subspace
    D: Subspace
    rho: list
    zeta: object
    gram: list
    checks: dict

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    @property
    def dims(self) -> tuple:
        return tuple(self.parts[k].dim for k in range(-2, 3))

    def omega(self, w) -> tuple:
        return self.algebra.mul(self.frame.s, w)

    def chi(self, w) -> tuple:
        return self.algebra.mul(self.frame.t, w)

    def project_w(self, x) -> tuple:
        """Component of ``x`` in ``W`` along ``J``."""
        J = [self.frame.s, self.frame.one, self.frame.t]
        cols = J + list(self.W.basis)
        c = la.solve(la.columns_to_matrix(cols), x)
        return la.combo(c[3:], self.W.basis, self.algebra.dim)


def _image(A, op, basis) -> Subspace:
    return Subspace([op(w) for w in basis], A.dim)


def rho_decomposition(A: Algebra, a, b, *, allow_extension: bool = True) -> GradingDecomposition:
    a, b = A.vector(a), A.vector(b)
    frame = nilpotent_frame(A, a, b, allow_extension=allow_extension)
    alpha = frame.alpha
    if alpha in (0, QUARTER, 1):
        raise ValueError(f"rho decomposition needs alpha outside {{0, 1/4, 1}}, got {alpha}")
    B = frame.algebra
    n = B.dim
    G = B.form if B.form is not None else frobenius_form(B).gram
    J = [frame.s, frame.one, frame.t]
    if la.rank([[la.dot(x, la.matvec(G, y)) for y in J] for x in J]) != 3:
        raise ValueError("the form is degenerate on J")
    W = Subspace(la.nullspace([la.matvec(G, x) for x in J], n), n)
    s, one, t = frame.s, frame.one, frame.t
    omega = lambda w: B.mul(s, w)
    chi = lambda w: B.mul(t, w)
    im_omega = _image(B, omega, W.basis)
    im_chi = _image(B, chi, W.basis)
    # D = ker(omega) n ker(chi) inside W
    stacked = la.columns_to_matrix([omega(w) + chi(w) for w in W.basis])
    D = Subspace([la.combo(c, W.basis, n) for c in la.nullspace(stacked, W.dim)], n)
    parts = {
        -2: Subspace([s], n),
        -1: im_omega,
        0: Subspace([one] + list(D.basis), n),
        1: im_chi,
        2: Subspace([t], n),
    }
    tau_a = miyamoto(B, a, verify=False)
    tau_b = miyamoto(B, b, verify=False)
    rho = la.matmul(tau_b, tau_a)
    zeta = frame.zeta
    checks = {}
    checks["w_is_module"] = all(W.contains(B.mul(x, w)) for x in J for w in W.basis)
    checks["omega_squared_zero"] = all(not any(omega(omega(w))) for w in W.basis)
    checks["chi_squared_zero"] = all(not any(chi(chi(w))) for w in W.basis)
    # maps act on the right: "chi omega" applies chi first
    sixteenth = Fraction(1, 16)
    checks["chi_omega_sixteenth"] = all(omega(chi(v)) == la.scale(sixteenth, v)
                                        for v in im_omega.basis)
    checks["omega_chi_sixteenth"] = all(chi(omega(v)) == la.scale(sixteenth, v)
                                        for v in im_chi.basis)
    all_vectors = [v for k in range(-2, 3) for v in parts[k].basis]
    checks["direct_sum"] = len(all_vectors) == n and la.independent(all_vectors, n)
    checks["rho_eigenvalues"] = all(la.matvec(rho, v) == la.scale(zeta ** k, v)
                                    for k in range(-2, 3) for v in parts[k].basis)
    return GradingDecomposition(B, frame, parts, W, D, rho, zeta, G, checks)


def grading_closed(dec: GradingDecomposition) -> dict:
    """``A_n A_m`` inside ``A_(n+m)`` (zero when ``|n+m| > 2``), per unordered pair."""
    B = dec.algebra
    zero = Subspace.zero(B.dim)
    out = {}
    for n_ in range(-2, 3):
        for m in range(n_, 3):
            target = dec.parts.get(n_ + m, zero)
            out[(n_, m)] = all(target.contains(B.mul(u, v))
                               for u in dec.parts[n_].basis for v in dec.parts[m].basis)
    return out


UNIVERSAL_W_LABELS = ("c", "bc", "ac", "a(bc)", "b(ac)", "c(ab)")


def universal_w_basis(dec: GradingDecomposition) -> list:
    """Projections to W of c, bc, ac, a(bc), b(ac), c(ab) in the 9-dimensional universal algebra."""
    B = dec.algebra
    return [dec.project_w(B.basis(B.labels.index(lab))) for lab in UNIVERSAL_W_LABELS]


def w_operator_matrices(dec: GradingDecomposition, basis) -> tuple:
    """Matrices of omega and chi on ``basis`` of W; row i holds the image of basis[i]."""
    n = dec.algebra.dim
    span = Subspace(basis, n)
    cols = la.columns_to_matrix(basis)

    def coords(v):
        c = la.solve(cols, v)
        if c is None:
            raise ValueError("image is outside the span of the given basis")
        return list(c)

    if span.dim != len(basis):
        raise ValueError("basis vectors are dependent")
    S = [coords(dec.omega(w)) for w in basis]
    T = [coords(dec.chi(w)) for w in basis]
    return S, T


def transcribed_st(frame: NilpotentFrame) -> tuple:
    """The displayed matrices of omega and chi on (c, bc, ac, a(bc), b(ac), c(ab)) in W."""
    al, z, mu, nu = frame.alpha, frame.zeta, frame.mu, frame.nu
    zi = 1 / z
    q = QUARTER
    mn = mu * nu
    S = [
        [0, nu, mu, 0, 0, 1],
        [0, -q * (mu - nu), 0, -q * z, -q, q],
        [0, 0, q * (mu - nu), -q, -q * zi, q],
        [0, q * mn * (1 - zi), 0, q * mu, q * nu, -q * nu],
        [0, 0, q * mn * (1 - z), q * mu, q * nu, -q * mu],
        [0, q * mn * (1 - zi), q * mn * (1 - z), HALF * mu, HALF * nu, -q * (mu + nu)],
    ]
    T = [
        [0, mu, nu, 0, 0, 1],
        [0, q * (mu - nu), 0, -q * zi, -q, q],
        [0, 0, q * (nu - mu), -q, -q * z, q],
        [0, q * mn * (1 - z), 0, q * nu, q * mu, -q * mu],
        [0, 0, q * mn * (1 - zi), q * nu, q * mu, -q * nu],
        [0, q * mn * (1 - z), q * mn * (1 - zi), HALF * nu, HALF * mu, -q * (mu + nu)],
    ]
    cs = 1 / (4 * (al - 1))
    ct = 1 / (al * (al - 1))
    S = [[cs * x for x in row] for row in S]
    T = [[ct * x for x in row] for row in T]
    return S, T


def grading_automorphism(dec: GradingDecomposition, xi, *, verify: bool = True):
    """``phi_xi``: multiplication by ``xi**k`` on ``A_k`` (column convention)."""
    xi = as_scalar(xi)
    if not xi:
        raise ValueError("xi must be nonzero")
    cols, scal = [], []
    for k in range(-2, 3):
        for v in dec.parts[k].basis:
            cols.append(v)
            scal.append(xi ** k)
    P = la.columns_to_matrix(cols)
    n = len(cols)
    Dm = [[scal[i] if i == j else ZERO for j in range(n)] for i in range(n)]
    phi = la.matmul(la.matmul(P, Dm), la.inverse(P))
    if verify and not is_automorphism(dec.algebra, phi):
        raise AssertionError(f"phi_{format_scalar(xi)} is not an automorphism")
    return phi


# -- idempotent varieties ------------------------------------------------------

@dataclass
class Component:
    name: str
    equations: list
    points: list            # (parameter, vector)
    member: object = None   # predicate on vectors

    def contains(self, v) -> bool:
        return bool(self.member(v))


@dataclass
class IdempotentVariety:
    alpha: object
    components: list
    verified: bool


def idempotent_variety_2gen(J: Algebra, alpha, samples: int = 10) -> IdempotentVariety:
    """Closed-form idempotents of ``J(alpha)`` in the basis ``(a, b, sigma)``.

    Every returned point is squared and compared with itself.
    """
    alpha = as_scalar(alpha)
    params = [as_scalar(x) for x in (_GENERIC + _RESERVE)][:samples]
    if alpha == 1:
        comps = [Component("baric line", ["l1 + l2 = 1", "l3 = 2*l1*l2"],
                           [(l, (l, 1 - l, 2 * l * (1 - l))) for l in params],
                           lambda v: v[0] + v[1] == 1 and v[2] == 2 * v[0] * v[1])]
    elif alpha == 0:
        comps = [
            Component("first line", ["l1 - l2 = 1", "l1 + l2 - l3 = 1"],
                      [(l, (1 + l, l, 2 * l)) for l in params],
                      lambda v: v[0] - v[1] == 1 and v[0] + v[1] - v[2] == 1),
            Component("second line", ["l1 - l2 = -1", "l1 + l2 - l3 = 1"],
                      [(l, (l, 1 + l, 2 * l)) for l in params],
                      lambda v: v[0] - v[1] == -1 and v[0] + v[1] - v[2] == 1),
        ]
    else:
        frame = nilpotent_frame(J, 0, 1)
        xis = xi_samples(frame, samples)
        family = Component("xi family", ["u = xi s + 1/2 1_J + xi^-1 t"],
                           [(x, idempotent_family(frame, x)) for x in xis],
                           lambda v: frame.parameter_of(v) is not None)
        zero = la.zeros(J.dim)
        comps = [family, Component("isolated", ["u = 0", "u = 1_J"],
                                   [("0", zero), ("1", frame.one)],
                                   lambda v: v == zero or v == frame.one)]
        J = frame.algebra
    ok = all(J.square(p) == tuple(p) for c in comps for _, p in c.points)
    return IdempotentVariety(alpha, comps, ok)


# -- Matsuo recognition --------------------------------------------------------

@dataclass
class Recognition:
    applicable: bool
    reason: str = ""
    orders: dict = field(default_factory=dict)      # (i, j) -> |tau_i tau_j|
    matsuo: Algebra | None = None
    images: list = field(default_factory=list)
    homomorphism: bool = False
    surjective: bool = False
    kernel_dim: int | None = None

    @property
    def orders_ok(self) -> bool:
        return all(o in (1, 2, 3) for o in self.orders.values())


def recognize_matsuo(A: Algebra, X=None, eta=HALF) -> Recognition:
    """Rebuild ``A`` as a quotient of the Matsuo algebra of its Miyamoto group."""
    X = [A.vector(x) for x in (A.axes if X is None else X)]
    if not X:
        return Recognition(False, "no axes")
    G = A.form if A.form is not None else frobenius_form(A, axes=X).gram
    for i, j in combinations(range(len(X)), 2):
        v = la.dot(X[i], la.matvec(G, X[j]))
        if v not in (ZERO, QUARTER):
            return Recognition(False, f"form value {format_scalar(v)} on axes {i}, {j}")
    for i, x in enumerate(X):
        if all(not any(A.mul(x, y)) for j, y in enumerate(X) if j != i):
            return Recognition(False, f"axis {i} annihilates every other axis")
    taus = [MatrixElement(miyamoto(A, x, eta)) for x in X]
    if len(set(taus)) != len(taus):
        return Recognition(False, "two axes share a Miyamoto involution")
    pos = {t: i for i, t in enumerate(taus)}
    rec = Recognition(True)
    third = {}
    for i, j in combinations(range(len(X)), 2):
        o = element_order(taus[i] * taus[j], bound=64)
        rec.orders[(i, j)] = o
        if o == 3:
            e = taus[j] * taus[i] * taus[j]
            if e not in pos:
                return Recognition(False, "involutions are not closed under conjugation",
                                   rec.orders)
            third[(i, j)] = third[(j, i)] = pos[e]
        elif o == 2:
            third[(i, j)] = third[(j, i)] = None
    if not rec.orders_ok:
        rec.reason = "Miyamoto involutions do not form a 3-transposition set"
        return rec
    labels = [f"t{i}" for i in range(len(X))]
    FS = FischerSpace(taus, third)
    M = matsuo_algebra(FS, eta, labels=labels)
    rec.matsuo = M
    rec.images = X
    rec.homomorphism = all(
        la.combo(M.product(i, j), X, A.dim) == A.mul(X[i], X[j])
        for i in range(len(X)) for j in range(i, len(X)))
    r = la.rank(X)
    rec.surjective = r == A.dim
    rec.kernel_dim = len(X) - r
    return rec


# -- census --------------------------------------------------------------------

@dataclass
class CensusRecord:
    pair: tuple
    labels: tuple
    orbit_size: int
    classification: LineClassification

    def to_json(self) -> dict:
        return {"pair": list(self.pair), "labels": list(self.labels),
                "orbit_size": self.orbit_size, **self.classification.to_json()}


def _axis_label(A: Algebra, v) -> str:
    nz = [i for i, x in enumerate(v) if x]
    if len(nz) == 1 and v[nz[0]] == 1:
        return A.labels[nz[0]]
    return "+".join(f"{format_scalar(v[i])}*{A.labels[i]}" for i in nz)


def pair_orbits(A: Algebra, X) -> list:
    """Orbits of unordered pairs of ``X`` under the Miyamoto group of ``X``.

    When an involution does not map ``X`` into itself every pair is its own orbit.
    """
    pos = {x: i for i, x in enumerate(X)}
    actions = []
    for x in X:
        tau = miyamoto(A, x, verify=False)
        act = [pos.get(la.matvec(tau, y)) for y in X]
        if None in act:
            actions = []
            break
        actions.append(act)
    pairs = list(combinations(range(len(X)), 2))
    seen = set()
    orbits = []
    for p in pairs:
        if p in seen:
            continue
        orbit = {p}
        queue = deque([p])
        while queue:
            i, j = queue.popleft()
            for act in actions:
                q = tuple(sorted((act[i], act[j])))
                if q not in orbit:
                    orbit.add(q)
                    queue.append(q)
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits


def solidity_census(A: Algebra, X=None, samples: int = 12, *, matsuo: bool | None = None,
                    allow_extension: bool = True) -> list:
    """Classify one representative pair per Miyamoto orbit of axis pairs."""
    X = [A.vector(x) for x in (A.axes if X is None else X)]
    if matsuo is None:
        matsuo = A.name.startswith("M_")
    records = []
    for orbit in pair_orbits(A, X):
        i, j = orbit[0]
        cls = solidity_check(A, X[i], X[j], samples, matsuo=matsuo,
                             allow_extension=allow_extension)
        records.append(CensusRecord((i, j), (_axis_label(A, X[i]), _axis_label(A, X[j])),
                                    len(orbit), cls))
    return records
