"""Explicit algebras of Jordan type half and their nilpotent frames."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from . import linalg as la
from .algebra import Algebra, restrict, subalgebra_closure
from .axes import frobenius_form
from .linalg import ZERO, ONE, Subspace
from .scalars import as_scalar, radicand_of, solve_unit_quadratic

HALF = Fraction(1, 2)

__all__ = [
    "jordan_pair",
    "jordan_pair_gram",
    "algebra_2b",
    "baric_pair",
    "spin_factor",
    "spin_idempotent",
    "three_gen_universal",
    "table2_gram",
    "UNIVERSAL_LABELS",
    "NilpotentFrame",
    "nilpotent_frame",
    "idempotent_family",
    "DegenerateAlphaError",
    "FieldExtensionError",
    "pair_alpha",
    "Homomorphism",
    "two_gen_hom",
    "three_gen_hom",
]


class DegenerateAlphaError(ValueError):
    pass


class FieldExtensionError(ValueError):
    """The computation needs sqrt(d) but field extension was forbidden."""


def jordan_pair_gram(alpha):
    alpha = as_scalar(alpha)
    c = (alpha - 1) / 2
    return [[ONE, alpha, c], [alpha, ONE, c], [c, c, (alpha - 1) ** 2 / 2]]


def jordan_pair(alpha) -> Algebra:
    """The algebra J(alpha) on the basis (a, b, sigma), sigma = ab - (a + b)/2."""
    alpha = as_scalar(alpha)
    c = (alpha - 1) / 2
    products = {
        (0, 0): (ONE, ZERO, ZERO),
        (1, 1): (ZERO, ONE, ZERO),
        (0, 1): (HALF, HALF, ONE),
        (0, 2): (c, ZERO, ZERO),
        (1, 2): (ZERO, c, ZERO),
        (2, 2): (ZERO, ZERO, c),
    }
    return Algebra(3, products, labels=("a", "b", "sigma"), axes=(0, 1),
                   form=jordan_pair_gram(alpha), name=f"J({alpha})")


def algebra_2b() -> Algebra:
    """F + F with two orthogonal idempotents; the quotient of J(0) by its minimal ideal."""
    products = {(0, 0): (ONE, ZERO), (1, 1): (ZERO, ONE)}
    return Algebra(2, products, labels=("a", "b"), axes=(0, 1),
                   form=la.identity(2), name="2B")


def baric_pair() -> Algebra:
    """J(1)/Z: two axes with ab = (a + b)/2."""
    products = {(0, 0): (ONE, ZERO), (1, 1): (ZERO, ONE), (0, 1): (HALF, HALF)}
    return Algebra(2, products, labels=("a", "b"), axes=(0, 1),
                   form=[[ONE, ONE], [ONE, ONE]], name="J(1)/Z")


def spin_factor(B, axes=()) -> Algebra:
    """Spin factor F + V for the symmetric bilinear form with Gram matrix ``B``.

    Basis is ``(1, e_1, ..., e_m)``; the Frobenius form has ``(1, 1) = 2`` and
    ``(u, v) = 2 b(u, v)`` on V.
    """
    B = [[as_scalar(x) for x in row] for row in B]
    m = len(B)
    if any(B[i][j] != B[j][i] for i in range(m) for j in range(m)):
        raise ValueError("bilinear form must be symmetric")
    n = m + 1
    products = {(0, 0): la.unit(n, 0)}
    for i in range(1, n):
        products[(0, i)] = la.unit(n, i)
        for j in range(i, n):
            products[(i, j)] = la.scale(B[i - 1][j - 1], la.unit(n, 0))
    form = [[ZERO] * n for _ in range(n)]
    form[0][0] = Fraction(2)
    for i in range(1, n):
        for j in range(1, n):
            form[i][j] = 2 * B[i - 1][j - 1]
    labels = ["1"] + [f"e{i}" for i in range(1, n)]
    return Algebra(n, products, labels=labels, axes=axes, form=form, name="spin")


def spin_idempotent(u) -> tuple:
    """(1 + u)/2 for ``u`` given in V-coordinates."""
    return (HALF,) + tuple(HALF * as_scalar(x) for x in u)


# -- the universal three-generated algebra ------------------------------------

UNIVERSAL_LABELS = ("a", "b", "c", "ab", "ac", "bc", "a(bc)", "b(ac)", "c(ab)")
_PAIR = {frozenset((0, 1)): 3, frozenset((0, 2)): 4, frozenset((1, 2)): 5}


class _Assignment:
    """Names u, v, w, uv, ... resolved for one assignment {u, v, w} = {a, b, c}."""

    def __init__(self, u, v, w, params):
        self.u, self.v, self.w = u, v, w
        alpha, beta, gamma, psi = params
        pair_value = {frozenset((0, 1)): alpha, frozenset((1, 2)): beta, frozenset((0, 2)): gamma}
        self.f = lambda x, y: pair_value[frozenset((x, y))]
        self.psi = psi
        self.index = {
            "u": u, "v": v, "w": w,
            "uv": _PAIR[frozenset((u, v))],
            "uw": _PAIR[frozenset((u, w))],
            "vw": _PAIR[frozenset((v, w))],
            "u(vw)": 6 + u, "v(uw)": 6 + v, "w(uv)": 6 + w,
        }

    def vec(self, scale_by, terms) -> tuple:
        out = [ZERO] * 9
        for name, c in terms:
            out[self.index[name]] += scale_by * c
        return tuple(out)


def _table1(s: _Assignment, literal: bool = False) -> dict:
    """Products from the multiplication table for one assignment.

    The printed ``u``-coefficient of ``(uv)(u(vw))`` is ``(u,v)(u,w) + (u,vw)``;
    that version violates the Jordan identity and admits no Frobenius form.
    The default uses ``(u,v)(v,w) + (u,vw)``, which agrees with the form table.
    """
    f, psi = s.f, s.psi
    u, v, w = s.u, s.v, s.w
    uv, uw, vw = f(u, v), f(u, w), f(v, w)
    I = s.index
    q = Fraction
    u_coeff = uv * uw + psi if literal else uv * vw + psi
    return {
        (I["u"], I["u"]): s.vec(1, [("u", 1)]),
        (I["u"], I["v"]): s.vec(1, [("uv", 1)]),
        (I["u"], I["vw"]): s.vec(1, [("u(vw)", 1)]),
        (I["u"], I["uv"]): s.vec(q(1, 2), [("u", uv), ("uv", 1)]),
        (I["u"], I["u(vw)"]): s.vec(q(1, 2), [("u", psi), ("u(vw)", 1)]),
        (I["u"], I["v(uw)"]): s.vec(q(1, 4), [
            ("u", psi), ("uv", uw), ("uw", uv), ("u(vw)", 1), ("v(uw)", 1), ("w(uv)", -1)]),
        (I["uv"], I["uv"]): s.vec(q(1, 4) * uv, [("u", 1), ("v", 1), ("uv", 2)]),
        (I["uv"], I["vw"]): s.vec(q(1, 4), [
            ("v", psi), ("uv", vw), ("vw", uv), ("u(vw)", 1), ("v(uw)", -1), ("w(uv)", 1)]),
        (I["uv"], I["u(vw)"]): s.vec(q(1, 8), [
            ("u", u_coeff), ("v", psi), ("uv", 2 * psi), ("vw", uv), ("u(vw)", 2 * uv)]),
        (I["uv"], I["w(uv)"]): s.vec(q(1, 8), [
            ("u", uv * vw), ("v", uv * uw), ("uv", 4 * psi), ("vw", uv), ("uw", uv),
            ("u(vw)", -2 * uv), ("v(uw)", -2 * uv), ("w(uv)", 4 * uv)]),
        (I["u(vw)"], I["u(vw)"]): s.vec(q(1, 16), [
            ("u", vw * (uv + uw + 2 * psi)), ("v", vw * uw), ("w", uv * vw), ("vw", 4 * psi),
            ("u(vw)", 2 * vw + 8 * psi), ("v(uw)", -2 * vw), ("w(uv)", -2 * vw)]),
        (I["u(vw)"], I["v(uw)"]): s.vec(q(1, 16), [
            ("u", vw * (uw + psi)), ("v", uw * (vw + psi)), ("w", uv * psi), ("uv", 2 * psi),
            ("vw", 2 * (uv * uw + psi)), ("uw", 2 * (uv * vw + psi)),
            ("u(vw)", 4 * psi - uv + vw - uw), ("v(uw)", 4 * psi - uv - vw + uw),
            ("w(uv)", uv - vw - uw - 4 * psi)]),
    }


def table2_gram(alpha, beta, gamma, psi, *, literal: bool = False):
    """Gram matrix of the Frobenius form transcribed from the form table.

    The entry ``(u(vw), u(vw))`` printed with the term ``2(b,c)(u,bc)`` is
    read as ``2(v,w)(u,vw)`` unless ``literal`` is set, in which case the
    printed symbols are taken at face value (``2 * beta * psi`` for every u).
    """
    params = tuple(as_scalar(x) for x in (alpha, beta, gamma, psi))
    G = [[None] * 9 for _ in range(9)]

    def put(i, j, val):
        if G[i][j] is not None and G[i][j] != val:
            raise AssertionError(f"inconsistent form table entry at ({i},{j})")
        G[i][j] = G[j][i] = val

    for u, v, w in permutations(range(3)):
        s = _Assignment(u, v, w, params)
        f, psi_ = s.f, s.psi
        I = s.index
        uv, uw, vw = f(u, v), f(u, w), f(v, w)
        put(I["u"], I["u"], ONE)
        put(I["u"], I["v"], uv)
        put(I["u"], I["vw"], psi_)
        put(I["u"], I["uv"], uv)
        put(I["u"], I["u(vw)"], psi_)
        put(I["u"], I["v(uw)"], (uv * uw + psi_) / 2)
        put(I["uv"], I["uv"], uv * (uv + 1) / 2)
        put(I["uv"], I["vw"], (uv * vw + psi_) / 2)
        put(I["uv"], I["u(vw)"], (uv * vw + psi_ + 2 * uv * psi_) / 4)
        put(I["uv"], I["w(uv)"], uv * (vw + uw + 2 * psi_) / 4)
        odd = params[1] * psi_ if literal else vw * psi_
        put(I["u(vw)"], I["u(vw)"], (uv * vw + uw * vw + 2 * odd + 4 * psi_ ** 2) / 8)
        put(I["u(vw)"], I["v(uw)"],
            (2 * uv * uw * vw + uv * psi_ + uw * psi_ + vw * psi_ + uw * vw + 2 * psi_ ** 2) / 8)
    return G


def three_gen_universal(alpha, beta, gamma, psi, *, check_form: bool = True,
                        literal: bool = False) -> Algebra:
    """The 9-dimensional universal algebra on axes a, b, c.

    Every product family of the table is instantiated at all six assignments
    of (u, v, w); overlapping instantiations must agree.  The form table is
    attached and, with ``check_form``, compared with the solved Frobenius form.
    """
    params = tuple(as_scalar(x) for x in (alpha, beta, gamma, psi))
    products = {}
    for u, v, w in permutations(range(3)):
        for (i, j), vec in _table1(_Assignment(u, v, w, params), literal).items():
            key = (min(i, j), max(i, j))
            if key in products and products[key] != vec:
                raise AssertionError(f"multiplication table instantiations disagree at {key}")
            products[key] = vec
    if len(products) != 45:
        raise AssertionError(f"expected 45 basis products, got {len(products)}")
    gram = table2_gram(*params)
    A = Algebra(9, products, labels=UNIVERSAL_LABELS, axes=(0, 1, 2), form=gram,
                name="T(%s,%s,%s,%s)" % params)
    if check_form and not literal:
        solved = frobenius_form(A).gram
        if not la.mat_equal(solved, gram):
            bad = [(UNIVERSAL_LABELS[i], UNIVERSAL_LABELS[j]) for i in range(9)
                   for j in range(i, 9) if solved[i][j] != gram[i][j]]
            raise AssertionError(f"form table transcription disagrees with solver at {bad}")
    return A


# -- nilpotent frames -----------------------------------------------------------

def pair_alpha(A: Algebra, a, b):
    """``(a, b)`` from the attached form, else from the form solved on ``<<a, b>>``."""
    if A.form is not None:
        return A.bilinear(a, b)
    S = subalgebra_closure(A, [a, b])
    sub = restrict(A, S)
    G = frobenius_form(sub, axes=[S.coordinates(a), S.coordinates(b)]).gram
    return la.dot(S.coordinates(a), la.matvec(G, S.coordinates(b)))


@dataclass
class NilpotentFrame:
    """``(s, 1_J, t)`` for ``J = <<a, b>>`` with its scalars."""

    algebra: Algebra
    a: tuple
    b: tuple
    alpha: Fraction
    zeta: object
    mu: object
    nu: object
    d: tuple
    e: tuple
    s: tuple
    one: tuple
    t: tuple
    radicand: int | None

    def member(self, xi) -> tuple:
        return idempotent_family(self, xi)

    def parameter_of(self, u):
        """``xi`` with ``u = xi s + 1/2 1_J + xi^-1 t``, or ``None``."""
        S = Subspace([self.s, self.one, self.t], self.algebra.dim)
        if not S.contains(u):
            return None
        cols = la.columns_to_matrix([self.s, self.one, self.t])
        x = la.solve(cols, u)
        if x is None or x[1] != HALF or not x[0]:
            return None
        if x[0] * x[2] != 1:
            return None
        return x[0]

    @property
    def c_parameter(self):
        """Parameter of ``a^(tau_b)``, namely ``nu / mu**2``."""
        return self.nu / self.mu ** 2


def nilpotent_frame(A: Algebra, a, b, *, allow_extension: bool = True) -> NilpotentFrame:
    a, b = A.vector(a), A.vector(b)
    alpha = pair_alpha(A, a, b)
    if radicand_of(alpha) is not None:
        raise ValueError("alpha must be rational")
    alpha = Fraction(alpha.a if hasattr(alpha, "a") else alpha)
    if alpha in (0, 1):
        raise DegenerateAlphaError(f"no nilpotent frame for alpha={alpha}")
    zeta, zeta_inv = solve_unit_quadratic(alpha, A.radicand)
    d = radicand_of(zeta)
    if d is not None and not allow_extension:
        raise FieldExtensionError(f"alpha={alpha} needs sqrt({d})")
    mu = -(1 + zeta) / 4
    nu = -(1 + zeta_inv) / 4
    ab = A.mul(a, b)
    n = A.dim
    sigma = la.sub(ab, la.scale(HALF, la.add(a, b)))
    one = la.scale(2 / (alpha - 1), sigma)
    dvec = la.combo([mu, ONE, nu], [a, ab, b], n)
    evec = la.combo([nu, ONE, mu], [a, ab, b], n)
    s = la.scale(1 / (4 * (alpha - 1)), dvec)
    t = la.scale(1 / (alpha * (alpha - 1)), evec)
    ambient = A if d is None or A.radicand == d else A.replace(radicand=d)
    return NilpotentFrame(ambient, a, b, alpha, zeta, mu, nu, dvec, evec, s, one, t, d)


def idempotent_family(frame: NilpotentFrame, xi) -> tuple:
    """``xi s + 1/2 1_J + xi^-1 t``."""
    xi = as_scalar(xi)
    if not xi:
        raise ValueError("xi must be nonzero")
    return la.combo([xi, HALF, 1 / xi], [frame.s, frame.one, frame.t], frame.algebra.dim)


# -- homomorphisms from the universal algebras --------------------------------

@dataclass
class Homomorphism:
    source: Algebra
    target: Algebra
    images: list            # image of each source basis vector
    image: Subspace
    kernel_dim: int
    params: tuple

    def __call__(self, x) -> tuple:
        return la.combo(x, self.images, self.target.dim)


def _verify_hom(src: Algebra, tgt: Algebra, images) -> bool:
    for i in range(src.dim):
        for j in range(i, src.dim):
            lhs = la.combo(src.product(i, j), images, tgt.dim)
            if lhs != tgt.mul(images[i], images[j]):
                return False
    return True


def two_gen_hom(A: Algebra, a, b) -> Homomorphism:
    """The homomorphism J(alpha) -> A with a -> a, b -> b, sigma -> ab - (a + b)/2."""
    a, b = A.vector(a), A.vector(b)
    alpha = pair_alpha(A, a, b)
    J = jordan_pair(alpha)
    ab = A.mul(a, b)
    sigma = la.sub(ab, la.scale(HALF, la.add(a, b)))
    images = [a, b, sigma]
    if not _verify_hom(J, A, images):
        raise AssertionError("J(alpha) -> A is not a homomorphism")
    image = Subspace(images, A.dim)
    if image != subalgebra_closure(A, [a, b]):
        raise AssertionError("image differs from the generated subalgebra")
    return Homomorphism(J, A, images, image, 3 - image.dim, (alpha,))


def _params3(A: Algebra, a, b, c):
    if A.form is not None:
        G = A.form
        f = lambda x, y: la.dot(x, la.matvec(G, y))
        return f(a, b), f(b, c), f(c, a), f(a, A.mul(b, c))
    S = subalgebra_closure(A, [a, b, c])
    sub = restrict(A, S)
    ca, cb, cc = (S.coordinates(x) for x in (a, b, c))
    G = frobenius_form(sub, axes=[ca, cb, cc]).gram
    f = lambda x, y: la.dot(x, la.matvec(G, y))
    return f(ca, cb), f(cb, cc), f(cc, ca), f(ca, sub.mul(cb, cc))


def three_gen_hom(A: Algebra, a, b, c) -> Homomorphism:
    """The homomorphism from the universal 9-dimensional algebra onto ``<<a, b, c>>``."""
    a, b, c = A.vector(a), A.vector(b), A.vector(c)
    params = _params3(A, a, b, c)
    T = three_gen_universal(*params, check_form=False)
    m = A.mul
    images = [a, b, c, m(a, b), m(a, c), m(b, c), m(a, m(b, c)), m(b, m(a, c)), m(c, m(a, b))]
    if not _verify_hom(T, A, images):
        raise AssertionError("universal algebra -> A is not a homomorphism")
    image = Subspace(images, A.dim)
    return Homomorphism(T, A, images, image, 9 - image.dim, params)
