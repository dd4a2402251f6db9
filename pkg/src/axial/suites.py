"""Verification suites: one function per acceptance criterion, grouped for the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg as la
from .algebra import is_ideal, jordan_identity_check, quotient
from .axes import frobenius_form, gram_determinant, radical
from .catalog import (UNIVERSAL_LABELS, idempotent_family, jordan_pair, jordan_pair_gram,
                      nilpotent_frame, table2_gram, three_gen_universal)
from .fischer import (enumerate_group, fischer_space, g334_generators, involution_class,
                      matsuo_algebra, three_transposition_check, transpositions,
                      vertical_horizontal_split, line_orbits)
from .linalg import Subspace
from .scalars import format_scalar
from .solidity import (family_axis_census, grading_automorphism, grading_closed,
                       idempotent_variety_2gen, recognize_matsuo, rho_decomposition,
                       solidity_check, transcribed_st, universal_w_basis, w_operator_matrices,
                       xi_samples)

F = Fraction
HALF = F(1, 2)
SAMPLE_BCP = (F(1, 5), F(1, 7), F(1, 11))


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "SuiteResult"):
        self.checks.extend(other.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed,
                "checks": [c.to_json() for c in self.checks]}


def _fs(x) -> str:
    return format_scalar(x)


# -- 1. two axes ---------------------------------------------------------------

def criterion_1() -> SuiteResult:
    r = SuiteResult("two-axes")
    for al in (F(-1), F(1, 4), F(1, 2), F(3, 4), F(9, 8), F(2)):
        J = jordan_pair(al)
        G = frobenius_form(J).gram
        r.add(f"gram J({_fs(al)})", la.mat_equal(G, jordan_pair_gram(al)))
        det = gram_determinant(G)
        r.add(f"det J({_fs(al)})", det == -al * (al - 1) ** 3 / 2, _fs(det))

    J0 = jordan_pair(0)
    R = radical(J0)
    minimal = R.dim == 1 and is_ideal(J0, R)
    # no proper nonzero ideal lies strictly inside a 1-dimensional one
    r.add("J(0) minimal ideal has dimension 1", minimal, f"dim {R.dim}")
    Q, q = quotient(J0, R)
    a_bar, b_bar = q.project(J0.basis(0)), q.project(J0.basis(1))
    r.add("J(0)/I has a*b = 0", not any(Q.mul(a_bar, b_bar)))

    J1 = jordan_pair(1)
    I1 = Subspace([J1.element(a=1, b=-1), J1.element(sigma=1)], 3)
    Z = Subspace([J1.element(sigma=1)], 3)
    r.add("J(1) ideal <a-b, sigma>", is_ideal(J1, I1))
    r.add("J(1) ideal <sigma>", is_ideal(J1, Z))
    r.add("Z J(1) = 0", all(not any(J1.mul(z, J1.basis(i))) for z in Z.basis for i in range(3)))
    r.add("J(1) radical is <a-b, sigma>", radical(J1) == I1)
    return r


# -- 2. nilpotent frames -------------------------------------------------------

def criterion_2() -> SuiteResult:
    r = SuiteResult("frames")
    for al in (F(1, 2), F(9, 8), F(2)):
        J = jordan_pair(al)
        fr = nilpotent_frame(J, 0, 1)
        B = fr.algebra
        tag = f"alpha={_fs(al)}"
        zero = la.zeros(3)
        r.add(f"{tag} s^2 = 0", B.square(fr.s) == zero)
        r.add(f"{tag} t^2 = 0", B.square(fr.t) == zero)
        r.add(f"{tag} (s,t) = 1/4", B.bilinear(fr.s, fr.t) == F(1, 4))
        r.add(f"{tag} st = 1/8 1_J", B.mul(fr.s, fr.t) == la.scale(F(1, 8), fr.one))
        r.add(f"{tag} (d,e) = alpha(alpha-1)^2", B.bilinear(fr.d, fr.e) == al * (al - 1) ** 2)
        r.add(f"{tag} mu + nu = -alpha", fr.mu + fr.nu == -al)
        r.add(f"{tag} mu nu = alpha/4", fr.mu * fr.nu == al / 4)
        r.add(f"{tag} mu^2 = alpha zeta/4", fr.mu ** 2 == al * fr.zeta / 4)
        r.add(f"{tag} nu^2 = alpha zeta^-1/4", fr.nu ** 2 == al / fr.zeta / 4)
        r.add(f"{tag} a = u(1/nu)", idempotent_family(fr, 1 / fr.nu) == fr.a)
        r.add(f"{tag} b = u(1/mu)", idempotent_family(fr, 1 / fr.mu) == fr.b)
        r.add(f"{tag} zeta field", True, "Q" if fr.radicand is None else f"Q(sqrt({fr.radicand}))")
    return r


# -- 3, 4. solidity in the universal algebra ---------------------------------

def criterion_3(samples: int = 12) -> SuiteResult:
    r = SuiteResult("main-solid")
    for al in (F(1, 2), F(1, 3), F(9, 8), F(2)):
        T = three_gen_universal(al, *SAMPLE_BCP)
        cls = solidity_check(T, 0, 1, samples)
        passed = [x for x, rep in cls.samples if rep.passed]
        r.add(f"T({_fs(al)},1/5,1/7,1/11) family", cls.kind == "solid" and
              len(cls.samples) == samples and len(passed) == samples,
              f"{len(passed)}/{len(cls.samples)} sampled members are primitive axes")
    return r


def criterion_4(samples: int = 12) -> SuiteResult:
    r = SuiteResult("quarter-exception")
    T = three_gen_universal(F(1, 4), *SAMPLE_BCP)
    fr = nilpotent_frame(T, 0, 1)
    r.add("field is Q(sqrt(-3))", fr.radicand == -3, str(fr.radicand))
    xis = xi_samples(fr, samples)
    census = family_axis_census(fr.algebra, fr, xis)
    special = {1 / fr.nu, 1 / fr.mu, fr.c_parameter}
    passing = [x for x, rep in census if rep.passed]
    r.add("exactly a, b, a^tau_b pass", set(passing) == special and len(passing) == 3,
          f"{len(passing)} of {len(census)} sampled members pass: "
          + ", ".join(_fs(x) for x in passing))
    others = [(x, rep) for x, rep in census if x not in special]
    with_violation = [x for x, rep in others if rep.fusion_violations]
    r.add("every other sample shows a fusion violation", len(with_violation) == len(others),
          f"{len(with_violation)} of {len(others)} non-distinguished samples violate fusion")
    return r


# -- 5, 6. the W-structure and the grading -------------------------------------

def criterion_5() -> SuiteResult:
    r = SuiteResult("three-axes")
    T = three_gen_universal(F(1, 3), *SAMPLE_BCP)
    dec = rho_decomposition(T, 0, 1)
    S, Tm = w_operator_matrices(dec, universal_w_basis(dec))
    S_disp, T_disp = transcribed_st(dec.frame)
    r.add("S matches the displayed matrix", la.mat_equal(S, S_disp))
    r.add("T matches the displayed matrix", la.mat_equal(Tm, T_disp))
    r.add("rank S = 2", la.rank(S) == 2)
    r.add("rank T = 2", la.rank(Tm) == 2)
    zero6 = [[0] * 6 for _ in range(6)]
    r.add("S^2 = 0", la.mat_equal(la.matmul(S, S), zero6))
    r.add("T^2 = 0", la.mat_equal(la.matmul(Tm, Tm), zero6))
    r.add("chi omega = 1/16 on im omega", dec.checks["chi_omega_sixteenth"])
    r.add("omega chi = 1/16 on im chi", dec.checks["omega_chi_sixteenth"])
    r.add("part dimensions (1,2,3,2,1)", dec.dims == (1, 2, 3, 2, 1), str(dec.dims))
    r.add("parts form a direct sum", dec.checks["direct_sum"])
    r.add("rho acts as zeta^k on A_k", dec.checks["rho_eigenvalues"])
    ST = la.matmul(S, Tm)
    sub = [[ST[1][1], ST[1][2]], [ST[2][1], ST[2][2]]]
    det = la.det(sub)
    al, z = dec.frame.alpha, dec.zeta
    stated = -al * (z - 1) ** 6 / (2 ** 14 * (al - 1) ** 2 * z ** 3)
    r.add("ST submatrix is diagonal", sub[0][1] == 0 and sub[1][0] == 0)
    r.add("ST submatrix determinant is nonzero", det != 0, _fs(det))
    r.add("ST submatrix determinant matches the stated formula", det == stated,
          f"computed {_fs(det)}, formula {_fs(stated)}, "
          f"-1/(2^10 (alpha-1)) = {_fs(F(-1, 1024) / (al - 1))}")
    return r


def criterion_6() -> SuiteResult:
    r = SuiteResult("grading")
    T = three_gen_universal(F(1, 3), *SAMPLE_BCP)
    dec = rho_decomposition(T, 0, 1)
    closed = grading_closed(dec)
    r.add("A_n A_m inside A_(n+m), 15 pairs", len(closed) == 15 and all(closed.values()),
          ", ".join(f"{k}" for k, v in closed.items() if not v))
    phis = {}
    for xi in (2, 3, -1):
        try:
            phis[xi] = grading_automorphism(dec, xi)
            r.add(f"phi_{xi} is an automorphism", True)
        except AssertionError as e:
            r.add(f"phi_{xi} is an automorphism", False, str(e))
    fr = dec.frame
    for xi, phi in phis.items():
        ok = all(la.matvec(phi, idempotent_family(fr, d)) == idempotent_family(fr, d * F(1, xi * xi))
                 for d in (1, 2, F(-1, 3), 1 / fr.nu))
        r.add(f"phi_{xi} maps u(d) to u(d xi^-2)", ok)
    r.add("phi_1 is the identity", la.is_identity(grading_automorphism(dec, 1)))
    for x, y in ((2, 3), (3, -1), (2, -1)):
        if x in phis and y in phis:
            lhs = la.matmul(phis[x], phis[y])
            r.add(f"phi_{x} phi_{y} = phi_{x * y}",
                  la.mat_equal(lhs, grading_automorphism(dec, x * y, verify=False)))
    return r


# -- 7, 10. the Matsuo example -----------------------------------------------

@dataclass
class MatsuoExample:
    group: list
    D: list
    space: object
    algebra: object
    split: object
    radical: Subspace
    quotient: object


def g334_example() -> MatsuoExample:
    gens = g334_generators()
    G = enumerate_group(gens)
    D = involution_class(gens, [gens[0]])
    FS = fischer_space(D)
    M = matsuo_algebra(FS, HALF)
    R = radical(M)
    Q, _ = quotient(M, R)
    return MatsuoExample(G, D, FS, M, vertical_horizontal_split(FS), R, Q)


def criterion_7(ex: MatsuoExample | None = None) -> SuiteResult:
    r = SuiteResult("matsuo-example")
    ex = ex or g334_example()
    r.add("|G| = 648", len(ex.group) == 648, str(len(ex.group)))
    r.add("|D| = 18", len(ex.D) == 18, str(len(ex.D)))
    r.add("3-transposition property", three_transposition_check(ex.D).passed)
    r.add("6 vertical lines", len(ex.split.vertical) == 6,
          f"{len(ex.split.vertical)} vertical, {len(ex.split.horizontal)} horizontal")
    orbits = line_orbits(ex.space, g334_generators())
    r.add("vertical and horizontal lines are the two line orbits",
          sorted(map(sorted, orbits)) == sorted([sorted(ex.split.vertical),
                                                 sorted(ex.split.horizontal)]))
    r.add("radical has dimension 2", ex.radical.dim == 2, str(ex.radical.dim))
    r.add("M/radical has dimension 16", ex.quotient.dim == 16, str(ex.quotient.dim))
    r.add("M/radical is Jordan", jordan_identity_check(ex.quotient).passed)
    r.add("M is not Jordan", not jordan_identity_check(ex.algebra).passed)
    M = ex.algebra
    vert = [solidity_check(M, M.basis(L[0]), M.basis(L[1])).kind for L in ex.split.vertical]
    hor = [solidity_check(M, M.basis(L[0]), M.basis(L[1])).kind for L in ex.split.horizontal]
    r.add("every vertical line is solid", all(k == "solid" for k in vert),
          f"{vert.count('solid')}/{len(vert)}")
    r.add("every horizontal line is non-solid", all(k == "non-solid" for k in hor),
          f"{hor.count('non-solid')}/{len(hor)}")
    return r


def s4_matsuo():
    return matsuo_algebra(fischer_space(transpositions(4)), HALF)


def criterion_10(ex: MatsuoExample | None = None) -> SuiteResult:
    r = SuiteResult("recognition")
    M = s4_matsuo()
    rec = recognize_matsuo(M)
    r.add("M(S4) recognized", rec.applicable and rec.homomorphism and rec.surjective, rec.reason)
    r.add("M(S4) kernel 0", rec.kernel_dim == 0, str(rec.kernel_dim))
    r.add("M(S4) Miyamoto orders in {1,2,3}", rec.orders_ok)
    ex = ex or g334_example()
    rec = recognize_matsuo(ex.quotient)
    r.add("M/radical recognized as a Matsuo image",
          rec.applicable and rec.homomorphism and rec.surjective, rec.reason)
    r.add("M/radical Miyamoto orders in {1,2,3}", rec.orders_ok,
          str(sorted(set(rec.orders.values()))))
    r.add("M/radical cover kernel", True,
          f"cover dimension {len(rec.images)}, kernel {rec.kernel_dim}")
    return r


# -- 8, 9. varieties and Frobenius uniqueness ---------------------------------

def criterion_8() -> SuiteResult:
    r = SuiteResult("varieties")
    for al in (F(1), F(0)):
        J = jordan_pair(al)
        var = idempotent_variety_2gen(J, al, 10)
        r.add(f"J({_fs(al)}) sampled points are idempotent", var.verified and
              all(len(c.points) == 10 for c in var.components))
    J0 = jordan_pair(0)
    v0 = idempotent_variety_2gen(J0, 0)
    first, second = v0.components
    a, b = J0.basis(0), J0.basis(1)
    r.add("a on the first component only", first.contains(a) and not second.contains(a))
    r.add("b on the second component only", second.contains(b) and not first.contains(b))
    J1 = jordan_pair(1)
    v1 = idempotent_variety_2gen(J1, 1)
    half = (HALF, HALF, HALF)
    r.add("J(1): (1/2,1/2,1/2) is idempotent", J1.square(half) == half and
          v1.components[0].contains(half))
    r.add("J(1): a on the variety", v1.components[0].contains(J1.basis(0)))
    return r


FROBENIUS_GRID = (F(-2), F(-1), F(-1, 2), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(3, 4),
                  F(9, 8), F(2), F(3))
UNIVERSAL_TUPLES = ((F(1, 3), F(1, 5), F(1, 7), F(1, 11)), (F(2), F(3), F(-1, 2), F(5, 7)),
                    (F(1, 2), F(-1, 3), F(4), F(1, 6)))


def _unique(r: SuiteResult, name: str, A):
    res = frobenius_form(A)
    r.add(f"{name} form unique", res.homogeneous_dim == 1 and res.solution_dim == 0,
          f"homogeneous {res.homogeneous_dim}, after normalization {res.solution_dim}")
    return res


def criterion_9(ex: MatsuoExample | None = None) -> SuiteResult:
    r = SuiteResult("frobenius")
    for al in FROBENIUS_GRID:
        res = _unique(r, f"J({_fs(al)})", jordan_pair(al))
        r.add(f"J({_fs(al)}) form matches the Gram display",
              la.mat_equal(res.gram, jordan_pair_gram(al)))
    for p in UNIVERSAL_TUPLES:
        name = "T(" + ",".join(_fs(x) for x in p) + ")"
        T = three_gen_universal(*p, check_form=False)
        res = _unique(r, name, T)
        r.add(f"{name} form matches the corrected form table",
              la.mat_equal(res.gram, table2_gram(*p)))
        literal = table2_gram(*p, literal=True)
        diff = sorted({(UNIVERSAL_LABELS[i], UNIVERSAL_LABELS[j]) for i in range(9)
                       for j in range(9) if literal[i][j] != res.gram[i][j]})
        r.add(f"{name} literal form table differs only at (u(vw),u(vw))",
              all(x == y and "(" in x for x, y in diff),
              "term 2(b,c)(u,bc) read as 2(v,w)(u,vw); literal reading differs at "
              + ", ".join(f"({x},{y})" for x, y in diff))
        lit_T = three_gen_universal(*p, check_form=False, literal=True)
        r.add(f"{name} printed (uv)(u(vw)) u-coefficient breaks the Jordan identity",
              not jordan_identity_check(lit_T).passed,
              "u-coefficient (u,v)(u,w)+(u,vw) replaced by (u,v)(v,w)+(u,vw)")
    _unique(r, "M_1/2(S4)", s4_matsuo())
    ex = ex or g334_example()
    res = _unique(r, "M_1/2(g334)", ex.algebra)
    r.add("M_1/2(g334) form is the Matsuo form", la.mat_equal(res.gram, ex.algebra.form))
    return r


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}

SUITES = {
    "two-axes": (1, 2, 8),
    "three-axes": (5,),
    "grading": (6,),
    "solidity": (3, 4),
    "matsuo-example": (7, 10),
    "frobenius": (9,),
}


def run_suite(name: str, samples: int = 12) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(name)
    out = SuiteResult(name)
    ex = None
    for c in SUITES[name]:
        fn = CRITERIA[c]
        if c in (3, 4):
            part = fn(samples)
        elif c in (7, 9, 10):
            ex = ex or g334_example()
            part = fn(ex)
        else:
            part = fn()
        for chk in part.checks:
            out.add(f"[{c}] {chk.name}", chk.passed, chk.detail)
    return out
