"""3-transposition groups, Fischer spaces and Matsuo algebras."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import Algebra
from .linalg import ZERO, ONE
from .scalars import as_scalar

__all__ = [
    "Permutation",
    "MonomialElement",
    "MatrixElement",
    "GroupCapError",
    "enumerate_group",
    "element_order",
    "involution_class",
    "TranspositionCheck",
    "three_transposition_check",
    "FischerSpace",
    "fischer_space",
    "matsuo_algebra",
    "matsuo_gram",
    "g334_generators",
    "reflection",
    "symmetric_generators",
    "transpositions",
    "LineSplit",
    "vertical_horizontal_split",
    "line_orbits",
    "parse_generators",
    "GeneratorParseError",
]


def _cycles(images) -> list[tuple]:
    seen = set()
    out = []
    for start in range(len(images)):
        if start in seen or images[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        j = images[start]
        while j != start:
            cyc.append(j)
            seen.add(j)
            j = images[j]
        out.append(tuple(cyc))
    return out


class Permutation:
    """Permutation of ``{0, ..., n-1}``; ``p * q`` applies ``q`` first."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"{images} is not a permutation")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                images[x] = y
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def one(self) -> "Permutation":
        return Permutation.identity(self.degree)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple]:
        return _cycles(self.images)

    def sort_key(self):
        return (tuple(self.cycles()),)

    def label(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Permutation{self.label()}"


class MonomialElement:
    """``(sigma, v)`` with ``v`` in ``(Z/3)^n`` summing to zero.

    The product is ``(sigma, v)(tau, w) = (sigma tau, v o tau + w)`` where
    ``(v o tau)_i = v_{tau(i)}``.
    """

    __slots__ = ("perm", "exps", "_hash")

    def __init__(self, perm, exps):
        if not isinstance(perm, Permutation):
            perm = Permutation(perm)
        exps = tuple(int(x) % 3 for x in exps)
        if len(exps) != perm.degree:
            raise ValueError("exponent vector length must equal the permutation degree")
        if sum(exps) % 3:
            raise ValueError("exponent vector must sum to zero mod 3")
        self.perm = perm
        self.exps = exps
        self._hash = hash((perm.images, exps))

    @classmethod
    def identity(cls, n: int) -> "MonomialElement":
        return cls(Permutation.identity(n), (0,) * n)

    @property
    def degree(self) -> int:
        return self.perm.degree

    def __mul__(self, other: "MonomialElement") -> "MonomialElement":
        t = other.perm.images
        exps = tuple((self.exps[t[i]] + other.exps[i]) % 3 for i in range(len(t)))
        return MonomialElement(self.perm * other.perm, exps)

    def inverse(self) -> "MonomialElement":
        pinv = self.perm.inverse()
        exps = tuple(-self.exps[pinv.images[i]] % 3 for i in range(self.degree))
        return MonomialElement(pinv, exps)

    def one(self) -> "MonomialElement":
        return MonomialElement.identity(self.degree)

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.exps)

    def sort_key(self):
        return (tuple(self.perm.cycles()), self.exps)

    def label(self) -> str:
        cyc = self.perm.cycles()
        if len(cyc) == 1 and len(cyc[0]) == 2:
            i, j = sorted(cyc[0])
            rest = [k for k in range(self.degree) if k not in (i, j)]
            if self.exps[j] == -self.exps[i] % 3 and not any(self.exps[k] for k in rest):
                return f"r{i + 1}{j + 1}_{self.exps[i]}"
        return f"{self.perm.label()}|{''.join(map(str, self.exps))}"

    def __eq__(self, other):
        return (isinstance(other, MonomialElement) and self.perm == other.perm
                and self.exps == other.exps)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"MonomialElement({self.label()})"


class MatrixElement:
    """An invertible square matrix wrapped as a hashable group element."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        self.rows = tuple(tuple(r) for r in rows)
        self._hash = hash(self.rows)

    def __mul__(self, other: "MatrixElement") -> "MatrixElement":
        cols = list(zip(*other.rows))
        return MatrixElement(tuple(sum((x * y for x, y in zip(r, c) if x and y), ZERO)
                                   for c in cols) for r in self.rows)

    def one(self) -> "MatrixElement":
        n = len(self.rows)
        return MatrixElement(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))

    def is_identity(self) -> bool:
        return self == self.one()

    def sort_key(self):
        return ()

    def label(self) -> str:
        return f"M{abs(self._hash) % 10**6}"

    def __eq__(self, other):
        return isinstance(other, MatrixElement) and self.rows == other.rows

    def __hash__(self):
        return self._hash


class GroupCapError(RuntimeError):
    pass


def enumerate_group(generators, cap: int = 100_000, *, identity=None) -> list:
    """All elements of ``<generators>`` in breadth-first order, identity first."""
    generators = list(generators)
    if identity is None:
        identity = generators[0].one() if generators else Permutation.identity(1)
    seen = {identity}
    order = [identity]
    queue = deque([identity])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = g * s
            if h not in seen:
                seen.add(h)
                order.append(h)
                if len(order) > cap:
                    raise GroupCapError(f"group has more than {cap} elements")
                queue.append(h)
    return order


def element_order(g, bound: int = 1000) -> int:
    x = g
    for k in range(1, bound + 1):
        if x.is_identity():
            return k
        x = x * g
    raise ValueError(f"element order exceeds {bound}")


def _conj(c, g):
    """``c^g = g^-1 c g``."""
    ginv = g.inverse() if hasattr(g, "inverse") else _power_inverse(g)
    return ginv * c * g


def _power_inverse(g):
    n = element_order(g)
    x = g.one()
    for _ in range(n - 1):
        x = x * g
    return x


def involution_class(generators, seeds) -> list:
    """Closure of ``seeds`` under conjugation by ``generators``, sorted."""
    gens = list(generators)
    for s in seeds:
        if s.is_identity() or not (s * s).is_identity():
            raise ValueError(f"seed {s.label()} is not an involution")
    seen = set(seeds)
    queue = deque(seeds)
    while queue:
        c = queue.popleft()
        for g in gens:
            d = _conj(c, g)
            if d not in seen:
                seen.add(d)
                queue.append(d)
    return sorted(seen, key=lambda x: x.sort_key())


@dataclass
class TranspositionCheck:
    passed: bool
    orders: dict = field(default_factory=dict)    # (i, j) -> |d_i d_j|
    witness: tuple | None = None

    def __bool__(self):
        return self.passed


def three_transposition_check(D) -> TranspositionCheck:
    D = list(D)
    result = TranspositionCheck(True)
    for i, j in combinations(range(len(D)), 2):
        o = element_order(D[i] * D[j], bound=64)
        result.orders[(i, j)] = o
        if o > 3 and result.passed:
            result.passed = False
            result.witness = (D[i], D[j], o)
    return result


@dataclass
class FischerSpace:
    """Points with the third-point map; ``third[(i, j)]`` is ``None`` for commuting pairs."""

    points: list
    third: dict

    @property
    def labels(self) -> list[str]:
        return [p.label() for p in self.points]

    def __len__(self):
        return len(self.points)

    def collinear(self, i: int, j: int) -> bool:
        return i != j and self.third[(i, j)] is not None

    @property
    def lines(self) -> list[tuple]:
        out = set()
        for (i, j), k in self.third.items():
            if k is not None:
                out.add(tuple(sorted((i, j, k))))
        return sorted(out)

    def index(self, point) -> int:
        return self.points.index(point)


def fischer_space(D) -> FischerSpace:
    points = sorted(D, key=lambda x: x.sort_key())
    check = three_transposition_check(points)
    if not check:
        c, d, o = check.witness
        raise ValueError(f"not a 3-transposition set: |{c.label()} {d.label()}| = {o}")
    pos = {p: i for i, p in enumerate(points)}
    third = {}
    for (i, j), o in check.orders.items():
        if o == 3:
            e = points[j] * points[i] * points[j]
            if e not in pos:
                raise ValueError("point set is not closed under conjugation")
            k = pos[e]
            third[(i, j)] = third[(j, i)] = k
        elif o == 2:
            third[(i, j)] = third[(j, i)] = None
        else:
            raise ValueError(f"repeated point {points[i].label()}")
    return FischerSpace(points, third)


def matsuo_gram(FS: FischerSpace, eta):
    eta = as_scalar(eta)
    n = len(FS)
    return [[ONE if i == j else (eta / 2 if FS.collinear(i, j) else ZERO) for j in range(n)]
            for i in range(n)]


def matsuo_algebra(FS: FischerSpace, eta, *, labels=None) -> Algebra:
    """``M_eta``: points are idempotent axes, ``cd = (eta/2)(c + d - e)`` on lines."""
    eta = as_scalar(eta)
    if eta in (0, 1):
        raise ValueError("eta must differ from 0 and 1")
    n = len(FS)
    products = {}
    for i in range(n):
        v = [ZERO] * n
        v[i] = ONE
        products[(i, i)] = v
        for j in range(i + 1, n):
            k = FS.third[(i, j)]
            if k is None:
                continue
            v = [ZERO] * n
            v[i] += eta / 2
            v[j] += eta / 2
            v[k] -= eta / 2
            products[(i, j)] = v
    return Algebra(n, products, labels=labels or FS.labels, axes=range(n), form=matsuo_gram(FS, eta),
                   name=f"M_{eta}")


# -- concrete groups ---------------------------------------------------------

def reflection(n: int, i: int, j: int, k: int) -> MonomialElement:
    """``r_{ij,k}`` (0-based): swaps i and j, exponent k at i and -k at j."""
    exps = [0] * n
    exps[i] = k % 3
    exps[j] = -k % 3
    return MonomialElement(Permutation.from_cycles(n, [(i, j)]), exps)


def g334_generators() -> list[MonomialElement]:
    """The 18 involutions of the sum-zero monomial group on 4 letters."""
    return [reflection(4, i, j, k) for i, j in combinations(range(4), 2) for k in range(3)]


def transpositions(n: int) -> list[Permutation]:
    return [Permutation.from_cycles(n, [(i, j)]) for i, j in combinations(range(n), 2)]


def symmetric_generators(n: int) -> list[Permutation]:
    return [Permutation.from_cycles(n, [(i, i + 1)]) for i in range(n - 1)]


@dataclass
class LineSplit:
    vertical: list
    horizontal: list


def vertical_horizontal_split(FS: FischerSpace, pi=None) -> LineSplit:
    """Classify lines by the size of their image under ``pi`` (default: the permutation part)."""
    if pi is None:
        pi = lambda x: x.perm
    vertical, horizontal = [], []
    for line in FS.lines:
        size = len({pi(FS.points[i]) for i in line})
        if size == 1:
            vertical.append(line)
        elif size == 3:
            horizontal.append(line)
        else:
            raise AssertionError(f"line {line} has image of size 2")
    return LineSplit(vertical, horizontal)


def point_action(FS: FischerSpace, g) -> tuple:
    """Permutation of point indices induced by conjugation with ``g``."""
    pos = {p: i for i, p in enumerate(FS.points)}
    return tuple(pos[_conj(p, g)] for p in FS.points)


def line_orbits(FS: FischerSpace, generators) -> list[list[tuple]]:
    """Orbits of the group generated by ``generators`` on the lines of ``FS``."""
    actions = [point_action(FS, g) for g in generators]
    remaining = set(FS.lines)
    orbits = []
    for line in FS.lines:
        if line not in remaining:
            continue
        orbit = {line}
        queue = deque([line])
        while queue:
            L = queue.popleft()
            for act in actions:
                M = tuple(sorted(act[i] for i in L))
                if M not in orbit:
                    orbit.add(M)
                    queue.append(M)
        remaining -= orbit
        orbits.append(sorted(orbit))
    return orbits


class GeneratorParseError(ValueError):
    def __init__(self, line_no: int, text: str, reason: str):
        self.line_no = line_no
        self.text = text
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}: {text!r}")


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_generators(text: str, degree: int | None = None) -> list:
    """Parse generators, one per line: 1-based cycles, optionally ``| e1 e2 ...``.

    Lines with an exponent vector give :class:`MonomialElement` objects,
    otherwise :class:`Permutation` objects.  Blank lines and ``#`` comments
    are ignored.
    """
    rows = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        cyc_part, _, exp_part = line.partition("|")
        cyc_part = cyc_part.strip()
        if _CYCLE.sub("", cyc_part).strip():
            raise GeneratorParseError(no, raw, "expected cycles like (1 2)(3 4)")
        cycles = []
        for body in _CYCLE.findall(cyc_part):
            try:
                pts = [int(x) - 1 for x in body.replace(",", " ").split()]
            except ValueError:
                raise GeneratorParseError(no, raw, "non-integer point") from None
            if any(p < 0 for p in pts) or len(set(pts)) != len(pts):
                raise GeneratorParseError(no, raw, "points must be distinct and positive")
            if pts:
                cycles.append(tuple(pts))
        exps = None
        if exp_part.strip():
            try:
                exps = [int(x) for x in exp_part.split()]
            except ValueError:
                raise GeneratorParseError(no, raw, "non-integer exponent") from None
        rows.append((no, raw, cycles, exps))
    if not rows:
        return []
    n = degree or max([max((max(c) for c in cycles), default=-1) + 1 for _, _, cycles, _ in rows]
                      + [len(e) for *_, e in rows if e is not None])
    gens = []
    for no, raw, cycles, exps in rows:
        if any(max(c) >= n for c in cycles):
            raise GeneratorParseError(no, raw, f"point exceeds degree {n}")
        perm = Permutation.from_cycles(n, cycles)
        if exps is None:
            gens.append(perm)
            continue
        if len(exps) != n:
            raise GeneratorParseError(no, raw, f"exponent vector needs {n} entries")
        try:
            gens.append(MonomialElement(perm, exps))
        except ValueError as e:
            raise GeneratorParseError(no, raw, str(e)) from None
    kinds = {type(g) for g in gens}
    if len(kinds) > 1:
        # promote permutations so every generator lives in one model
        gens = [g if isinstance(g, MonomialElement) else MonomialElement(g, (0,) * n) for g in gens]
    return gens
