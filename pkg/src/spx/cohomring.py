"""
Cohomology rings of SP^n X over a field.

Cochains are functions on the cell basis, stored as {index: value}. The
cup product of cocycles a, b is evaluated through the chain coproduct:

    (a u b)(x) = sum over terms c * u (x) v of lambda(x) of  c * a(u) * b(v)

and classes are coordinates with respect to a fixed basis of cocycles
modulo coboundaries. Dual cells that happen to be cocycles are preferred
as representatives, so for surfaces the basis is the dual cell basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations, product

from .diagonal import coproduct
from .exactlinalg import QQ, Coefficients, Echelon, GF, field_rank_kernel
from .homology import Report
from .presentation import ComplexPresentation, nonorientable_surface, orientable_surface
from .spchain import SPMonomial, boundary_matrix, circle, divided_power, enumerate_basis


class CohomologyBasis:
    """Per-degree cocycle representatives of H^*(SP^n X; K) and the projection onto them."""

    def __init__(self, p: ComplexPresentation, n: int, ring: Coefficients):
        if not ring.is_field:
            raise ValueError("cohomology rings need field coefficients (Q or F_p)")
        self.presentation = p
        self.n = n
        self.ring = ring
        self.top = 2 * n
        self.cells = [enumerate_basis(p, n, d) for d in range(self.top + 1)]
        self.index = [{m: i for i, m in enumerate(c)} for c in self.cells]
        self.reps: list[list[dict]] = []
        self.labels: list[list[str]] = []
        self._echelons: list[Echelon] = []
        for d in range(self.top + 1):
            self._build_degree(d)

    def _matrix(self, d):
        # boundary C_d -> C_{d-1}, rows = cells of degree d-1
        return boundary_matrix(self.presentation, self.n, d, self.ring)

    def _build_degree(self, d):
        ring = self.ring
        ech = Echelon(ring, track=True)
        if d >= 1:
            # coboundaries: rows of the boundary matrix into degree d
            for row in self._matrix(d).row_dicts():
                if row:
                    ech.add(row)
        up = self._matrix(d + 1)
        touched = {r for (r, _c) in up.entries}
        candidates = [{i: 1} for i in range(len(self.cells[d])) if i not in touched]
        candidates += field_rank_kernel(up.transpose()).kernel
        reps, labels = [], []
        for vec in candidates:
            if ech.add(vec, tagged=True):
                reps.append(dict(vec))
                if len(vec) == 1 and next(iter(vec.values())) == 1:
                    labels.append(f"({self.cells[d][next(iter(vec))]})*")
                else:
                    labels.append(f"z{d}.{len(reps) - 1}")
        self.reps.append(reps)
        self.labels.append(labels)
        self._echelons.append(ech)

    def dim(self, d: int) -> int:
        return len(self.reps[d]) if 0 <= d <= self.top else 0

    @property
    def dims(self) -> list[int]:
        return [self.dim(d) for d in range(self.top + 1)]

    def coboundary(self, d: int, cochain: dict) -> dict:
        """delta(cochain) as a cochain in degree d+1."""
        out: dict = {}
        m = self._matrix(d + 1)
        for (r, c), v in m.entries.items():
            a = cochain.get(r)
            if a:
                w = self.ring.reduce(out.get(c, 0) + a * v)
                if w:
                    out[c] = w
                else:
                    out.pop(c, None)
        return out

    def is_cocycle(self, d: int, cochain: dict) -> bool:
        return not self.coboundary(d, cochain)

    def project(self, d: int, cochain: dict) -> tuple:
        """Coordinates of the class of a cocycle in the chosen basis."""
        if not 0 <= d <= self.top:
            return ()
        comb = self._echelons[d].coordinates(cochain)
        return tuple(self.ring.reduce(comb.get(k, 0)) for k in range(self.dim(d)))

    def dual_cochain(self, m: SPMonomial) -> dict:
        if m.filtration > self.n:
            raise ValueError(f"{m} has filtration {m.filtration} > {self.n}")
        return {self.index[m.degree][m]: 1}


@lru_cache(maxsize=None)
def cohomology_basis(p: ComplexPresentation, n: int, ring: Coefficients) -> CohomologyBasis:
    return CohomologyBasis(p, n, ring)


class HClass:
    """A homogeneous cohomology class: degree plus coordinates in the ring's basis."""

    __slots__ = ("ring", "degree", "coords")

    def __init__(self, ring: "CohomologyRing", degree: int, coords):
        self.ring = ring
        self.degree = degree
        self.coords = tuple(coords)

    def _same(self, other):
        if other.ring is not self.ring or other.degree != self.degree:
            raise ValueError("classes must live in the same ring and degree")

    def __add__(self, other):
        self._same(other)
        red = self.ring.coeff.reduce
        return HClass(self.ring, self.degree, (red(a + b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        red = self.ring.coeff.reduce
        return HClass(self.ring, self.degree, (red(-a) for a in self.coords))

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, scalar):
        red = self.ring.coeff.reduce
        return HClass(self.ring, self.degree, (red(scalar * a) for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, HClass):
            return self.ring.cup(self, other)
        return self.__rmul__(other)

    def __pow__(self, e: int):
        out = self.ring.one
        for _ in range(e):
            out = out * self
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __eq__(self, other):
        if not isinstance(other, HClass):
            return NotImplemented
        return self.ring is other.ring and self.degree == other.degree and self.coords == other.coords

    def __hash__(self):
        return hash((self.degree, self.coords))

    def as_vector(self) -> dict:
        return {i: c for i, c in enumerate(self.coords) if c}

    def __repr__(self):
        labels = self.ring.basis.labels[self.degree] if self.degree <= self.ring.basis.top else []
        out = ""
        for i, c in enumerate(self.coords):
            if not c:
                continue
            neg = c < 0 and self.ring.coeff.kind != "F"
            mag = -c if neg else c
            term = labels[i] if mag == 1 else f"{mag}*{labels[i]}"
            out += ("-" if neg else "") + term if not out else (" - " if neg else " + ") + term
        return out or f"0[deg {self.degree}]"


class CohomologyRing:
    def __init__(self, p: ComplexPresentation, n: int, coeff: Coefficients):
        self.presentation = p
        self.n = n
        self.coeff = coeff
        self.basis = cohomology_basis(p, n, coeff)
        self._splits: dict = {}

    @property
    def top(self) -> int:
        return self.basis.top

    @cached_property
    def one(self) -> HClass:
        return self.dual_class(SPMonomial())

    def zero(self, d: int) -> HClass:
        return HClass(self, d, (0,) * self.basis.dim(d))

    def classes(self, d: int) -> list[HClass]:
        dim = self.basis.dim(d)
        return [HClass(self, d, tuple(1 if i == k else 0 for i in range(dim))) for k in range(dim)]

    def all_classes(self) -> list[HClass]:
        return [c for d in range(self.top + 1) for c in self.classes(d)]

    def dual_class(self, m: SPMonomial) -> HClass:
        d = m.degree
        cochain = self.basis.dual_cochain(m)
        if not self.basis.is_cocycle(d, cochain):
            raise ValueError(f"({m})* is not a cocycle")
        return HClass(self, d, self.basis.project(d, cochain))

    def cochain_of(self, c: HClass) -> dict:
        """The representative cocycle of a class: sum of coords times basis cocycles."""
        out: dict = {}
        red = self.coeff.reduce
        for k, a in enumerate(c.coords):
            if a:
                for i, v in self.basis.reps[c.degree][k].items():
                    w = red(out.get(i, 0) + a * v)
                    if w:
                        out[i] = w
                    else:
                        out.pop(i, None)
        return out

    def _split(self, pdeg: int, qdeg: int):
        # for each cell x of degree p+q: the (p, q) part of lambda(x) as (u index, v index, c)
        key = (pdeg, qdeg)
        if key not in self._splits:
            b = self.basis
            table = []
            for x in b.cells[pdeg + qdeg]:
                terms = []
                for (u, v), c in coproduct(x, self.presentation, self.n, self.coeff).items():
                    if u.degree == pdeg:
                        terms.append((b.index[pdeg][u], b.index[qdeg][v], c))
                table.append(terms)
            self._splits[key] = table
        return self._splits[key]

    def cup_cochains(self, pdeg: int, alpha: dict, qdeg: int, beta: dict) -> dict:
        d = pdeg + qdeg
        if d > self.top:
            return {}
        red = self.coeff.reduce
        out = {}
        for xi, terms in enumerate(self._split(pdeg, qdeg)):
            s = 0
            for ui, vi, c in terms:
                a = alpha.get(ui)
                if a:
                    bb = beta.get(vi)
                    if bb:
                        s += c * a * bb
            s = red(s)
            if s:
                out[xi] = s
        return out

    def cup(self, a: HClass, b: HClass) -> HClass:
        d = a.degree + b.degree
        if d > self.top or a.is_zero() or b.is_zero():
            return self.zero(d)
        cochain = self.cup_cochains(a.degree, self.cochain_of(a), b.degree, self.cochain_of(b))
        return HClass(self, d, self.basis.project(d, cochain))

    def span_rank(self, classes) -> int:
        ech = Echelon(self.coeff)
        for c in classes:
            ech.add(c.as_vector())
        return ech.rank


def cup(a: HClass, b: HClass, basis=None) -> HClass:
    return a.ring.cup(a, b)


@lru_cache(maxsize=None)
def cohomology_ring(p: ComplexPresentation, n: int, coeff: Coefficients) -> CohomologyRing:
    return CohomologyRing(p, n, coeff)


# ---------------------------------------------------------------------------
# Structure constants
# ---------------------------------------------------------------------------

def _fmt(c) -> str:
    return str(c)


@dataclass
class RingPresentation:
    coeff: Coefficients
    degrees: list[int]
    labels: list[str]
    table: dict = field(default_factory=dict)  # (i, j) -> {k: c}
    associative: bool | None = None
    graded_commutative: bool | None = None
    special: dict = field(default_factory=dict)  # name -> global index combination

    def product(self, x: dict, y: dict) -> dict:
        """Multiply two elements given as {global index: coefficient}."""
        red = self.coeff.reduce
        out: dict = {}
        for i, a in x.items():
            for j, b in y.items():
                for k, c in self.table.get((i, j), {}).items():
                    w = red(out.get(k, 0) + a * b * c)
                    if w:
                        out[k] = w
                    else:
                        out.pop(k, None)
        return out

    def monogenic_height(self):
        """(generator index, h) if one class x has powers spanning every degree and x^h = 0, else None."""
        top = max(self.degrees, default=0)
        dims = [self.degrees.count(d) for d in range(top + 1)]
        if any(x > 1 for x in dims):
            return None
        for i, d in enumerate(self.degrees):
            if d == 0:
                continue
            power = {0: 1}
            h = 0
            while power:
                h += 1
                power = self.product(power, {i: 1})
            reached = {self.degrees[k] for k in range(len(self.degrees))}
            if all(dims[e * d] == 1 for e in range(h) if e * d <= top) and len(reached) == h and \
                    all(dd % d == 0 for dd in reached):
                return i, h
            return None
        return None

    def describe(self) -> str:
        mono = self.monogenic_height()
        field_name = "Q" if self.coeff.kind == "Q" else f"F{self.coeff.p}"
        if mono is not None:
            i, h = mono
            return f"{field_name}[{self.labels[i]}]/({self.labels[i]}^{h})   ({self.labels[i]} in degree {self.degrees[i]})"
        dims = [self.degrees.count(d) for d in range(max(self.degrees, default=0) + 1)]
        return f"graded ring over {field_name} with dimensions {dims}"

    def render(self) -> str:
        lines = [self.describe(), "basis:"]
        for i, (d, lab) in enumerate(zip(self.degrees, self.labels)):
            lines.append(f"  [{i}] deg {d}: {lab}")
        for name, vec in self.special.items():
            terms = " + ".join(f"{c}*[{k}]" if c != 1 else f"[{k}]" for k, c in sorted(vec.items()))
            lines.append(f"  {name} = {terms or 0}")
        lines.append("products (unit omitted):")
        for (i, j), res in sorted(self.table.items()):
            if self.degrees[i] == 0 or self.degrees[j] == 0 or i > j:
                continue
            rhs = " + ".join(f"{_fmt(c)}*{self.labels[k]}" if c != 1 else self.labels[k]
                             for k, c in sorted(res.items()))
            lines.append(f"  {self.labels[i]} . {self.labels[j]} = {rhs or 0}")
        lines.append(f"associative: {self.associative}   graded-commutative: {self.graded_commutative}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "coeff": str(self.coeff),
            "deg": self.degrees,
            "labels": self.labels,
            "cup": [[i, j, [[k, _fmt(c)] for k, c in sorted(res.items())]]
                    for (i, j), res in sorted(self.table.items())],
            "special": {k: [[i, _fmt(c)] for i, c in sorted(v.items())] for k, v in self.special.items()},
            "associative": self.associative,
            "graded_commutative": self.graded_commutative,
        }


def ring_presentation(p: ComplexPresentation, n: int, coeff: Coefficients,
                      check: bool = True) -> RingPresentation:
    ring = cohomology_ring(p, n, coeff)
    classes = ring.all_classes()
    offsets, total = {}, 0
    for d in range(ring.top + 1):
        offsets[d] = total
        total += ring.basis.dim(d)

    def globalize(c: HClass) -> dict:
        return {offsets[c.degree] + k: a for k, a in enumerate(c.coords) if a}

    pres = RingPresentation(coeff, [c.degree for c in classes],
                            [ring.basis.labels[d][k] for d in range(ring.top + 1) for k in range(ring.basis.dim(d))])
    for i, a in enumerate(classes):
        for j, b in enumerate(classes):
            if a.degree + b.degree <= ring.top:
                res = globalize(ring.cup(a, b))
                if res:
                    pres.table[i, j] = res
    for i in range(p.circle_count):
        m = circle(i + 1)
        if n >= 1 and ring.basis.is_cocycle(1, ring.basis.dual_cochain(m)):
            pres.special[f"f{i + 1}"] = globalize(ring.dual_class(m))
    for j in range(p.cell_count):
        m = divided_power(j + 1)
        if n >= 1 and ring.basis.is_cocycle(2, ring.basis.dual_cochain(m)):
            pres.special["b" if p.cell_count == 1 else f"b{j + 1}"] = globalize(ring.dual_class(m))
    if check:
        pres.associative = check_associative(pres)
        pres.graded_commutative = check_graded_commutative(pres)
    return pres


def check_associative(pres: RingPresentation) -> bool:
    n = len(pres.degrees)
    top = max(pres.degrees, default=0)
    for i in range(n):
        for j in range(n):
            if pres.degrees[i] + pres.degrees[j] > top:
                continue
            ij = pres.table.get((i, j), {})
            for k in range(n):
                if pres.degrees[i] + pres.degrees[j] + pres.degrees[k] > top:
                    continue
                left = pres.product(ij, {k: 1})
                right = pres.product({i: 1}, pres.table.get((j, k), {}))
                if left != right:
                    return False
    return True


def check_graded_commutative(pres: RingPresentation) -> bool:
    red = pres.coeff.reduce
    for (i, j), res in pres.table.items():
        sign = -1 if pres.degrees[i] * pres.degrees[j] % 2 else 1
        other = {k: red(sign * c) for k, c in pres.table.get((j, i), {}).items()}
        if {k: red(c) for k, c in res.items()} != {k: c for k, c in other.items() if c}:
            return False
    return True


# ---------------------------------------------------------------------------
# Abstract quotient rings, for dimension counts
# ---------------------------------------------------------------------------

class MonomialAlgebra:
    """
    Graded algebra with basis f_S b^t (S a set of degree-1 generators, b in
    degree 2). ``squares_to_b=False``: exterior in the f's with Koszul
    signs (f_i^2 = 0). ``squares_to_b=True``: characteristic 2 with
    f_i^2 = b.
    """

    def __init__(self, nvars: int, coeff: Coefficients, squares_to_b: bool):
        self.nvars = nvars
        self.coeff = coeff
        self.squares_to_b = squares_to_b

    def monomials(self, d: int):
        out = []
        for size in range(d % 2, min(self.nvars, d) + 1, 2):
            for S in combinations(range(1, self.nvars + 1), size):
                out.append((S, (d - size) // 2))
        return out

    def mul_mono(self, x, y):
        (S, s), (T, t) = x, y
        common = set(S) & set(T)
        if self.squares_to_b:
            U = tuple(sorted(set(S) ^ set(T)))
            return 1, (U, s + t + len(common))
        if common:
            return None
        inv = sum(1 for a in S for b in T if a > b)
        return (-1) ** inv, (tuple(sorted(S + T)), s + t)

    def mul(self, x: dict, y: dict) -> dict:
        red = self.coeff.reduce
        out: dict = {}
        for m1, a in x.items():
            for m2, b in y.items():
                r = self.mul_mono(m1, m2)
                if r is None:
                    continue
                c, m = r
                w = red(out.get(m, 0) + a * b * c)
                if w:
                    out[m] = w
                else:
                    out.pop(m, None)
        return out

    @staticmethod
    def degree(m) -> int:
        return len(m[0]) + 2 * m[1]

    def quotient_dims(self, relations: list[dict], top: int) -> list[int]:
        """dim of (algebra / ideal generated by relations) in degrees 0..top, by brute force."""
        dims = []
        for d in range(top + 1):
            basis = self.monomials(d)
            index = {m: i for i, m in enumerate(basis)}
            ech = Echelon(self.coeff)
            for r in relations:
                if not r:
                    continue
                rd = self.degree(next(iter(r)))
                if rd > d:
                    continue
                for m in self.monomials(d - rd):
                    prod_ = self.mul({m: 1}, r)
                    if prod_:
                        ech.add({index[k]: v for k, v in prod_.items()})
            dims.append(len(basis) - ech.rank)
        return dims


def _evaluate(ring: CohomologyRing, f: list[HClass], b: HClass, mono) -> HClass:
    S, t = mono
    out = ring.one
    for i in S:
        out = out * f[i - 1]
    for _ in range(t):
        out = out * b
    return out


def _surjective(ring: CohomologyRing, f, b, alg: MonomialAlgebra, failures: list) -> bool:
    ok = True
    for d in range(ring.top + 1):
        images = [_evaluate(ring, f, b, m) for m in alg.monomials(d)]
        if ring.span_rank(images) != ring.basis.dim(d):
            failures.append(f"degree {d}: generators do not span H^{d}")
            ok = False
    return ok


def surface_generators(ring: CohomologyRing):
    p = ring.presentation
    f = [ring.dual_class(circle(i)) for i in range(1, p.circle_count + 1)]
    b = ring.dual_class(divided_power(1))
    return f, b


def macdonald_relations(g: int, n: int):
    """
    Every instance (A, B, C, q) of the relation
    f_A f_{B+g} prod_{k in C} (f_k f_{k+g} - b) b^q = 0 with
    |A| + |B| + 2|C| + q = n + 1 and A, B, C disjoint subsets of 1..g.
    """
    for assign in product(range(4), repeat=g):
        A = tuple(i + 1 for i, a in enumerate(assign) if a == 1)
        B = tuple(i + 1 for i, a in enumerate(assign) if a == 2)
        C = tuple(i + 1 for i, a in enumerate(assign) if a == 3)
        q = n + 1 - len(A) - len(B) - 2 * len(C)
        if q >= 0:
            yield A, B, C, q


def _macdonald_poly(alg: MonomialAlgebra, g, A, B, C, q) -> dict:
    poly = {(tuple(sorted(A + tuple(j + g for j in B))), 0): 1}
    # f_A f_{B+g} in that order: sort with sign
    order = list(A) + [j + g for j in B]
    inv = sum(1 for x in range(len(order)) for y in range(x + 1, len(order)) if order[x] > order[y])
    poly = {k: (-1) ** inv for k in poly}
    for k in C:
        poly = alg.mul(poly, {((k, k + g), 0): 1, ((), 1): -1})
    return alg.mul(poly, {((), q): 1})


def macdonald_verify(g: int, n: int, coeff: Coefficients = QQ) -> Report:
    ring = cohomology_ring(orientable_surface(g), n, coeff)
    f, b = surface_generators(ring)
    failures = []
    instances = 0
    for A, B, C, q in macdonald_relations(g, n):
        instances += 1
        x = ring.one
        for i in A:
            x = x * f[i - 1]
        for j in B:
            x = x * f[j + g - 1]
        for k in C:
            x = x * (f[k - 1] * f[k + g - 1] - b)
        x = x * (b ** q)
        if not x.is_zero():
            failures.append(f"relation A={A} B={B} C={C} q={q} is {x}")
    alg = MonomialAlgebra(2 * g, coeff, squares_to_b=False)
    rels = [_macdonald_poly(alg, g, *inst) for inst in macdonald_relations(g, n)]
    abstract = alg.quotient_dims(rels, ring.top + 2)
    computed = ring.basis.dims + [0, 0]
    if abstract != computed:
        failures.append(f"dimensions: computed {computed}, quotient {abstract}")
    _surjective(ring, f, b, alg, failures)
    # dual cells without dual pairs are monomials in f and b
    dual_checked = 0
    for t in range(n + 1):
        for size in range(0, min(2 * g, n - t) + 1):
            for I in combinations(range(1, 2 * g + 1), size):
                if any(i + g in I for i in I):
                    continue
                dual_checked += 1
                lhs = ring.dual_class(SPMonomial(I, ((1, t),) if t else ()))
                rhs = _evaluate(ring, f, b, (I, t))
                if lhs != rhs:
                    failures.append(f"(e_{I} SP^{t}D)* = {lhs} but f_I b^t = {rhs}")
    return Report("MacDonald ring", not failures,
                  {"g": g, "n": n, "coeff": str(coeff), "relation instances": instances,
                   "dimensions": computed[:ring.top + 1], "quotient dimensions": abstract[:ring.top + 1],
                   "dual identities checked": dual_checked}, failures)


def main_relation_check(g: int, n: int, coeff: Coefficients = QQ) -> Report:
    """f_i f_{i+g} - (e_i e_{i+g})* = b for every i."""
    ring = cohomology_ring(orientable_surface(g), n, coeff)
    f, b = surface_generators(ring)
    failures = []
    if n >= 2:
        for i in range(1, g + 1):
            pair = ring.dual_class(SPMonomial((i, i + g)))
            diff = f[i - 1] * f[i + g - 1] - pair
            if diff != b:
                failures.append(f"i={i}: f_i f_(i+g) - (e_i e_(i+g))* = {diff}, b = {b}")
    else:
        # n = 1: the pair cell does not exist and f_i f_{i+g} = b on the surface
        for i in range(1, g + 1):
            if f[i - 1] * f[i + g - 1] != b:
                failures.append(f"i={i}: f_i f_(i+g) != b")
    return Report("main relation", not failures, {"g": g, "n": n}, failures)


def nonorientable_verify(g: int, n: int) -> Report:
    coeff = GF(2)
    ring = cohomology_ring(nonorientable_surface(g), n, coeff)
    f, b = surface_generators(ring)
    failures = []
    for i in range(g):
        if f[i] * f[i] != b:
            failures.append(f"f_{i + 1}^2 != b")
    for r in range(0, min(g, n + 1) + 1):
        t = n + 1 - r
        for I in combinations(range(1, g + 1), r):
            x = _evaluate(ring, f, b, (I, t))
            if not x.is_zero():
                failures.append(f"f_{I} b^{t} = {x} != 0")
    alg = MonomialAlgebra(g, coeff, squares_to_b=True)
    rels = [{(I, n + 1 - r): 1} for r in range(0, min(g, n + 1) + 1)
            for I in combinations(range(1, g + 1), r)]
    abstract = alg.quotient_dims(rels, ring.top + 2)
    computed = ring.basis.dims + [0, 0]
    if abstract != computed:
        failures.append(f"dimensions: computed {computed}, quotient {abstract}")
    _surjective(ring, f, b, alg, failures)
    for t in range(n + 1):
        for r in range(0, min(g, n - t) + 1):
            for I in combinations(range(1, g + 1), r):
                lhs = ring.dual_class(SPMonomial(I, ((1, t),) if t else ()))
                if lhs != _evaluate(ring, f, b, (I, t)):
                    failures.append(f"(e_{I} SP^{t}D)* != f_I b^{t}")
    # stable range: h_i = f_1 + f_i, c = f_1 give E(h_2..h_g) (x) F2[c] in degrees <= n
    h = [f[0] + f[i] for i in range(1, g)]
    c = f[0]
    for d in range(n + 1):
        mons = []
        for size in range(0, min(g - 1, d) + 1):
            for S in combinations(range(g - 1), size):
                x = c ** (d - size)
                for s in S:
                    x = x * h[s]
                mons.append(x)
        if len(mons) != ring.basis.dim(d) or ring.span_rank(mons) != len(mons):
            failures.append(f"stable basis h_S c^t fails in degree {d}")
    return Report("non-orientable ring", not failures,
                  {"g": g, "n": n, "dimensions": computed[:ring.top + 1],
                   "quotient dimensions": abstract[:ring.top + 1]}, failures)


def _ideal_echelon(ring: CohomologyRing, gens: list[HClass], d: int) -> Echelon:
    """Degree-d part of the ideal generated by ``gens``."""
    ech = Echelon(ring.coeff)
    for x in gens:
        if x.degree > d:
            continue
        for h in ring.classes(d - x.degree):
            ech.add((x * h).as_vector())
    return ech


def clifford_bound(g: int, n: int) -> int:
    """Smallest e with b^e in the ideal (f_1, ..., f_2g) of H^*(SP^n S_g; Q)."""
    if g < 1 or n < 1:
        raise ValueError("need g >= 1 and n >= 1")
    ring = cohomology_ring(orientable_surface(g), n, QQ)
    f, b = surface_generators(ring)
    power = ring.one
    for e in range(1, n + 2):
        power = power * b
        if 2 * e > ring.top or _ideal_echelon(ring, f, 2 * e).contains(power.as_vector()):
            return e
    raise AssertionError("b^(n+1) must vanish")


def clifford_law(g: int, n: int) -> int:
    """The index predicted by the relations: n + 1 - min(g, floor((n+1)/2))."""
    return max(n // 2, n - g) + 1


def real_clifford_quotient(g: int, n: int) -> Report:
    """H^*(SP^n U_g; F2) / (f_i + f_1) compared with F2[u]/(u^(2n-g+2)), u = f_1."""
    ring = cohomology_ring(nonorientable_surface(g), n, GF(2))
    f, b = surface_generators(ring)
    gens = [f[i] + f[0] for i in range(1, g)]
    expected = 2 * n - g + 2
    u = f[0]
    dims, height = [], None
    power = ring.one
    for d in range(ring.top + 2):
        if d > 0:
            power = power * u
        ech = _ideal_echelon(ring, gens, d) if d <= ring.top else Echelon(ring.coeff)
        dims.append(ring.basis.dim(d) - ech.rank)
        if height is None and (d > ring.top or ech.contains(power.as_vector())):
            height = d
    want = [1 if d < expected else 0 for d in range(ring.top + 2)]
    failures = []
    if dims != want or height != expected:
        failures.append(f"quotient dims {dims}, u height {height}; F2[u]/(u^{expected}) has {want}")
    return Report("real Clifford quotient", not failures,
                  {"g": g, "n": n, "quotient dimensions": dims, "height": height, "expected": expected},
                  failures)


def lens_ring_check(m: int, n: int) -> Report:
    """H^*(SP^n(S^1 u_m D^2); F_m), m prime: one class per degree, f^2 = k b or 0, b^{n+1} = f b^n = 0."""
    from .presentation import lens_attach
    coeff = GF(m)
    ring = cohomology_ring(lens_attach(m), n, coeff)
    failures = []
    if ring.basis.dims != [1] * (2 * n + 1):
        failures.append(f"dims {ring.basis.dims}")
    if n >= 1:
        f, b = surface_generators(ring)
        k = m // 2 if m % 2 == 0 else 0
        if f[0] * f[0] != k * b:
            failures.append(f"f^2 = {f[0] * f[0]}, expected {k} b")
        if not (b ** (n + 1)).is_zero() or not (f[0] * b ** n).is_zero():
            failures.append("b^(n+1) or f b^n nonzero")
        for t in range(n + 1):
            if (b ** t).is_zero() or (t < n and (f[0] * b ** t).is_zero()):
                failures.append(f"b^{t} or f b^{t} vanishes too early")
    return Report("lens ring", not failures, {"m": m, "n": n, "dims": ring.basis.dims}, failures)

