"""
Homology of the symmetric products SP^n X from the multiplicative complex,
its splitting by filtration, and comparisons with the product
decompositions predicted from H_*(X) alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, gcd

from sympy import factorint, primefactors

from .exactlinalg import ZZ, Coefficients, elementary_divisors, rank, smith_normal_form
from .presentation import (ComplexPresentation, HomologyShape, bouquet, lens_attach,
                           moore_decomposition, sphere)
from .spchain import boundary_matrix, enumerate_basis


@dataclass(frozen=True)
class HomologyGroup:
    """Z^free_rank plus cyclic groups of prime-power order (or a vector space of that dimension)."""

    degree: int
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        t = tuple(sorted(self.torsion))
        for q in t:
            if q < 2 or len(factorint(q)) != 1:
                raise ValueError(f"torsion entry {q} is not a prime power")
        object.__setattr__(self, "torsion", t)

    @property
    def is_zero(self) -> bool:
        return not self.free_rank and not self.torsion

    def torsion_primes(self) -> set[int]:
        return {primefactors(q)[0] for q in self.torsion}

    def p_torsion_count(self, p: int) -> int:
        return sum(1 for q in self.torsion if q % p == 0)

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{q}" for q in self.torsion]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {"degree": self.degree, "free_rank": self.free_rank,
                "torsion": [str(q) for q in self.torsion]}

    @classmethod
    def from_json(cls, data) -> "HomologyGroup":
        return cls(int(data["degree"]), int(data["free_rank"]), tuple(int(q) for q in data["torsion"]))


def _group(degree, free, invariant_factors=()) -> HomologyGroup:
    return HomologyGroup(degree, free, elementary_divisors(invariant_factors))


def _chain_homology(dims, matrix, top, coeff: Coefficients) -> list[HomologyGroup]:
    # dims(d) -> rank of C_d, matrix(d) -> boundary C_d -> C_{d-1}
    ranks, torsion = {}, {}
    for d in range(1, top + 2):
        m = matrix(d)
        if coeff.is_field:
            ranks[d] = rank(m)
        else:
            snf = smith_normal_form(m)
            ranks[d] = snf.rank
            torsion[d] = snf.torsion
    out = []
    for d in range(top + 1):
        free = dims(d) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        out.append(_group(d, free, torsion.get(d + 1, ())))
    return out


@lru_cache(maxsize=None)
def _homology(p, n, coeff) -> tuple[HomologyGroup, ...]:
    return tuple(_chain_homology(
        lambda d: len(enumerate_basis(p, n, d)),
        lambda d: boundary_matrix(p, n, d, coeff),
        2 * n, coeff))


def homology(p: ComplexPresentation, n: int, coeff: Coefficients = ZZ) -> list[HomologyGroup]:
    """H_d(SP^n X) for d = 0..2n. Over a field free_rank is the dimension."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_homology(p, n, coeff))


@lru_cache(maxsize=None)
def _block(p, s, coeff) -> tuple[HomologyGroup, ...]:
    return tuple(_chain_homology(
        lambda d: len(enumerate_basis(p, s, d, filtration=s)),
        lambda d: boundary_matrix(p, s, d, coeff, filtration=s),
        2 * s, coeff))


def filtration_block(p: ComplexPresentation, s: int, coeff: Coefficients = ZZ) -> list[HomologyGroup]:
    """H_*(SP^s X, SP^{s-1} X): homology of the cells of filtration exactly s (degrees 0..2s)."""
    return list(_block(p, s, coeff))


@dataclass
class BigradedTable:
    n: int
    coeff: Coefficients
    entries: dict = field(default_factory=dict)  # (s, d) -> HomologyGroup

    def total(self, d: int) -> HomologyGroup:
        free, tors = 0, []
        for (s, dd), grp in self.entries.items():
            if dd == d:
                free += grp.free_rank
                tors += grp.torsion
        return HomologyGroup(d, free, tuple(tors))

    def render(self) -> str:
        width = max([len(str(g)) for g in self.entries.values()] + [3])
        head = "s\\d | " + " ".join(f"{d:>{width}}" for d in range(2 * self.n + 1))
        lines = [head, "-" * len(head)]
        for s in range(self.n + 1):
            cells = [str(self.entries.get((s, d), "")) if self.entries.get((s, d)) and not self.entries[s, d].is_zero
                     else "." for d in range(2 * self.n + 1)]
            lines.append(f"{s:>3} | " + " ".join(f"{c:>{width}}" for c in cells))
        return "\n".join(lines)

    def to_json(self) -> list:
        return [dict(grp.to_json(), filtration=s) for (s, d), grp in sorted(self.entries.items())]


def bigraded_homology(p: ComplexPresentation, n: int, coeff: Coefficients = ZZ) -> BigradedTable:
    table = BigradedTable(n, coeff)
    for s in range(n + 1):
        for grp in filtration_block(p, s, coeff):
            table.entries[s, grp.degree] = grp
    return table


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------

@dataclass
class Report:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"{status} {self.name}"]
        for k, v in self.details.items():
            lines.append(f"  {k}: {v}")
        for f in self.failures[:20]:
            lines.append(f"  counterexample: {f}")
        return "\n".join(lines)


def _torsion_primes(groups) -> set[int]:
    out: set[int] = set()
    for g in groups:
        out |= g.torsion_primes()
    return out


def torsion_prime_check(p: ComplexPresentation, n: int) -> Report:
    """Primes dividing torsion of H_*(SP^n X) versus those of H_*(X)."""
    sp = _torsion_primes(homology(p, n))
    base = _torsion_primes(homology(p, 1))
    return Report("torsion primes", sp == base,
                  {"n": n, "primes SP^n X": sorted(sp), "primes X": sorted(base)},
                  [] if sp == base else [f"{sorted(sp)} != {sorted(base)}"])


def splitting_check(p: ComplexPresentation, n: int, coeff: Coefficients = ZZ) -> Report:
    """Filtration blocks sum to the homology of the whole complex, degree by degree."""
    table = bigraded_homology(p, n, coeff)
    full = homology(p, n, coeff)
    failures = [f"degree {g.degree}: {table.total(g.degree)} != {g}"
                for g in full if table.total(g.degree) != g]
    return Report("Steenrod splitting", not failures, {"n": n, "coeff": str(coeff)}, failures)


def stability_check(p: ComplexPresentation, max_degree: int) -> Report:
    """
    H_i(SP^n X) does not depend on n once n >= i: no block of filtration
    s > i reaches degree i. Checked for blocks up to filtration
    max_degree + 1; the stable groups are reported as H_i(SP^infinity X).
    """
    if max_degree < 1:
        raise ValueError("max_degree must be >= 1")
    failures = []
    for s in range(1, max_degree + 2):
        for grp in filtration_block(p, s):
            if grp.degree < s and not grp.is_zero:
                failures.append(f"block s={s} has H_{grp.degree} = {grp}")
    stable = [homology(p, i)[i] for i in range(max_degree + 1)]
    for i, grp in enumerate(stable):
        other = homology(p, max_degree + 1)[i]
        if other != grp:
            failures.append(f"H_{i}: SP^{i} gives {grp}, SP^{max_degree + 1} gives {other}")
    return Report("stability", not failures,
                  {"stable": [str(g) for g in stable], "groups": stable}, failures)


# ---------------------------------------------------------------------------
# Graded abelian groups and Kunneth
# ---------------------------------------------------------------------------

def tensor_groups(a: HomologyGroup, b: HomologyGroup, degree: int) -> HomologyGroup:
    tors = []
    tors += list(b.torsion) * a.free_rank
    tors += list(a.torsion) * b.free_rank
    for x in a.torsion:
        for y in b.torsion:
            g = gcd(x, y)
            if g > 1:
                tors.append(g)
    return HomologyGroup(degree, a.free_rank * b.free_rank, tuple(tors))


def tor_groups(a: HomologyGroup, b: HomologyGroup, degree: int) -> HomologyGroup:
    tors = [g for x in a.torsion for y in b.torsion if (g := gcd(x, y)) > 1]
    return HomologyGroup(degree, 0, tuple(tors))


def direct_sum(groups, degree: int) -> HomologyGroup:
    groups = list(groups)
    return HomologyGroup(degree, sum(g.free_rank for g in groups),
                         tuple(q for g in groups for q in g.torsion))


def kunneth(a: list[HomologyGroup], b: list[HomologyGroup], top: int,
            over_field: bool = False) -> list[HomologyGroup]:
    """
    Homology of a tensor product of free chain complexes from the homologies
    of the factors (lists indexed by degree). Over Z this includes the Tor
    terms; over a field free_rank is a dimension and dimensions multiply.
    """
    def get(seq, i):
        return seq[i] if 0 <= i < len(seq) else HomologyGroup(i)

    out = []
    for k in range(top + 1):
        if over_field:
            out.append(HomologyGroup(k, sum(get(a, i).free_rank * get(b, k - i).free_rank
                                            for i in range(k + 1))))
            continue
        parts = [tensor_groups(get(a, i), get(b, k - i), k) for i in range(k + 1)]
        parts += [tor_groups(get(a, i), get(b, k - 1 - i), k) for i in range(k)]
        out.append(direct_sum(parts, k))
    return out


def circle_homology(top: int) -> list[HomologyGroup]:
    return [HomologyGroup(d, 1 if d <= 1 else 0) for d in range(top + 1)]


def cp_infinity_homology(top: int) -> list[HomologyGroup]:
    return [HomologyGroup(d, 1 if d % 2 == 0 else 0) for d in range(top + 1)]


def lens_space_homology(m: int, top: int) -> list[HomologyGroup]:
    """Infinite lens space S^infinity / Z_m: Z, Z/m, 0, Z/m, 0, ..."""
    out = []
    for d in range(top + 1):
        if d == 0:
            out.append(HomologyGroup(0, 1))
        elif d % 2 == 1:
            out.append(_group(d, 0, (m,)))
        else:
            out.append(HomologyGroup(d))
    return out


def dold_thom_predict(h: HomologyShape, top: int) -> list[HomologyGroup]:
    """Homology, up to degree ``top``, of (S^1)^a x (CP^inf)^b x L_{n_1} x ... x L_{n_r}."""
    acc = [HomologyGroup(0, 1)] + [HomologyGroup(d) for d in range(1, top + 1)]
    factors = ([circle_homology(top)] * h.free_rank_deg1
               + [cp_infinity_homology(top)] * h.free_rank_deg2
               + [lens_space_homology(m, top) for m in h.torsion_coefficients])
    for f in factors:
        acc = kunneth(acc, f, top)
    return acc


def dold_thom_check(p: ComplexPresentation, max_degree: int) -> Report:
    shape = moore_decomposition(p)
    predicted = dold_thom_predict(shape, max_degree)
    stab = stability_check(p, max_degree)
    stable = stab.details["groups"]
    failures = list(stab.failures)
    failures += [f"H_{i}: computed {c}, predicted {q}" for i, (c, q) in enumerate(zip(stable, predicted)) if c != q]
    return Report("Dold-Thom", not failures,
                  {"shape": (shape.free_rank_deg1, shape.free_rank_deg2, shape.torsion_coefficients),
                   "computed": [str(g) for g in stable], "predicted": [str(g) for g in predicted]},
                  failures)


def moore_pieces(p: ComplexPresentation) -> list[ComplexPresentation]:
    """Circles, spheres and S^1 u_m D^2 pieces with the homology of X, one per summand."""
    shape = moore_decomposition(p)
    return ([bouquet(1)] * shape.free_rank_deg1 + [sphere()] * shape.free_rank_deg2
            + [lens_attach(m) for m in shape.torsion_coefficients])


def _compositions(n: int, parts: int):
    if parts == 0:
        if n == 0:
            yield ()
        return
    for i in range(n + 1):
        for rest in _compositions(n - i, parts - 1):
            yield (i,) + rest


def dold_milgram_rhs(p: ComplexPresentation, n: int, coeff: Coefficients = ZZ) -> list[HomologyGroup]:
    """Sum over compositions i_1+...+i_r = n of the tensor products of the pieces' blocks."""
    pieces = moore_pieces(p)
    top = 2 * n
    total = [HomologyGroup(d) for d in range(top + 1)]
    for comp in _compositions(n, len(pieces)):
        acc = [HomologyGroup(0, 1)] + [HomologyGroup(d) for d in range(1, top + 1)]
        for piece, i in zip(pieces, comp):
            acc = kunneth(acc, filtration_block(piece, i, coeff), top, coeff.is_field)
        total = [direct_sum([t, a], d) for d, (t, a) in enumerate(zip(total, acc))]
    return total


def dold_milgram_check(p: ComplexPresentation, n: int, coeff: Coefficients = ZZ) -> Report:
    lhs = filtration_block(p, n, coeff)
    rhs = dold_milgram_rhs(p, n, coeff)
    failures = [f"degree {a.degree}: block {a} != pieces {b}" for a, b in zip(lhs, rhs) if a != b]
    return Report("Dold-Milgram", not failures,
                  {"n": n, "coeff": str(coeff), "block": [str(g) for g in lhs],
                   "pieces": [str(g) for g in rhs]}, failures)


def bouquet_betti(k: int, n: int) -> list[int]:
    """Betti numbers of the union of n-dimensional coordinate subtori of (S^1)^k."""
    return [comb(k, i) if i <= n else 0 for i in range(2 * n + 1)]


__all__ = [
    "HomologyGroup", "BigradedTable", "Report", "homology", "filtration_block",
    "bigraded_homology", "torsion_prime_check", "splitting_check", "stability_check",
    "kunneth", "tensor_groups", "tor_groups", "dold_thom_predict", "dold_thom_check",
    "moore_pieces", "dold_milgram_rhs", "dold_milgram_check", "lens_space_homology",
    "circle_homology", "cp_infinity_homology", "bouquet_betti",
]
