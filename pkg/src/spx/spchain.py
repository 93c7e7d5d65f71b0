"""
The multiplicative cellular chain complex of the reduced symmetric products.

A basis cell is a *-product  e_{i1} * ... * e_{it} * SP^{s1}(D_{j1}) * ...
of distinct circle cells and divided powers of 2-cells. Cells differing by
a power of the basepoint cell are identified, so one cell lives in every
SP^n with n >= its filtration  t + s1 + s2 + ...

Chains are plain dicts {SPMonomial: int}. Coefficients stay in exact
integers here; reduction into Q or F_p happens when matrices are built.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from .exactlinalg import ZZ, Coefficients, SparseExactMatrix
from .presentation import ComplexPresentation

Chain = dict  # SPMonomial -> nonzero int


@dataclass(frozen=True, slots=True)
class SPMonomial:
    exterior: tuple[int, ...] = ()               # strictly increasing circle indices
    powers: tuple[tuple[int, int], ...] = ()     # (cell index, exponent >= 1), sorted by cell

    def __post_init__(self):
        ext = self.exterior
        if any(a >= b for a, b in zip(ext, ext[1:])):
            raise ValueError(f"exterior indices must be strictly increasing: {ext}")
        cells = [j for j, _ in self.powers]
        if any(a >= b for a, b in zip(cells, cells[1:])) or any(s < 1 for _, s in self.powers):
            raise ValueError(f"bad divided powers {self.powers}")

    @property
    def degree(self) -> int:
        return len(self.exterior) + 2 * sum(s for _, s in self.powers)

    @property
    def filtration(self) -> int:
        return len(self.exterior) + sum(s for _, s in self.powers)

    @property
    def is_unit(self) -> bool:
        return not self.exterior and not self.powers

    def sort_key(self):
        return (self.degree, self.filtration, self.exterior, self.powers)

    def __str__(self):
        parts = [f"e{i}" for i in self.exterior] + [f"SP{s}(D{j})" for j, s in self.powers]
        return "*".join(parts) if parts else "1"

    def to_json(self):
        return {"exterior": list(self.exterior), "powers": [list(p) for p in self.powers]}

    @classmethod
    def from_json(cls, data) -> "SPMonomial":
        return cls(tuple(data["exterior"]), tuple(tuple(p) for p in data["powers"]))

    @classmethod
    def parse(cls, text: str) -> "SPMonomial":
        """Inverse of str(): "e1*e3*SP2(D1)" (factors in any order, no repeats)."""
        text = text.strip()
        if text == "1":
            return UNIT
        ext, powers = [], {}
        for tok in text.split("*"):
            tok = tok.strip()
            if tok.startswith("e"):
                ext.append(int(tok[1:]))
            elif tok.startswith("SP") and "(D" in tok:
                s, j = tok[2:].rstrip(")").split("(D")
                powers[int(j)] = powers.get(int(j), 0) + int(s)
            elif tok.startswith("D"):
                powers[int(tok[1:])] = powers.get(int(tok[1:]), 0) + 1
            else:
                raise ValueError(f"bad factor {tok!r}")
        if len(set(ext)) != len(ext):
            raise ValueError("repeated circle factor")
        return cls(tuple(sorted(ext)), tuple(sorted(powers.items())))


UNIT = SPMonomial()


def circle(i: int) -> SPMonomial:
    return SPMonomial((i,), ())


def divided_power(j: int, s: int = 1) -> SPMonomial:
    return SPMonomial((), ((j, s),)) if s else UNIT


def _merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    # sign of the shuffle sorting a + b (both sorted): (-1)^#{(x, y): x in a, y in b, x > y}
    inv = 0
    j = 0
    for y in b:
        while j < len(a) and a[j] < y:
            j += 1
        inv += len(a) - j
    return -1 if inv & 1 else 1


def mul_terms(x: SPMonomial, y: SPMonomial):
    """x * y as (coefficient, monomial), or None when the product vanishes."""
    if not y.exterior and not y.powers:
        return 1, x
    if not x.exterior and not x.powers:
        return 1, y
    if x.exterior and y.exterior:
        if set(x.exterior).intersection(y.exterior):
            return None
        sign = _merge_sign(x.exterior, y.exterior)
        ext = tuple(sorted(x.exterior + y.exterior))
    else:
        sign = 1
        ext = x.exterior or y.exterior
    if x.powers and y.powers:
        merged = dict(x.powers)
        coeff = sign
        for j, t in y.powers:
            s = merged.get(j, 0)
            if s:
                coeff *= comb(s + t, t)
            merged[j] = s + t
        powers = tuple(sorted(merged.items()))
    else:
        coeff = sign
        powers = x.powers or y.powers
    return coeff, SPMonomial(ext, powers)


def multiply(x: SPMonomial, y: SPMonomial) -> Chain:
    t = mul_terms(x, y)
    return {} if t is None else {t[1]: t[0]}


def add_into(target: dict, key, value):
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


def multiply_chains(a: Chain, b: Chain) -> Chain:
    out: Chain = {}
    for x, cx in a.items():
        for y, cy in b.items():
            t = mul_terms(x, y)
            if t is not None:
                add_into(out, t[1], cx * cy * t[0])
    return out


def boundary(x: SPMonomial, p: ComplexPresentation) -> Chain:
    """
    Derivation boundary: d e_i = 0 and d SP^s(D_j) = (dD_j) * SP^{s-1}(D_j).
    Passing d over the t exterior factors costs (-1)^t.
    """
    out: Chain = {}
    if not x.powers:
        return out
    outer = -1 if len(x.exterior) & 1 else 1
    bvecs = p.boundary_vectors
    for pos, (j, s) in enumerate(x.powers):
        if s == 1:
            rest = x.powers[:pos] + x.powers[pos + 1:]
        else:
            rest = x.powers[:pos] + ((j, s - 1),) + x.powers[pos + 1:]
        for i, m in enumerate(bvecs[j - 1], start=1):
            if not m or i in x.exterior:
                continue
            sign = _merge_sign(x.exterior, (i,))
            ext = tuple(sorted(x.exterior + (i,)))
            add_into(out, SPMonomial(ext, rest), outer * sign * m)
    return out


def boundary_chain(c: Chain, p: ComplexPresentation) -> Chain:
    out: Chain = {}
    for x, cx in c.items():
        for y, cy in boundary(x, p).items():
            add_into(out, y, cx * cy)
    return out


def _power_vectors(r: int, total: int):
    # all (s_1..s_r) >= 0 with sum == total
    if r == 0:
        if total == 0:
            yield ()
        return
    for s in range(total, -1, -1):
        for rest in _power_vectors(r - 1, total - s):
            yield (s,) + rest


@lru_cache(maxsize=None)
def _basis(p: ComplexPresentation, n: int, d, filtration) -> tuple[SPMonomial, ...]:
    k, r = p.circle_count, p.cell_count
    out = []
    for t in range(0, min(k, n) + 1):
        for total in range(0, n - t + 1):
            if d is not None and t + 2 * total != d:
                continue
            if filtration is not None and t + total != filtration:
                continue
            for ext in combinations(range(1, k + 1), t):
                for svec in _power_vectors(r, total):
                    powers = tuple((j + 1, s) for j, s in enumerate(svec) if s)
                    out.append(SPMonomial(ext, powers))
    out.sort(key=SPMonomial.sort_key)
    return tuple(out)


def enumerate_basis(p: ComplexPresentation, n: int, d: int | None = None,
                    filtration: int | None = None) -> tuple[SPMonomial, ...]:
    """
    Cells of filtration <= n (optionally only degree d, or only filtration
    exactly ``filtration``), ordered by degree, filtration, then
    lexicographically. The empty monomial is the basepoint cell.
    """
    if n < 0:
        raise ValueError("filtration bound must be >= 0")
    return _basis(p, n, d, filtration)


def boundary_matrix(p: ComplexPresentation, n: int, d: int, ring: Coefficients = ZZ,
                    filtration: int | None = None) -> SparseExactMatrix:
    """Matrix of d: C_d -> C_{d-1}; rows indexed by the degree d-1 basis."""
    src = enumerate_basis(p, n, d, filtration)
    tgt = enumerate_basis(p, n, d - 1, filtration) if d >= 1 else ()
    index = {m: i for i, m in enumerate(tgt)}
    entries = {}
    for col, x in enumerate(src):
        for y, c in boundary(x, p).items():
            entries[index[y], col] = c
    return SparseExactMatrix(len(tgt), len(src), entries, ring)


def format_chain(c: Chain) -> str:
    if not c:
        return "0"
    out = ""
    for m in sorted(c, key=SPMonomial.sort_key):
        v = c[m]
        mag = abs(v) if isinstance(v, int) else v
        neg = isinstance(v, int) and v < 0
        term = str(m) if mag == 1 else f"{mag}*{m}"
        out += ("-" if neg else "") + term if not out else (" - " if neg else " + ") + term
    return out


def chain_to_json(c: Chain) -> list:
    return [{"monomial": str(m), "coefficient": str(c[m])} for m in sorted(c, key=SPMonomial.sort_key)]


def chain_from_json(data) -> Chain:
    from fractions import Fraction
    out: Chain = {}
    for term in data:
        v = Fraction(term["coefficient"])
        out[SPMonomial.parse(term["monomial"])] = int(v) if v.denominator == 1 else v
    return out
