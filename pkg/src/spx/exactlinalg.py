"""
Sparse exact linear algebra.

Integer matrices are diagonalised by unimodular elimination to get their
invariant factors; matrices over Q or F_p are brought to reduced row
echelon form. Everything is exact: Python ints, Fractions, or ints mod p.

>>> m = SparseExactMatrix.from_dense([[2, 4], [6, 8]])
>>> smith_normal_form(m).invariant_factors
(2, 4)
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import factorint, isprime


@dataclass(frozen=True)
class Coefficients:
    """Coefficient ring: the integers, the rationals, or a prime field."""

    kind: str  # "Z", "Q" or "F"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "F" and not (self.p >= 2 and isprime(self.p)):
            raise ValueError(f"F_p needs a prime p, got {self.p}")
        if self.kind != "F" and self.p:
            raise ValueError("only F carries a modulus")

    @classmethod
    def parse(cls, text: str) -> "Coefficients":
        """Parse "Z", "Q", "F2", "F3", ... (also "GF5", "Z/7")."""
        t = text.strip().upper()
        if t in ("Z", "ZZ"):
            return cls("Z")
        if t in ("Q", "QQ"):
            return cls("Q")
        for prefix in ("GF", "F", "Z/"):
            if t.startswith(prefix) and t[len(prefix):].isdigit():
                return cls("F", int(t[len(prefix):]))
        raise ValueError(f"bad coefficients {text!r}; use Z, Q or Fp")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    @property
    def characteristic(self) -> int:
        return self.p

    def __str__(self):
        return f"F{self.p}" if self.kind == "F" else self.kind

    def reduce(self, x):
        """Image of an integer (or Fraction, for Q) in this ring."""
        if self.kind == "F":
            if isinstance(x, Fraction):
                return x.numerator * pow(x.denominator, -1, self.p) % self.p
            return x % self.p
        return x

    def inv(self, x):
        if self.kind == "F":
            return pow(x, -1, self.p)
        if self.kind == "Q":
            return Fraction(1) / x
        if x in (1, -1):
            return x
        raise ZeroDivisionError(f"{x} is not a unit in Z")


ZZ = Coefficients("Z")
QQ = Coefficients("Q")


def GF(p: int) -> Coefficients:
    return Coefficients("F", p)


class SparseExactMatrix:
    """
    Coordinate-format matrix with exact entries and no stored zeros.
    Entries are ints (Z and Q) or residues mod p (F_p).
    """

    __slots__ = ("nrows", "ncols", "entries", "ring")

    def __init__(self, nrows: int, ncols: int, entries=None, ring: Coefficients = ZZ):
        self.nrows = nrows
        self.ncols = ncols
        self.ring = ring
        self.entries: dict[tuple[int, int], int] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < nrows and 0 <= c < ncols):
                raise IndexError(f"entry ({r}, {c}) outside {nrows}x{ncols}")
            v = ring.reduce(v)
            if v:
                self.entries[r, c] = v

    @classmethod
    def from_dense(cls, rows, ring: Coefficients = ZZ) -> "SparseExactMatrix":
        nrows = len(rows)
        ncols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(nrows, ncols, entries, ring)

    def to_dense(self):
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def over(self, ring: Coefficients) -> "SparseExactMatrix":
        """Same integer entries, reduced into another coefficient ring."""
        return SparseExactMatrix(self.nrows, self.ncols, self.entries, ring)

    def transpose(self) -> "SparseExactMatrix":
        t = SparseExactMatrix(self.ncols, self.nrows, ring=self.ring)
        t.entries = {(c, r): v for (r, c), v in self.entries.items()}
        return t

    def row_dicts(self) -> list[dict[int, int]]:
        rows = [dict() for _ in range(self.nrows)]
        for (r, c), v in sorted(self.entries.items()):
            rows[r][c] = v
        return rows

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __eq__(self, other):
        if not isinstance(other, SparseExactMatrix):
            return NotImplemented
        return (self.shape == other.shape and self.ring == other.ring
                and self.entries == other.entries)

    def __repr__(self):
        return f"SparseExactMatrix({self.nrows}x{self.ncols}, nnz={len(self.entries)}, {self.ring})"

    def to_matrix_market(self) -> str:
        """Coordinate text dump (1-based), for debugging."""
        lines = ["%%MatrixMarket matrix coordinate integer general",
                 f"{self.nrows} {self.ncols} {len(self.entries)}"]
        for (r, c), v in sorted(self.entries.items()):
            lines.append(f"{r + 1} {c + 1} {v}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Smith normal form over Z
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SNFResult:
    invariant_factors: tuple[int, ...]  # d_1 | d_2 | ... | d_s, all >= 1

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.invariant_factors if d > 1)


def _invariant_factors(diagonal) -> tuple[int, ...]:
    # a diagonal matrix is equivalent to the SNF built from its elementary divisors
    diagonal = [abs(d) for d in diagonal if d]
    by_prime: dict[int, list[int]] = defaultdict(list)
    for d in diagonal:
        if d > 1:
            for q, e in factorint(d).items():
                by_prime[q].append(e)
    length = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * length
    for q, exps in by_prime.items():
        exps.sort(reverse=True)
        for i, e in enumerate(exps):
            factors[length - 1 - i] *= q ** e
    return (1,) * (len(diagonal) - length) + tuple(factors)


def smith_normal_form(m: SparseExactMatrix) -> SNFResult:
    """
    Invariant factors of an integer matrix.

    Pivots are chosen by smallest absolute value, ties broken by
    (row, column). The input is not modified.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, set[int]] = defaultdict(set)
    for (r, c), v in m.entries.items():
        rows.setdefault(r, {})[c] = v
        cols[c].add(r)

    def row_axpy(dst, q, src):
        # row dst -= q * row src
        rd, rs = rows[dst], rows[src]
        for c, v in rs.items():
            w = rd.get(c, 0) - q * v
            if w:
                if c not in rd:
                    cols[c].add(dst)
                rd[c] = w
            elif c in rd:
                del rd[c]
                cols[c].discard(dst)

    def col_axpy(dst, q, src):
        # column dst -= q * column src
        for r in list(cols[src]):
            rr = rows[r]
            w = rr.get(dst, 0) - q * rr[src]
            if w:
                if dst not in rr:
                    cols[dst].add(r)
                rr[dst] = w
            elif dst in rr:
                del rr[dst]
                cols[dst].discard(r)

    def drop(r, c):
        for cc in rows.pop(r):
            cols[cc].discard(r)
        for rr in cols.pop(c, ()):
            rows[rr].pop(c, None)

    diagonal = []
    while True:
        for r in [r for r, rr in rows.items() if not rr]:
            del rows[r]
        if not rows:
            break
        best = None
        for r in sorted(rows):
            c, v = min(rows[r].items(), key=lambda cv: (abs(cv[1]), cv[0]))
            key = (abs(v), r, c)
            if best is None or key < best:
                best = key
            if abs(v) == 1:
                break
        _, r, c = best
        a = rows[r][c]
        if abs(a) == 1:
            for r2 in sorted(cols[c] - {r}):
                row_axpy(r2, rows[r2][c] * a, r)
            diagonal.append(1)
            drop(r, c)
            continue
        for r2 in sorted(cols[c] - {r}):
            row_axpy(r2, rows[r2][c] // a, r)
        for c2 in sorted(set(rows[r]) - {c}):
            col_axpy(c2, rows[r][c2] // a, c)
        if len(rows[r]) == 1 and cols[c] == {r}:
            diagonal.append(a)
            drop(r, c)
        # otherwise a smaller remainder exists and will be picked next round
    return SNFResult(_invariant_factors(diagonal))


def elementary_divisors(invariant_factors) -> tuple[int, ...]:
    """Prime-power decomposition of a list of torsion coefficients, sorted."""
    out = []
    for d in invariant_factors:
        if d > 1:
            out.extend(q ** e for q, e in factorint(d).items())
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# Row reduction over a field
# ---------------------------------------------------------------------------

def _axpy(y: dict, a, x: dict, ring: Coefficients):
    """y += a * x in place, dropping zeros."""
    p = ring.p
    for k, v in x.items():
        w = y.get(k, 0) + a * v
        if p:
            w %= p
        if w:
            y[k] = w
        else:
            y.pop(k, None)


class Echelon:
    """
    Incrementally maintained reduced row echelon basis of a subspace of
    K^N, vectors stored as {index: value}.

    With ``track=True`` every stored row also remembers which "tagged"
    inputs it is made of, so reducing a vector of the span returns its
    coordinates with respect to the tagged inputs, modulo the untagged ones.
    """

    def __init__(self, ring: Coefficients, track: bool = False):
        if not ring.is_field:
            raise ValueError("Echelon needs a field")
        self.ring = ring
        self.track = track
        self.rows: dict[int, dict] = {}   # pivot -> row (pivot entry 1)
        self.combs: dict[int, dict] = {}  # pivot -> tag combination
        self.ntags = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict):
        """Return (residual, combination) with vec = span part + residual."""
        ring = self.ring
        v = {k: ring.reduce(x) for k, x in vec.items() if ring.reduce(x)}
        comb: dict = {}
        for piv in [k for k in v if k in self.rows]:
            a = v.get(piv, 0)
            if a:
                _axpy(v, -a, self.rows[piv], ring)
                if self.track:
                    _axpy(comb, a, self.combs[piv], ring)
        return v, comb

    def add(self, vec: dict, tagged: bool = False) -> bool:
        """Insert vec; return True if it enlarged the span."""
        ring = self.ring
        v, comb = self.reduce(vec)
        if not v:
            return False
        tag = None
        if tagged:
            tag = self.ntags
            self.ntags += 1
        piv = min(v)
        inv = ring.inv(v[piv])
        v = {k: ring.reduce(x * inv) for k, x in v.items()}
        c = {}
        if self.track:
            # v_reduced = vec - sum(a_i row_i)  =>  its tags are tag - comb
            c = {k: ring.reduce(-x * inv) for k, x in comb.items()}
            if tag is not None:
                _axpy(c, inv, {tag: 1}, ring)
        for q, row in self.rows.items():
            a = row.get(piv, 0)
            if a:
                _axpy(row, -a, v, ring)
                if self.track:
                    _axpy(self.combs[q], -a, c, ring)
        self.rows[piv] = v
        self.combs[piv] = c
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def coordinates(self, vec: dict) -> dict:
        """Tag coordinates of a vector known to lie in the span."""
        res, comb = self.reduce(vec)
        if res:
            raise ValueError("vector is not in the span")
        return comb


@dataclass
class FieldEchelon:
    rank: int
    kernel: list[dict] = field(default_factory=list)
    image: list[dict] = field(default_factory=list)
    pivot_columns: tuple[int, ...] = ()


def field_rank_kernel(m: SparseExactMatrix) -> FieldEchelon:
    """
    Rank, kernel basis, image basis and pivot columns over Q or F_p.

    The reduced row echelon form is unique, so the pivot columns are the
    lexicographically first independent columns; the kernel basis is the
    standard one read off the RREF (one vector per free column).
    """
    ring = m.ring
    if not ring.is_field:
        raise ValueError("field_rank_kernel needs Q or F_p coefficients")
    ech = Echelon(ring)
    for row in m.row_dicts():
        if row:
            ech.add(row)
    pivots = tuple(sorted(ech.rows))
    pivset = set(pivots)
    kernel = []
    for f in range(m.ncols):
        if f in pivset:
            continue
        v = {f: 1}
        for piv, row in ech.rows.items():
            a = row.get(f, 0)
            if a:
                v[piv] = ring.reduce(-a)
        kernel.append(v)
    columns: dict[int, dict] = defaultdict(dict)
    for (r, c), v in m.entries.items():
        if c in pivset:
            columns[c][r] = v
    image = [dict(sorted(columns[c].items())) for c in pivots]
    return FieldEchelon(len(pivots), kernel, image, pivots)


def rank(m: SparseExactMatrix) -> int:
    """Rank over the matrix's own ring (over Z: rank over Q)."""
    if m.ring.is_field:
        ech = Echelon(m.ring)
        for row in m.row_dicts():
            if row:
                ech.add(row)
        return ech.rank
    return smith_normal_form(m).rank


__all__ = [
    "Coefficients", "ZZ", "QQ", "GF", "SparseExactMatrix", "SNFResult",
    "smith_normal_form", "elementary_divisors", "Echelon", "FieldEchelon",
    "field_rank_kernel", "rank",
]
