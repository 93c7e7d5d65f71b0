"""
Chain-level coproduct on the multiplicative complex.

On X itself the 1-cells are primitive and a 2-cell D with attaching word
c_1 c_2 ... c_L (c_t = eps_t e_{i_t}) goes to

    D (x) 1  +  Q(w)  +  1 (x) D,
    Q(w) = sum_{s<t} c_s (x) c_t  +  sum_{eps_t = -1} e_{i_t} (x) e_{i_t}.

The coproduct is multiplicative for the graded tensor-square product
(u (x) v)(u' (x) v') = (-1)^{|v||u'|} uu' (x) vv', and
SP^s(D) = D^s / s!, so lambda(SP^s D) is the s-th power of lambda(D)
divided by s!.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .exactlinalg import ZZ, Coefficients
from .presentation import AttachingWord, ComplexPresentation
from .spchain import UNIT, SPMonomial, add_into, boundary, circle, divided_power, mul_terms

TensorChain = dict  # (SPMonomial, SPMonomial) -> nonzero coefficient


class InexactDivision(ArithmeticError):
    """A coefficient of lambda(D)^s was not divisible by s!."""


def quadratic_part(word: AttachingWord) -> dict[tuple[int, int], int]:
    """Coefficients c_ij of sum c_ij e_i (x) e_j in the diagonal of a 2-cell."""
    q: dict[tuple[int, int], int] = {}
    for t, (j, ej) in enumerate(word):
        for i, ei in word[:t]:
            add_into(q, (i, j), ei * ej)
        if ej < 0:
            add_into(q, (j, j), 1)
    return q


def tensor_multiply(a: TensorChain, b: TensorChain) -> TensorChain:
    out: TensorChain = {}
    for (u, v), c in a.items():
        dv = v.degree & 1
        for (u2, v2), c2 in b.items():
            left = mul_terms(u, u2)
            if left is None:
                continue
            right = mul_terms(v, v2)
            if right is None:
                continue
            sign = -1 if dv and (u2.degree & 1) else 1
            add_into(out, (left[1], right[1]), sign * c * c2 * left[0] * right[0])
    return out


def _diagonal_of_cell(p: ComplexPresentation, j: int) -> TensorChain:
    d = divided_power(j)
    out: TensorChain = {(d, UNIT): 1, (UNIT, d): 1}
    for (a, b), c in quadratic_part(p.words[j - 1]).items():
        add_into(out, (circle(a), circle(b)), c)
    # chain map on the cell itself: lambda(dD) = (d (x) 1 + 1 (x) d) lambda(D)
    image: TensorChain = {}
    for e, c in boundary(d, p).items():
        add_into(image, (e, UNIT), c)
        add_into(image, (UNIT, e), c)
    if tensor_boundary(out, p) != image:
        raise AssertionError(f"diagonal of D{j} is not a chain map")
    return out


@lru_cache(maxsize=None)
def _generator(p: ComplexPresentation, j: int, s: int) -> tuple:
    if s == 0:
        return (((UNIT, UNIT), 1),)
    lam = _diagonal_of_cell(p, j)
    acc: TensorChain = {(UNIT, UNIT): 1}
    for _ in range(s):
        acc = tensor_multiply(acc, lam)
    f = factorial(s)
    out = []
    for key, c in acc.items():
        q, r = divmod(c, f)
        if r:
            raise InexactDivision(f"coefficient {c} of {key[0]} (x) {key[1]} in lambda(D{j})^{s} "
                                  f"is not divisible by {s}!")
        out.append((key, q))
    return tuple(out)


def coproduct_generator(g: SPMonomial, p: ComplexPresentation) -> TensorChain:
    """lambda of a single generator: a circle cell e_i or a divided power SP^s(D_j)."""
    if len(g.exterior) == 1 and not g.powers:
        return {(g, UNIT): 1, (UNIT, g): 1}
    if not g.exterior and len(g.powers) == 1:
        (j, s), = g.powers
        return dict(_generator(p, j, s))
    raise ValueError(f"{g} is not a generator")


@lru_cache(maxsize=None)
def _coproduct(p: ComplexPresentation, x: SPMonomial) -> tuple:
    acc: TensorChain = {(UNIT, UNIT): 1}
    for i in x.exterior:
        acc = tensor_multiply(acc, coproduct_generator(circle(i), p))
    for j, s in x.powers:
        acc = tensor_multiply(acc, dict(_generator(p, j, s)))
    return tuple(acc.items())


def coproduct(x: SPMonomial, p: ComplexPresentation, n: int | None = None,
              coeff: Coefficients = ZZ) -> TensorChain:
    """
    lambda(x), computed over Z as the product of the generators' coproducts,
    truncated to tensor factors of filtration <= n and reduced into ``coeff``.
    """
    if n is not None and x.filtration > n:
        raise ValueError(f"{x} has filtration {x.filtration} > {n}")
    out: TensorChain = {}
    for (u, v), c in _coproduct(p, x):
        if n is not None and (u.filtration > n or v.filtration > n):
            continue
        c = coeff.reduce(c)
        if c:
            out[u, v] = c
    return out


def coproduct_chain(c: dict, p: ComplexPresentation) -> TensorChain:
    out: TensorChain = {}
    for x, cx in c.items():
        for key, v in _coproduct(p, x):
            add_into(out, key, cx * v)
    return out


def tensor_boundary(t: TensorChain, p: ComplexPresentation) -> TensorChain:
    """(d (x) 1 + (-1)^{|u|} 1 (x) d) on u (x) v."""
    out: TensorChain = {}
    for (u, v), c in t.items():
        for u2, cu in boundary(u, p).items():
            add_into(out, (u2, v), c * cu)
        sign = -1 if u.degree & 1 else 1
        for v2, cv in boundary(v, p).items():
            add_into(out, (u, v2), sign * c * cv)
    return out


def counit_left(t: TensorChain) -> dict:
    """(epsilon (x) id): keep the terms whose left factor is the unit cell."""
    return {v: c for (u, v), c in t.items() if u.is_unit}


def counit_right(t: TensorChain) -> dict:
    return {u: c for (u, v), c in t.items() if v.is_unit}


def reduce_tensor(t: TensorChain, coeff: Coefficients) -> TensorChain:
    out = {}
    for k, c in t.items():
        c = coeff.reduce(c)
        if c:
            out[k] = c
    return out


def format_tensor(t: TensorChain) -> str:
    if not t:
        return "0"
    keys = sorted(t, key=lambda uv: (uv[0].degree + uv[1].degree, uv[0].sort_key(), uv[1].sort_key()))
    parts = []
    for u, v in keys:
        c = t[u, v]
        parts.append(f"{c} · {u} ⊗ {v}")
    return "\n".join(parts)


def tensor_to_json(t: TensorChain) -> list:
    keys = sorted(t, key=lambda uv: (uv[0].sort_key(), uv[1].sort_key()))
    return [{"left": str(u), "right": str(v), "coefficient": str(t[u, v])} for u, v in keys]
