"""
Acceptance criteria 1-13. Each test records one PASS/FAIL line, printed in
the terminal summary; run ``pytest tests/test_acceptance.py -v`` to see them.
"""

import random
from math import comb, gcd

import pytest

from spx.cohomring import (clifford_bound, cohomology_ring, lens_ring_check, macdonald_verify,
                           main_relation_check, nonorientable_verify, real_clifford_quotient, ring_presentation,
                           surface_generators)
from spx.diagonal import coproduct, coproduct_chain, coproduct_generator, counit_left, counit_right, tensor_boundary
from spx.exactlinalg import GF, QQ, ZZ, field_rank_kernel
from spx.homology import (HomologyGroup, dold_milgram_check, dold_thom_check, homology, splitting_check,
                          torsion_prime_check)
from spx.presentation import (bouquet, lens_attach, named_complex, nonorientable_surface, orientable_surface,
                              sphere, sphere_two_cells)
from spx.spchain import (SPMonomial, boundary, boundary_chain, boundary_matrix, circle, divided_power,
                         enumerate_basis, multiply, multiply_chains)

from conftest import NAMED, RANDOM, record_acceptance


def verdict(number: int, failures: list, what: str):
    line = f"criterion {number}: {'PASS' if not failures else 'FAIL'}  {what}"
    if failures:
        line += f"  ({len(failures)} failing, first: {failures[0]})"
    record_acceptance(line)
    print(line)
    assert not failures, "\n".join(map(str, failures[:20]))


def projective_space(n):
    return [HomologyGroup(d, 1 - d % 2) for d in range(2 * n + 1)]


def test_criterion_01_complex_projective_space():
    failures = []
    for n in range(0, 7):
        h = homology(sphere(), n, ZZ)
        if h != projective_space(n):
            failures.append(f"n={n}: {[str(g) for g in h]}")
    verdict(1, failures, "SP^n S^2 has the homology of CP^n, n <= 6")


def test_criterion_02_two_cell_sphere():
    p = sphere_two_cells()
    failures = []
    for n in range(0, 6):
        if homology(p, n, ZZ) != projective_space(n):
            failures.append(f"n={n}: homology differs from CP^n")
        if n == 0:
            continue
        cycle = {}
        for s in range(n + 1):
            cycle.update(multiply(divided_power(1, s), divided_power(2, n - s)))
        if boundary_chain(cycle, p):
            failures.append(f"n={n}: sum SP^s D1 * SP^t D2 is not a cycle")
            continue
        # top degree: no boundaries, so H_2n = ker d is a lattice; a primitive vector on its line generates it
        cells = enumerate_basis(p, n, 2 * n)
        ker = field_rank_kernel(boundary_matrix(p, n, 2 * n, QQ)).kernel
        vec = [cycle.get(c, 0) for c in cells]
        line = [ker[0].get(i, 0) for i in range(len(cells))] if len(ker) == 1 else None
        proportional = line is not None and all(a * line[j] == b * line[i]
                                                for i, a in enumerate(vec) for j, b in enumerate(vec))
        g = 0
        for v in vec:
            g = gcd(g, v)
        if not proportional or g != 1:
            failures.append(f"n={n}: the cycle does not generate H_{2 * n}")
    verdict(2, failures, "two-cell sphere gives CP^n and the diagonal cycle generates H_2n, n <= 5")


def test_criterion_03_real_projective_space():
    p = nonorientable_surface(1)
    failures = []
    for n in range(0, 6):
        want = [HomologyGroup(0, 1)] + [HomologyGroup(d, 0, (2,) if d % 2 else ()) for d in range(1, 2 * n + 1)]
        if homology(p, n, ZZ) != want:
            failures.append(f"n={n}: homology")
        if n >= 1:
            mono = ring_presentation(p, n, GF(2), check=False).monogenic_height()
            if mono is None or mono[1] != 2 * n + 1:
                failures.append(f"n={n}: ring is not F2[f]/(f^{2 * n + 1}), got {mono}")
    verdict(3, failures, "SP^n RP^2 matches RP^2n in homology and F2 ring, n <= 5")


def test_criterion_04_bouquet():
    failures = []
    for k in range(1, 6):
        for n in range(0, 6):
            h = homology(bouquet(k), n, ZZ)
            want = [HomologyGroup(i, comb(k, i) if i <= n else 0) for i in range(2 * n + 1)]
            if h != want:
                failures.append(f"k={k} n={n}: {[str(g) for g in h]}")
    verdict(4, failures, "bouquet of k circles: free of rank C(k,i) in degree i <= n, k, n <= 5")


def test_criterion_05_macdonald():
    failures = []
    for g in (1, 2):
        for n in range(1, 5):
            rep = macdonald_verify(g, n, QQ)
            if not rep:
                failures.append(f"g={g} n={n}: {rep.failures[:3]}")
    verdict(5, failures, "MacDonald relations vanish and dimensions match the quotient, g <= 2, n <= 4")


def test_criterion_06_main_relation():
    failures = []
    for g in (1, 2):
        for n in range(1, 5):
            rep = main_relation_check(g, n, QQ)
            if not rep:
                failures.append(f"g={g} n={n}: {rep.failures[:3]}")
    verdict(6, failures, "f_i f_(i+g) - (e_i e_(i+g))* = b, g <= 2, n <= 4")


def test_criterion_07_nonorientable():
    failures = []
    for g in (1, 2, 3):
        for n in range(1, 5):
            rep = nonorientable_verify(g, n)
            if not rep:
                failures.append(f"g={g} n={n}: {rep.failures[:3]}")
    verdict(7, failures, "non-orientable F2 ring matches its presentation, g <= 3, n <= 4")


def test_criterion_08_lens():
    failures = []
    for m in (2, 3, 5):
        for n in range(1, 4):
            rep = lens_ring_check(m, n)
            if not rep:
                failures.append(f"m={m} n={n}: {rep.failures[:3]}")
    verdict(8, failures, "lens ring: one class per degree, f^2 = k b or 0, b^(n+1) = f b^n = 0, n <= 3")


def _display(g):
    e = lambda *ix: SPMonomial(tuple(sorted(ix)))
    eD = lambda *ix: SPMonomial(tuple(sorted(ix)), ((1, 1),))
    D, SP2, e1SP2 = divided_power(1), divided_power(1, 2), SPMonomial((1,), ((1, 2),))
    unit = SPMonomial()
    out = {(e1SP2, unit), (circle(1), SP2), (SP2, circle(1)), (unit, e1SP2), (eD(1), D), (D, eD(1))}
    for i in range(2, g + 1):
        out |= {(eD(1, i), circle(i)), (e(1, i), eD(i)), (eD(i), e(1, i)), (circle(i), eD(1, i))}
        for j in range(i + 1, g + 1):
            out |= {(e(1, i, j), e(i, j)), (e(i, j), e(1, i, j))}
    return out


def test_criterion_09_coproduct_fixtures():
    failures = []
    unit, D, SP2 = SPMonomial(), divided_power(1), divided_power(1, 2)
    eD = SPMonomial((1,), ((1, 1),))
    for k in (1, 2, 3):
        m = 2 * k
        got = {key: c % m for key, c in coproduct(SP2, lens_attach(m)).items() if c % m}
        want = {(SP2, unit): 1, (eD, circle(1)): k, (D, D): 1, (circle(1), eD): k, (unit, SP2): 1}
        want = {key: c % m for key, c in want.items() if c % m}
        if got != want:
            failures.append(f"lambda(SP^2 D) on S^1 u_{m} D^2 mod {m}: {got}")
    for g in (2, 3):
        got = coproduct(SPMonomial((1,), ((1, 2),)), nonorientable_surface(g), coeff=GF(2))
        if set(got) != _display(g) or any(c != 1 for c in got.values()):
            failures.append(f"lambda(e1 SP^2 D) mod 2, g={g}")
    for g in (1, 2):
        p = orientable_surface(g)
        for i in range(1, 2 * g + 1):
            for j in range(i + 1, 2 * g + 1):
                eij = SPMonomial((i, j))
                want = {(eij, unit): 1, (circle(i), circle(j)): 1, (circle(j), circle(i)): -1, (unit, eij): 1}
                if coproduct(eij, p) != want:
                    failures.append(f"lambda(e{i} e{j}) on genus {g}")
    for name in NAMED:
        p = named_complex(name)
        for j in range(1, p.cell_count + 1):
            for s in range(1, 5):
                try:
                    coproduct_generator(divided_power(j, s), p)
                except ArithmeticError as exc:
                    failures.append(f"{name}: {exc}")
    verdict(9, failures, "coproduct fixtures and exact s!-divisibility, s <= 4")


def test_criterion_10_clifford():
    failures = []
    for g in (1, 2, 3):
        for n in range(1, 7):
            got = clifford_bound(g, n)
            stated = min(n // 2, n - g) + 1
            if got != stated:
                failures.append(f"g={g} n={n}: index {got}, min(n//2, n-g)+1 = {stated}")
    for g in (1, 2, 3):
        for n in range(1, 6):
            rep = real_clifford_quotient(g, n)
            if not rep:
                failures.append(f"real g={g} n={n}: {rep.failures[0]}")
    verdict(10, failures, "nilpotency index of b equals min(n//2, n-g)+1; real quotient is F2[u]/(u^(2n-g+2))")


def test_criterion_11_dold_milgram():
    failures = []
    for name in NAMED:
        p = named_complex(name)
        for n in range(0, 5):
            rep = dold_milgram_check(p, n, ZZ)
            if not rep:
                failures.append(f"{name} n={n}: {rep.failures[:2]}")
    verdict(11, failures, "filtration blocks equal the Moore-piece tensor decomposition, n <= 4")


def test_criterion_12_dold_thom():
    failures = []
    for label, p in [(name, named_complex(name)) for name in NAMED] + [(f"random{i}", q) for i, q in enumerate(RANDOM)]:
        rep = dold_thom_check(p, 5)
        if not rep:
            failures.append(f"{label}: {rep.failures[:2]}")
    verdict(12, failures, "stable homology in degrees <= 5 (n = 6) equals the Dold-Thom prediction")


def _uct(hz, d, p):
    prev = hz[d - 1].p_torsion_count(p) if d else 0
    return hz[d].free_rank + hz[d].p_torsion_count(p) + prev


def _sign(d):
    return -1 if d % 2 else 1


def _chain_properties(p, n, failures, name):
    cells = enumerate_basis(p, n)
    for x in cells:
        bx = boundary(x, p)
        if boundary_chain(bx, p):
            failures.append(f"{name}: d^2 {x} != 0")
        if any(y.filtration != x.filtration for y in bx):
            failures.append(f"{name}: d changes filtration of {x}")
        lam = coproduct(x, p, n)
        if counit_left(lam) != {x: 1} or counit_right(lam) != {x: 1}:
            failures.append(f"{name}: counit fails on {x}")
        if coproduct_chain(bx, p) != tensor_boundary(coproduct(x, p), p):
            failures.append(f"{name}: lambda is not a chain map on {x}")
        left, right = {}, {}
        for (u, v), c in lam.items():
            for (a, b), c2 in coproduct(u, p).items():
                left[a, b, v] = left.get((a, b, v), 0) + c * c2
            for (a, b), c2 in coproduct(v, p).items():
                right[u, a, b] = right.get((u, a, b), 0) + c * c2
        if {k: c for k, c in left.items() if c} != {k: c for k, c in right.items() if c}:
            failures.append(f"{name}: coassociativity fails on {x}")
    for x in cells:
        for y in cells:
            if x.filtration + y.filtration > n:
                continue
            lhs = boundary_chain(multiply(x, y), p)
            rhs = multiply_chains(boundary(x, p), {y: 1})
            for m, c in multiply_chains({x: 1}, boundary(y, p)).items():
                rhs[m] = rhs.get(m, 0) + _sign(x.degree) * c
            if lhs != {m: c for m, c in rhs.items() if c}:
                failures.append(f"{name}: Leibniz fails on {x}, {y}")


def _ring_properties(p, n, field, failures, name, rng):
    pres = ring_presentation(p, n, field)
    if not pres.associative:
        failures.append(f"{name} {field}: cup not associative")
    if not pres.graded_commutative:
        failures.append(f"{name} {field}: cup not graded-commutative")
    ring = cohomology_ring(p, n, field)
    basis = ring.basis
    classes = ring.all_classes()
    for _ in range(40):
        a, b = rng.choice(classes), rng.choice(classes)
        d = a.degree + b.degree
        if d > ring.top:
            continue
        alpha, beta = ring.cochain_of(a), ring.cochain_of(b)
        for deg, co in ((a.degree, alpha), (b.degree, beta)):
            if deg == 0:
                continue
            gamma = {i: rng.randint(-2, 2) for i in range(len(basis.cells[deg - 1]))}
            for k, v in basis.coboundary(deg - 1, gamma).items():
                co[k] = field.reduce(co.get(k, 0) + v)
        if basis.project(d, ring.cup_cochains(a.degree, alpha, b.degree, beta)) != (a * b).coords:
            failures.append(f"{name} {field}: cup depends on representatives")


def test_criterion_13_property_suites():
    failures = []
    rng = random.Random(13)
    n = 4
    for name in NAMED:
        p = named_complex(name)
        _chain_properties(p, n, failures, name)
        for m in range(1, n + 1):
            if not splitting_check(p, m):
                failures.append(f"{name} n={m}: Steenrod splitting")
            if not torsion_prime_check(p, m):
                failures.append(f"{name} n={m}: torsion primes")
            hz = homology(p, m, ZZ)
            if [g.free_rank for g in homology(p, m, QQ)] != [g.free_rank for g in hz]:
                failures.append(f"{name} n={m}: rational ranks")
            for q in (2, 3):
                if [g.free_rank for g in homology(p, m, GF(q))] != [_uct(hz, d, q) for d in range(2 * m + 1)]:
                    failures.append(f"{name} n={m}: universal coefficients mod {q}")
        for field in (QQ, GF(2)):
            _ring_properties(p, n, field, failures, name, rng)
    for g in (1, 2):
        for m in range(1, n + 1):
            dims = cohomology_ring(orientable_surface(g), m, QQ).basis.dims
            if dims != dims[::-1]:
                failures.append(f"genus {g} n={m}: Poincare duality over Q")
            ring = cohomology_ring(orientable_surface(g), m, QQ)
            f, b = surface_generators(ring)
            if (b ** m).is_zero():
                failures.append(f"genus {g} n={m}: b^n vanishes")
    for g in (1, 2, 3):
        for m in range(1, n + 1):
            dims = cohomology_ring(nonorientable_surface(g), m, GF(2)).basis.dims
            if dims != dims[::-1]:
                failures.append(f"non-orientable genus {g} n={m}: Poincare duality over F2")
    verdict(13, failures, "chain, coproduct, splitting, torsion, UCT, cup and duality properties, n <= 4")


@pytest.mark.parametrize("seed", [0])
def test_random_presentations_are_mixed_torsion(seed):
    # the criterion 12 corpus really has both 2- and 3-torsion
    for p in RANDOM:
        assert homology(p, 1, ZZ)[1].torsion_primes() == {2, 3}
