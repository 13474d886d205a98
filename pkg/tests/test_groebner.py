import itertools
import random

import pytest

from ulrichcert.cohomology import section_basis
from ulrichcert.fields import PrimeField
from ulrichcert.groebner import (buchberger, hilbert_degree_codim,
                                 ideal_membership, normal_form, s_polynomial)
from ulrichcert.kummer import all_node_points
from ulrichcert.linalg import rank
from ulrichcert.polynomials import PolyRing, monomial_basis, partial_derivatives

GF = PrimeField(32003)
R2 = PolyRing(("x", "y"), GF)
R4 = PolyRing(("X", "Y", "Z", "W"), GF)

X2Y2 = R2.poly({(2, 0): 1, (0, 2): 1})
XY = R2.poly({(1, 1): 1})


def test_normal_form_membership():
    x = R2.variable(0)
    xsq = R2.poly({(2, 0): 1})
    assert normal_form(xsq, [x]).is_zero()


def test_normal_form_no_reduction():
    x, y = R2.variable(0), R2.variable(1)
    assert normal_form(y, [x]) == y


def test_normal_form_of_generator_is_zero():
    gb = buchberger([X2Y2, XY])
    assert normal_form(X2Y2, gb).is_zero()


def test_buchberger_principal_ideal():
    x = R2.variable(0)
    gb = buchberger([x])
    assert gb.generators == (x,)


def test_buchberger_adds_y_cubed():
    gb = buchberger([X2Y2, XY])
    y3 = R2.poly({(0, 3): 1})
    assert y3 in gb.generators
    assert set(gb.leading_monomials()) == {(2, 0), (1, 1), (0, 3)}
    # s-pair that produced it
    assert normal_form(s_polynomial(X2Y2, XY), [X2Y2, XY]) == y3


def test_reduced_basis_unique_under_generator_order():
    gens = [X2Y2, XY]
    expected = buchberger(gens).generators
    for perm in itertools.permutations(gens):
        assert buchberger(list(perm)).generators == expected


def test_ideal_membership_examples():
    x, y = R2.variable(0), R2.variable(1)
    assert ideal_membership(x * y, [x])
    assert not ideal_membership(y, [x])


def test_quartic_in_its_singular_ideal(quartic):
    gens = [quartic] + partial_derivatives(quartic)
    assert ideal_membership(quartic, gens)


def test_hilbert_hyperplane():
    gb = buchberger([R4.variable(0)])
    assert hilbert_degree_codim(gb) == (1, 1)


def test_hilbert_x2_y():
    gb = buchberger([R4.poly({(2, 0, 0, 0): 1}), R4.variable(1)])
    assert hilbert_degree_codim(gb) == (2, 2)


def test_hilbert_requires_homogeneous():
    inhom = R4.poly({(1, 0, 0, 0): 1, (0, 0, 0, 0): 1})
    gb = buchberger([inhom])
    with pytest.raises(ValueError):
        hilbert_degree_codim(gb)


def test_singular_locus_codim_and_degree(quartic):
    gens = [quartic] + partial_derivatives(quartic)
    gb = buchberger(gens)
    assert hilbert_degree_codim(gb) == (3, 16)


def test_vanishing_ideal_of_node_subsets(gf, curve):
    """Point sets cut out by degree slices have codim 3 and degree k.

    The slice degree must be at least the regularity of the point set; the
    six nodes on a trope plane lie on a conic, which pushes it up.
    """
    points = all_node_points(curve, gf)
    labels = list(points)
    rng = random.Random(7)
    cases = [
        (labels[:1], 1),
        (labels[:2], 2),
        (rng.sample(labels, 3), 2),
        (rng.sample(labels, 5), 3),
        ([(0,), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6)], 4),
    ]
    for subset, slice_degree in cases:
        k = len(subset)
        pts = [points[lab] for lab in subset]
        gens = section_basis(slice_degree, pts, R4)
        gb = buchberger(gens)
        assert hilbert_degree_codim(gb) == (3, k)


# ---------------------------------------------------------------------------
# randomized property suites
# ---------------------------------------------------------------------------

def random_poly(rng, ring, max_degree, homogeneous_degree=None, max_terms=4):
    terms = {}
    nv = ring.nvars
    for _ in range(rng.randint(1, max_terms)):
        if homogeneous_degree is None:
            exps = [rng.randint(0, max_degree) for _ in range(nv)]
            while sum(exps) > max_degree:
                exps[rng.randrange(nv)] = 0
        else:
            exps = [0] * nv
            for _ in range(homogeneous_degree):
                exps[rng.randrange(nv)] += 1
        terms[tuple(exps)] = rng.randint(1, 32002)
    return ring.poly(terms)


def test_buchberger_criterion_post_hoc():
    """Every S-polynomial of a returned basis reduces to zero against it."""
    rng = random.Random(2024)
    for _ in range(40):
        gens = [random_poly(rng, R2, 3) for _ in range(rng.randint(2, 3))]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = buchberger(gens)
        for f, g in itertools.combinations(gb.generators, 2):
            assert normal_form(s_polynomial(f, g), gb).is_zero()


def test_degree_slice_equivalence():
    """normalForm(f) == 0 iff f lies in the degree-d span of generator multiples."""
    rng = random.Random(9)
    for _ in range(12):
        gens = [random_poly(rng, R4, 0, homogeneous_degree=rng.randint(1, 2))
                for _ in range(2)]
        gb = buchberger(gens)
        for d in range(1, 5):
            mons_d = monomial_basis(d, 4)
            index = {m: i for i, m in enumerate(mons_d)}
            span_rows = []
            for g in gens:
                gdeg = g.total_degree()
                if gdeg > d:
                    continue
                for m in monomial_basis(d - gdeg, 4):
                    shifted = g * R4.poly({m: 1})
                    row = [0] * len(mons_d)
                    for mon, c in shifted.terms.items():
                        row[index[mon]] = c
                    span_rows.append(row)
            base_rank = rank(span_rows, len(mons_d), GF) if span_rows else 0
            for _ in range(5):
                f = random_poly(rng, R4, 0, homogeneous_degree=d)
                row = [0] * len(mons_d)
                for mon, c in f.terms.items():
                    row[index[mon]] = c
                in_span = rank(span_rows + [row], len(mons_d), GF) == base_rank \
                    if span_rows else all(v == 0 for v in row)
                assert in_span == normal_form(f, gb).is_zero()
