from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ulrichcert.fields import QQ, PrimeField
from ulrichcert.kummer import (Genus2Curve, all_node_points, load_corpus_quartic,
                               node_point, parse_quartic, sextic_coefficients,
                               verify_node, verify_sixteen_nodes)
from ulrichcert.labels import NODE_LABELS
from ulrichcert.polynomials import ProjectivePoint

# all sixteen node coordinates of the reference curve, by label
EXPECTED_NODES = {
    (0,): (0, 0, 0, 1),
    (1, 2): (1, 0, -1, -50),
    (1, 3): (1, 3, 2, 28),
    (1, 4): (1, -1, -2, -44),
    (1, 5): (1, 4, 3, 6),
    (1, 6): (1, -2, -3, -42),
    (2, 3): (1, 1, -2, -44),
    (2, 4): (1, -3, 2, 28),
    (2, 5): (1, 2, -3, -42),
    (2, 6): (1, -4, 3, 6),
    (3, 4): (1, 0, -4, -65),
    (3, 5): (1, 5, 6, -60),
    (3, 6): (1, -1, -6, -84),
    (4, 5): (1, 1, -6, -84),
    (4, 6): (1, -5, 6, -60),
    (5, 6): (1, 0, -9, -130),
}


def test_sextic_coefficients_of_reference_curve(curve):
    assert sextic_coefficients(curve) == (-36, 0, 49, 0, -14, 0, 1)


def test_sextic_is_monic():
    c = Genus2Curve((5, 7, -1, 2, 9, -4))
    assert sextic_coefficients(c)[6] == 1


def test_sextic_constant_term_vanishes_with_zero_root():
    c = Genus2Curve((0, 1, 2, 3, 4, 5))
    assert sextic_coefficients(c)[0] == 0


def test_repeated_roots_rejected():
    with pytest.raises(ValueError):
        Genus2Curve((1, 1, 2, 3, 4, 5))
    with pytest.raises(ValueError):
        Genus2Curve((1, 2, 3))


def test_published_node_coordinates(curve):
    assert node_point(curve, (2, 3)).coordinates == (1, 1, -2, -44)
    assert node_point(curve, (2, 5)).coordinates == (1, 2, -3, -42)
    assert node_point(curve, (3, 4)).coordinates == (1, 0, -4, -65)
    assert node_point(curve, (4, 5)).coordinates == (1, 1, -6, -84)
    assert node_point(curve, (0,)).coordinates == (0, 0, 0, 1)


def test_all_sixteen_node_coordinates(curve):
    points = all_node_points(curve, QQ)
    assert {lab: pt.coordinates for lab, pt in points.items()} == {
        lab: tuple(Fraction(c) for c in coords)
        for lab, coords in EXPECTED_NODES.items()}


def test_node_label_order_symmetry(curve):
    assert node_point(curve, (3, 2)) == node_point(curve, (2, 3))


def test_invalid_label_rejected(curve):
    with pytest.raises(ValueError):
        node_point(curve, (1, 7))
    with pytest.raises(ValueError):
        node_point(curve, (2, 2))


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_node_coordinate_symmetric_in_roots(u, v):
    """The last coordinate formula is symmetric in the two branch roots."""
    if u == v:
        v = u + 1
    pool = [u, v] + [x for x in range(50, 60)]
    c1 = Genus2Curve(tuple(pool[:6]))
    c2 = Genus2Curve((v, u) + tuple(pool[2:6]))
    assert node_point(c1, (1, 2)) == node_point(c2, (1, 2))


def test_mod_p_points_match_rational_reduction(curve, gf):
    """In-field computation agrees with reducing the rational point mod p."""
    p = gf.p
    for label in NODE_LABELS:
        rational = node_point(curve, label, QQ)
        reduced = ProjectivePoint(gf, [gf.coerce(c) for c in rational.coordinates])
        assert node_point(curve, label, gf) == reduced


def test_verify_node_examples(quartic, curve, gf):
    assert verify_node(quartic, node_point(curve, (2, 3), gf))
    assert not verify_node(quartic, ProjectivePoint(gf, (1, 0, 0, 0)))
    double_plane = parse_quartic("X^2", gf)
    assert verify_node(double_plane, ProjectivePoint(gf, (0, 1, 0, 0)))


def test_sixteen_nodes_pass(quartic, curve):
    report = verify_sixteen_nodes(quartic, curve)
    assert report.passed
    assert report.distinct
    assert all(report.node_results.values())
    assert (report.codim, report.degree) == (3, 16)


def test_perturbed_quartic_fails(curve, gf):
    perturbed = parse_quartic("X^4", gf) + load_corpus_quartic(gf)
    report = verify_sixteen_nodes(perturbed, curve, include_dimension_check=False)
    assert not report.passed
    assert not all(report.node_results.values())


def test_smooth_fermat_quartic_fails(curve, gf):
    fermat = parse_quartic("X^4+Y^4+Z^4+W^4", gf)
    report = verify_sixteen_nodes(fermat, curve)
    assert not report.passed
    assert report.codim == 4  # singular ideal is irrelevant: no nodes at all


def test_nodes_distinct_mod_seven(curve):
    """The sixteen nodes stay distinct after reduction mod 7."""
    gf7 = PrimeField(7)
    points = list(all_node_points(curve, gf7).values())
    assert len(set(points)) == 16


def test_corpus_quartic_over_rationals_is_singular_at_nodes(curve):
    quartic_q = load_corpus_quartic(QQ)
    for label in NODE_LABELS:
        assert verify_node(quartic_q, node_point(curve, label, QQ))


def test_corpus_directory_override(tmp_path, monkeypatch, gf):
    (tmp_path / "kummer_quartic.txt").write_text("X^4+Y^4\n")
    monkeypatch.setenv("ULRICHCERT_CORPUS", str(tmp_path))
    assert len(load_corpus_quartic(gf).terms) == 2
    with pytest.raises(FileNotFoundError):
        load_corpus_quartic(gf, name="missing")
