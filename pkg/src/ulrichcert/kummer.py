"""Genus-2 curve data and the sixteen nodes of its Kummer quartic.

For a curve y^2 = prod (x - s_j) with six distinct Weierstrass roots, the
image of the two-torsion class {i, j} on the classical quartic model in P^3
has coordinates

    (1 : s_i + s_j : s_i s_j : F0(s_i, s_j) / (s_i - s_j)^2)

with F0(u, v) = 2 f0 + f1 (u+v) + 2 f2 uv + f3 uv (u+v) + 2 f4 (uv)^2
+ f5 (uv)^2 (u+v) + 2 f6 (uv)^3 built from the sextic coefficients, and the
origin class maps to (0:0:0:1). The quartic itself is supplied as input (a
corpus file by default); it is cross-validated, never derived: every
formula-produced point must be a singular point of the quartic, the sixteen
points must be pairwise distinct, and the singular locus must have
codimension 3 and degree 16.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import corpus
from .fields import QQ, PrimeField
from .groebner import buchberger, hilbert_degree_codim
from .labels import NODE_LABELS, node_token, validate_node_label
from .polynomials import Poly, PolyRing, ProjectivePoint, parse_polynomial, partial_derivatives

QUARTIC_VARIABLES = ("X", "Y", "Z", "W")
DEFAULT_ROOTS = (1, -1, 2, -2, 3, -3)
DEFAULT_PRIME = 32003


@dataclass(frozen=True)
class Genus2Curve:
    """Six distinct Weierstrass x-coordinates, kept as exact rationals."""

    roots: tuple

    def __post_init__(self):
        roots = tuple(Fraction(r) for r in self.roots)
        object.__setattr__(self, "roots", roots)
        if len(roots) != 6:
            raise ValueError("exactly six Weierstrass roots are required")
        if len(set(roots)) != 6:
            raise ValueError("Weierstrass roots must be pairwise distinct")


def sextic_coefficients(curve: Genus2Curve):
    """Coefficients (f0, ..., f6) of the monic sextic prod (x - s_j)."""
    coeffs = [Fraction(1)]
    for s in curve.roots:
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            nxt[k + 1] += c
            nxt[k] -= s * c
        coeffs = nxt
    return tuple(coeffs)


def _f0_bilinear(coeffs, u, v):
    uv = u * v
    return (2 * coeffs[0] + coeffs[1] * (u + v) + 2 * coeffs[2] * uv
            + coeffs[3] * uv * (u + v) + 2 * coeffs[4] * uv ** 2
            + coeffs[5] * uv ** 2 * (u + v) + 2 * coeffs[6] * uv ** 3)


def node_point(curve: Genus2Curve, label, domain=QQ) -> ProjectivePoint:
    """Coordinates in P^3 of the node with the given two-torsion label."""
    label = validate_node_label(label)
    if label == (0,):
        return ProjectivePoint(domain, (0, 0, 0, 1))
    i, j = label
    coeffs = sextic_coefficients(curve)
    u, v = curve.roots[i - 1], curve.roots[j - 1]
    w = Fraction(_f0_bilinear(coeffs, u, v), 1) / (u - v) ** 2
    try:
        return ProjectivePoint(domain, (1, u + v, u * v, w))
    except ZeroDivisionError as exc:
        raise ValueError(f"curve degenerates in {domain!r}: {exc}") from exc


def all_node_points(curve: Genus2Curve, domain=QQ) -> dict:
    """All sixteen labelled node points, in label order."""
    return {label: node_point(curve, label, domain) for label in NODE_LABELS}


def quartic_ring(domain) -> PolyRing:
    return PolyRing(QUARTIC_VARIABLES, domain)


def load_corpus_quartic(domain, name: str = "kummer_quartic") -> Poly:
    """The reference Kummer quartic, parsed verbatim from the corpus."""
    return parse_polynomial(corpus.read_text(name), quartic_ring(domain))


def parse_quartic(text: str, domain) -> Poly:
    return parse_polynomial(text, quartic_ring(domain))


def verify_node(quartic: Poly, point: ProjectivePoint) -> bool:
    """True iff the quartic and all four partials vanish at the point."""
    dom = quartic.ring.domain
    if not dom.is_zero(quartic.evaluate(point)):
        return False
    return all(dom.is_zero(g.evaluate(point)) for g in partial_derivatives(quartic))


@dataclass
class NodeVerification:
    """Evidence bundle for the sixteen-nodes check."""

    passed: bool
    distinct: bool
    node_results: dict                 # label -> bool
    first_failure: object = None       # first failing label or colliding pair
    codim: int | None = None
    degree: int | None = None
    points: dict = field(default_factory=dict)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        dim = f", singular locus (codim, degree) = ({self.codim}, {self.degree})" \
            if self.codim is not None else ""
        return f"sixteen-nodes check: {status}{dim}"


def verify_sixteen_nodes(quartic: Poly, curve: Genus2Curve,
                         include_dimension_check: bool = True) -> NodeVerification:
    """Check the supplied quartic against the formula-produced nodes.

    (a) the sixteen points are pairwise distinct, (b) each is a singular
    point of the quartic, and optionally (c) the ideal of the quartic and
    its partials has codimension 3 and degree 16, which together force the
    reduced singular scheme to be exactly these sixteen points.
    """
    dom = quartic.ring.domain
    points = all_node_points(curve, dom)
    seen = {}
    first_failure = None
    distinct = True
    for label, pt in points.items():
        if pt in seen:
            distinct = False
            first_failure = (seen[pt], label)
            break
        seen[pt] = label
    node_results = {label: verify_node(quartic, pt) for label, pt in points.items()}
    all_singular = all(node_results.values())
    if first_failure is None and not all_singular:
        first_failure = next(lab for lab, ok in node_results.items() if not ok)
    codim = degree = None
    dims_ok = True
    if include_dimension_check:
        gens = [quartic] + partial_derivatives(quartic)
        gb = buchberger([g for g in gens if not g.is_zero()])
        codim, degree = hilbert_degree_codim(gb)
        dims_ok = (codim, degree) == (3, 16)
        if first_failure is None and not dims_ok:
            first_failure = ("dimension", codim, degree)
    passed = distinct and all_singular and dims_ok
    return NodeVerification(passed=passed, distinct=distinct,
                            node_results=node_results, first_failure=first_failure,
                            codim=codim, degree=degree, points=points)


def node_table(curve: Genus2Curve, domain) -> list:
    """Rows (token, coordinate strings) for the sixteen nodes."""
    rows = []
    for label, pt in all_node_points(curve, domain).items():
        rows.append((node_token(label), tuple(str(c) for c in pt.coordinates)))
    return rows


def default_curve() -> Genus2Curve:
    return Genus2Curve(DEFAULT_ROOTS)


def default_field() -> PrimeField:
    return PrimeField(DEFAULT_PRIME)
