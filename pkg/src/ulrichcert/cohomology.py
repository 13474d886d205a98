"""Effectivity checks through node points and assembly of the full
certificate for the candidate Ulrich class.

Effectivity on the surface is decided only for the two class shapes the
certificate needs, through the quartic model in P^3:

* ``2H - M = L - (four nodes)``: sections are hyperplanes through the four
  node points, so the class is effective iff such a hyperplane exists.
* ``M - H`` via its double ``2(M - H) = 2L + (four nodes) - (twelve
  nodes)``: twisting away the four disjoint exceptional curves leaves
  quadrics through the twelve points. A value of zero proves the double,
  hence the class, non-effective; a positive value blocks certification.

Arbitrary classes are rejected loudly as unsupported. The certificate chain
is: node verification, numerical conditions, even-eight shape detection,
involution invariance, then the two effectivity values; the verdict is
``certified`` only if every step passes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
import datetime
import hashlib
import json
import os
import tempfile

from .enriques import DescentInference, EnriquesClass, chi_enriques, halve, ulrich_transfer
from .kummer import Genus2Curve, NodeVerification, all_node_points, verify_sixteen_nodes
from .labels import NODE_LABELS, node_token, parse_node_token
from .linalg import kernel_basis
from .picard import (BundleRecipe, EvenEightTester, HALF_EVEN_EIGHT, Involution,
                     PolarizedSurfaceParams, build_theta_star, chi_k3,
                     is_invariant, pairing, polarization)
from .polynomials import Poly, format_polynomial, monomial_basis

TOOL_NAME = "ulrichcert"
TOOL_VERSION = "0.1.0"
CERTIFICATE_FORMAT = "ulrich-certificate/1"
REPORT_FORMAT = "enriques-report/1"


class UnsupportedShapeError(ValueError):
    """The divisor class is outside the decidable certificate shapes."""


class UncertifiedCertificateError(Exception):
    """An operation required a certified certificate."""


class CertificateIntegrityError(Exception):
    """A serialized certificate failed its digest check."""


# ---------------------------------------------------------------------------
# Linear conditions through points
# ---------------------------------------------------------------------------

def evaluation_matrix(d: int, points):
    """Rows indexed by points, columns by the degree-d monomial basis."""
    if not points:
        return [], monomial_basis(d, 4)
    domain = points[0].domain
    mons = monomial_basis(d, 4)
    rows = []
    for pt in points:
        if pt.domain != domain:
            raise ValueError("points live in different scalar domains")
        coords = pt.coordinates
        row = []
        for mon in mons:
            val = domain.one
            for x, e in zip(coords, mon):
                for _ in range(e):
                    val = domain.mul(val, x)
            row.append(val)
        rows.append(row)
    return rows, mons


def h0_forms_through_points(d: int, points, domain=None) -> int:
    """Dimension of degree-d forms in four variables vanishing at the points."""
    points = list(points)
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    rows, mons = evaluation_matrix(d, points)
    if not rows:
        return len(mons)
    dom = domain or points[0].domain
    return len(kernel_basis(rows, len(mons), dom))


def section_basis(d: int, points, ring) -> list:
    """Polynomials spanning the degree-d forms through the points."""
    points = list(points)
    if len(set(points)) != len(points):
        raise ValueError("points must be pairwise distinct")
    rows, mons = evaluation_matrix(d, points)
    dom = ring.domain
    vectors = (kernel_basis(rows, len(mons), dom) if rows
               else [[dom.one if i == j else dom.zero for i in range(len(mons))]
                     for j in range(len(mons))])
    return [ring.poly({m: c for m, c in zip(mons, vec) if not dom.is_zero(c)})
            for vec in vectors]


# ---------------------------------------------------------------------------
# The two decidable effectivity shapes
# ---------------------------------------------------------------------------

@dataclass
class EffectivityValue:
    name: str
    degree: int
    labels: tuple
    h0: int
    witness: str | None
    passed: bool
    inferences: tuple
    interpretation: str


def _node_support(d, expected_coeff):
    labels = []
    for label in NODE_LABELS:
        c = d.coeff_node(label)
        if c == expected_coeff:
            labels.append(label)
        elif c != 0:
            return None
    return tuple(labels)


def check_two_h_minus_m(h, m, points_by_label, ring) -> EffectivityValue:
    """Hyperplane test: 2H - M must reduce to L minus four node classes."""
    d = 2 * h - m
    labels = _node_support(d, Fraction(-1))
    if d.coeff_l != 1 or labels is None or len(labels) != 4:
        raise UnsupportedShapeError(
            "2H - M does not have the shape L minus four distinct nodes")
    points = [points_by_label[l] for l in labels]
    sections = section_basis(1, points, ring)
    h0 = len(sections)
    witness = format_polynomial(sections[0]) if sections else None
    return EffectivityValue(
        name="no-hyperplane-through-four-nodes",
        degree=1, labels=labels, h0=h0, witness=witness, passed=h0 == 0,
        inferences=("sections-through-nodes", "finite-field-model"),
        interpretation=("2H - M is not effective" if h0 == 0 else
                        "a hyperplane through the four nodes exists; 2H - M is effective"))


def check_m_minus_h(h, m, points_by_label, ring) -> EffectivityValue:
    """Quadric test on the double: 2(M - H) + (four nodes) = 2L - (twelve nodes)."""
    dd = 2 * (m - h)
    twelve = _node_support_signed(dd, Fraction(-1))
    four = _node_support_signed(dd, Fraction(1))
    if (dd.coeff_l != 2 or twelve is None or four is None
            or len(twelve) != 12 or len(four) != 4
            or set(twelve) | set(four) != set(NODE_LABELS)):
        raise UnsupportedShapeError(
            "2(M - H) does not have the shape 2L + four nodes - twelve nodes")
    points = [points_by_label[l] for l in twelve]
    sections = section_basis(2, points, ring)
    h0 = len(sections)
    witness = format_polynomial(sections[0]) if sections else None
    return EffectivityValue(
        name="no-quadric-through-twelve-nodes",
        degree=2, labels=twelve, h0=h0, witness=witness, passed=h0 == 0,
        inferences=("doubling", "exceptional-twist", "sections-through-nodes",
                    "finite-field-model"),
        interpretation=("M - H is not effective (its double has no sections)" if h0 == 0
                        else "the double of M - H is effective; certification fails"))


def _node_support_signed(d, coeff):
    labels = []
    for label in NODE_LABELS:
        c = d.coeff_node(label)
        if c == coeff:
            labels.append(label)
        elif c != 0 and c != -coeff:
            return None
    return tuple(labels)


# ---------------------------------------------------------------------------
# Certificate assembly
# ---------------------------------------------------------------------------

@dataclass
class CheckRecord:
    name: str
    justification: str
    inputs: dict
    value: object
    passed: bool


@dataclass
class UlrichCertificate:
    prime: int | None
    roots: tuple
    quartic_text: str
    recipe: BundleRecipe
    s: int
    node_summary: dict
    checks: list = field(default_factory=list)
    verdict: str = "refuted"
    refutation_reason: str | None = None
    refutation_witness: dict | None = None

    def check(self, name: str) -> CheckRecord:
        for record in self.checks:
            if record.name == name:
                return record
        raise KeyError(name)


REASON_NODES = "nodes"
REASON_NUMERICAL = "numerical"
REASON_EVEN_EIGHT = "even-eight"
REASON_INVARIANCE = "invariance"
REASON_EFFECTIVITY = "effectivity"


def certify_ulrich(curve: Genus2Curve, quartic: Poly,
                   recipe: BundleRecipe | None = None,
                   params: PolarizedSurfaceParams | None = None,
                   node_report: NodeVerification | None = None,
                   theta: Involution | None = None) -> UlrichCertificate:
    """Run the full certification chain for the candidate class.

    Chain order: node verification, numerical conditions, even-eight shape
    detection (which refutes without geometry when it applies), involution
    invariance, then the two effectivity values. The verdict is
    ``certified`` iff every step passes.
    """
    recipe = recipe or BundleRecipe()
    params = params or PolarizedSurfaceParams()
    if recipe.kind == HALF_EVEN_EIGHT and not EvenEightTester().test(recipe.labels):
        raise UnsupportedShapeError(
            "the eight recipe nodes are not an even eight, so the candidate "
            "is not an integral class")
    domain = quartic.ring.domain
    prime = getattr(domain, "p", None)

    if node_report is None:
        node_report = verify_sixteen_nodes(quartic, curve)
    cert = UlrichCertificate(
        prime=prime,
        roots=tuple(str(r) for r in curve.roots),
        quartic_text=format_polynomial(quartic),
        recipe=recipe,
        s=params.s,
        node_summary={
            "passed": node_report.passed,
            "distinct": node_report.distinct,
            "codim": node_report.codim,
            "degree": node_report.degree,
        })
    cert.checks.append(CheckRecord(
        name="sixteen-nodes",
        justification="lattice-arithmetic",
        inputs={"roots": cert.roots, "prime": prime},
        value={"codim": node_report.codim, "degree": node_report.degree},
        passed=node_report.passed))
    if not node_report.passed:
        cert.refutation_reason = REASON_NODES
        cert.refutation_witness = {"first_failure": repr(node_report.first_failure)}
        return cert

    h = polarization()
    m = recipe.divisor()
    s = params.s
    recipe_inputs = {"kind": recipe.kind, "labels": list(recipe.tokens())}

    numerical = [
        ("polarization-square", pairing(h, h), 2 * s),
        ("candidate-dot-polarization", pairing(h, m), 3 * s),
        ("candidate-square", pairing(m, m), 4 * s - 4),
        ("chi-m-minus-h", chi_k3(m - h), 0),
        ("chi-m-minus-2h", chi_k3(m - 2 * h), 0),
    ]
    numerics_ok = True
    for name, got, expected in numerical:
        ok = got == expected
        numerics_ok = numerics_ok and ok
        cert.checks.append(CheckRecord(
            name=name,
            justification="riemann-roch-k3" if name.startswith("chi") else "lattice-arithmetic",
            inputs=recipe_inputs, value=str(got), passed=ok))
    if not numerics_ok:
        cert.refutation_reason = REASON_NUMERICAL
        return cert

    # Even-eight shape: M - H = half the sum of eight nodes.
    difference = m - h
    if difference.coeff_l == 0:
        halves = [l for l in NODE_LABELS if difference.coeff_node(l) == Fraction(1, 2)]
        clean = all(difference.coeff_node(l) in (0, Fraction(1, 2)) for l in NODE_LABELS)
        if clean and len(halves) == 8:
            tester = EvenEightTester()
            divisible = tester.test(halves)
            cert.checks.append(CheckRecord(
                name="even-eight-detection",
                justification="even-eight-complement",
                inputs={"labels": [node_token(l) for l in halves]},
                value={"divisible_by_two": divisible},
                passed=not divisible))
            if divisible:
                cert.refutation_reason = REASON_EVEN_EIGHT
                cert.refutation_witness = {
                    "labels": [node_token(l) for l in halves],
                    "reason": "effective by even-eight criterion",
                }
                return cert

    theta = theta or build_theta_star()
    invariance_ok = True
    for name, cls in (("involution-fixes-polarization", h),
                      ("involution-fixes-candidate", m)):
        ok = is_invariant(theta, cls)
        invariance_ok = invariance_ok and ok
        cert.checks.append(CheckRecord(
            name=name, justification="invariant-lattice-descent",
            inputs=recipe_inputs, value=ok, passed=ok))
    if not invariance_ok:
        cert.refutation_reason = REASON_INVARIANCE
        return cert

    points = all_node_points(curve, domain)
    effectivity_ok = True
    witness = None
    for checker in (check_two_h_minus_m, check_m_minus_h):
        outcome = checker(h, m, points, quartic.ring)
        cert.checks.append(CheckRecord(
            name=outcome.name,
            justification="+".join(outcome.inferences),
            inputs={"degree": outcome.degree,
                    "labels": [node_token(l) for l in outcome.labels]},
            value={"h0": outcome.h0, "witness": outcome.witness},
            passed=outcome.passed))
        if not outcome.passed:
            effectivity_ok = False
            witness = witness or {"check": outcome.name, "h0": outcome.h0,
                                  "witness": outcome.witness,
                                  "interpretation": outcome.interpretation}
    if not effectivity_ok:
        cert.refutation_reason = REASON_EFFECTIVITY
        cert.refutation_witness = witness
        return cert

    cert.verdict = "certified"
    return cert


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------

def _canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(obj) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


def certificate_body(cert: UlrichCertificate) -> dict:
    """The deterministic part of the serialized certificate."""
    return {
        "surface": {
            "prime": cert.prime,
            "roots": list(cert.roots),
            "quartic": cert.quartic_text,
            "quartic_digest": _digest(cert.quartic_text)[:16],
        },
        "recipe": {"kind": cert.recipe.kind, "labels": list(cert.recipe.tokens())},
        "parameters": {"s": cert.s},
        "nodes": dict(cert.node_summary),
        "checks": [
            {
                "name": r.name,
                "justification": r.justification,
                "inputs_digest": _digest(r.inputs)[:16],
                "value": r.value,
                "pass": r.passed,
            }
            for r in cert.checks
        ],
        "verdict": cert.verdict,
        "refutation": (
            None if cert.refutation_reason is None else
            {"reason": cert.refutation_reason, "witness": cert.refutation_witness}),
    }


def certificate_document(cert: UlrichCertificate) -> dict:
    body = certificate_body(cert)
    return {
        "format": CERTIFICATE_FORMAT,
        "header": {
            "created": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            "tool": f"{TOOL_NAME} {TOOL_VERSION}",
        },
        "body": body,
        "digest": _digest(body),
    }


def write_json_atomic(path, document: dict):
    """Serialize to a temp file in the target directory and rename over."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(document, handle, indent=2)
            handle.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def write_certificate(path, cert: UlrichCertificate) -> dict:
    document = certificate_document(cert)
    write_json_atomic(path, document)
    return document


def load_certificate_document(path) -> dict:
    with open(path) as handle:
        document = json.load(handle)
    if document.get("format") != CERTIFICATE_FORMAT:
        raise CertificateIntegrityError(f"unexpected format {document.get('format')!r}")
    body = document.get("body")
    if body is None or _digest(body) != document.get("digest"):
        raise CertificateIntegrityError("certificate digest mismatch")
    return document


# ---------------------------------------------------------------------------
# Descent to the quotient surface
# ---------------------------------------------------------------------------

@dataclass
class EnriquesReport:
    classes: tuple
    chi_polarization: int
    h0_polarization: int
    plane_cover_degree: int
    halving: tuple
    inferences: tuple
    conclusion: str


def descend_to_enriques(cert: UlrichCertificate) -> EnriquesReport:
    """Transfer a certified cover-side certificate down the double cover."""
    if cert.verdict != "certified":
        raise UncertifiedCertificateError(
            f"certificate verdict is {cert.verdict!r}; descent needs a certified run")
    for name in ("involution-fixes-polarization", "involution-fixes-candidate"):
        if not cert.check(name).passed:
            raise UncertifiedCertificateError(f"missing invariance: {name}")
    h = polarization()
    m = cert.recipe.divisor()
    return _descent_report(int(pairing(h, h)), int(pairing(m, h)), int(pairing(m, m)))


def _descent_report(h_square: int, m_dot_h: int, m_square: int) -> EnriquesReport:
    hy2 = halve(h_square)
    n_dot_h = halve(m_dot_h)
    n2 = halve(m_square)
    classes = (
        EnriquesClass("H_Y", hy2, hy2),
        EnriquesClass("N", n2, n_dot_h),
        EnriquesClass("N+K_Y", n2, n_dot_h),
    )
    chi_h = chi_enriques(hy2)
    inferences = tuple(ulrich_transfer(True, True)) + (
        DescentInference(
            premise=f"chi(H_Y) = 1 + {hy2}/2 = {chi_h} and H_Y is ample and globally generated",
            conclusion=f"h0(H_Y) = {chi_h}, so the polarization maps the surface "
                       f"{hy2}:1 onto the plane",
            justification="ample-no-higher-cohomology"),
    )
    return EnriquesReport(
        classes=classes,
        chi_polarization=chi_h,
        h0_polarization=chi_h,
        plane_cover_degree=hy2,
        halving=(("H.H", h_square, hy2), ("M.H", m_dot_h, n_dot_h),
                 ("M.M", m_square, n2)),
        inferences=inferences,
        conclusion="N and N+K_Y are Ulrich line bundles for H_Y",
    )


def descend_from_document(document: dict) -> EnriquesReport:
    """Descent driven by a loaded certificate document."""
    body = document["body"]
    if body.get("verdict") != "certified":
        raise UncertifiedCertificateError(
            f"certificate verdict is {body.get('verdict')!r}")
    recipe = BundleRecipe(
        kind=body["recipe"]["kind"],
        labels=tuple(parse_node_token(t) for t in body["recipe"]["labels"]))
    h = polarization()
    m = recipe.divisor()
    return _descent_report(int(pairing(h, h)), int(pairing(m, h)), int(pairing(m, m)))


def report_document(report: EnriquesReport, certificate_digest: str | None = None) -> dict:
    body = {
        "certificate_digest": certificate_digest,
        "classes": [
            {"name": c.name, "self_intersection": c.self_intersection,
             "dot_with_polarization": c.dot_with_h}
            for c in report.classes
        ],
        "chi_polarization": report.chi_polarization,
        "h0_polarization": report.h0_polarization,
        "plane_cover_degree": report.plane_cover_degree,
        "halving": [list(entry) for entry in report.halving],
        "inferences": [
            {"premise": inf.premise, "conclusion": inf.conclusion,
             "justification": inf.justification}
            for inf in report.inferences
        ],
        "conclusion": report.conclusion,
    }
    return {
        "format": REPORT_FORMAT,
        "header": {
            "created": datetime.datetime.now(datetime.timezone.utc).isoformat(),
            "tool": f"{TOOL_NAME} {TOOL_VERSION}",
        },
        "body": body,
        "digest": _digest(body),
    }
