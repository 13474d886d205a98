"""Command-line surface: nodes, certify, lattice subchecks, descend.

Exit codes are a stable contract:

    0  success / certified
    2  configuration error
    3  node verification failure
    4  numerical refutation
    5  invariance refutation
    6  even-eight refutation
    7  effectivity refutation
    8  descent input not certified (or missing)
    9  certificate integrity (digest) failure
    1  generic check failure in lattice subcommands

Reports are JSON documents with a detachable header (timestamp and tool
version); bodies are deterministic, so two runs on the same configuration
produce byte-identical bodies.
"""
from __future__ import annotations

import argparse
import configparser
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import cohomology, kummer, lattices, picard
from .fields import QQ, PrimeField
from .labels import node_token, parse_node_token, trope_token

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_NODES = 3
EXIT_NUMERICAL = 4
EXIT_INVARIANCE = 5
EXIT_EVEN_EIGHT = 6
EXIT_EFFECTIVITY = 7
EXIT_UNCERTIFIED = 8
EXIT_INTEGRITY = 9

_REASON_EXITS = {
    cohomology.REASON_NODES: EXIT_NODES,
    cohomology.REASON_NUMERICAL: EXIT_NUMERICAL,
    cohomology.REASON_INVARIANCE: EXIT_INVARIANCE,
    cohomology.REASON_EVEN_EIGHT: EXIT_EVEN_EIGHT,
    cohomology.REASON_EFFECTIVITY: EXIT_EFFECTIVITY,
}


@dataclass
class RunConfig:
    prime: int = kummer.DEFAULT_PRIME
    roots: tuple = kummer.DEFAULT_ROOTS
    quartic_source: str = "corpus:kummer_quartic"
    recipe_kind: str = picard.TWELVE_NODES
    recipe_labels: tuple = picard.DEFAULT_TWELVE
    out_path: str | None = None

    def curve(self) -> kummer.Genus2Curve:
        return kummer.Genus2Curve(self.roots)

    def domain(self) -> PrimeField:
        return PrimeField(self.prime)

    def quartic(self):
        kind, _, value = self.quartic_source.partition(":")
        if kind == "corpus":
            return kummer.load_corpus_quartic(self.domain(), value or "kummer_quartic")
        if kind == "inline":
            return kummer.parse_quartic(value, self.domain())
        raise ValueError(f"quartic source must be corpus:<name> or inline:<poly>, "
                         f"got {self.quartic_source!r}")

    def recipe(self) -> picard.BundleRecipe:
        recipe = picard.BundleRecipe(self.recipe_kind, self.recipe_labels)
        expected = 12 if recipe.kind == picard.TWELVE_NODES else 8
        if len(recipe.labels) != expected:
            raise ValueError(f"recipe kind {recipe.kind!r} needs exactly "
                             f"{expected} labels, got {len(recipe.labels)}")
        return recipe


def paper_default_config() -> RunConfig:
    return RunConfig()


def load_config(path: str) -> RunConfig:
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise ValueError(f"cannot read config file {path!r}")
    cfg = RunConfig()
    if parser.has_section("surface"):
        section = parser["surface"]
        if "prime" in section:
            cfg.prime = int(section["prime"])
        if "roots" in section:
            roots = tuple(Fraction(tok.strip()) for tok in section["roots"].split(","))
            cfg.roots = roots
        if "quartic" in section:
            cfg.quartic_source = section["quartic"].strip()
    if parser.has_section("bundle"):
        section = parser["bundle"]
        if "recipe" in section:
            cfg.recipe_kind = section["recipe"].strip()
        if "labels" in section:
            cfg.recipe_labels = tuple(
                parse_node_token(tok.strip()) for tok in section["labels"].split(","))
    if parser.has_section("output") and "path" in parser["output"]:
        cfg.out_path = parser["output"]["path"].strip()
    return cfg


def _resolve_config(args) -> RunConfig:
    if args.config and args.paper_defaults:
        raise ValueError("give either --config or --paper-defaults, not both")
    if args.config:
        cfg = load_config(args.config)
    elif args.paper_defaults:
        cfg = paper_default_config()
    else:
        raise ValueError("a configuration is required: --config PATH or --paper-defaults")
    if args.prime is not None:
        cfg.prime = args.prime
    if args.out is not None:
        cfg.out_path = args.out
    # validate eagerly so config errors surface before any computation
    cfg.curve()
    cfg.domain()
    cfg.recipe()
    return cfg


def _cmd_nodes(args) -> int:
    cfg = _resolve_config(args)
    curve = cfg.curve()
    quartic = cfg.quartic()
    report = kummer.verify_sixteen_nodes(quartic, curve)
    rational = kummer.all_node_points(curve, QQ)
    print(f"sixteen nodes of the degree-4 model (prime {cfg.prime}):")
    for label, point in rational.items():
        residues = report.points[label].coordinates
        print(f"  {node_token(label):>4}  ({':'.join(str(c) for c in point.coordinates)})"
              f"   mod p ({':'.join(str(c) for c in residues)})")
    print(report.summary())
    if cfg.out_path:
        body = {
            "prime": cfg.prime,
            "roots": [str(r) for r in curve.roots],
            "nodes": [
                {"label": node_token(label),
                 "coordinates": [str(c) for c in rational[label].coordinates],
                 "residues": [int(c) for c in report.points[label].coordinates]}
                for label in rational
            ],
            "verification": {
                "passed": report.passed,
                "distinct": report.distinct,
                "codim": report.codim,
                "degree": report.degree,
            },
        }
        cohomology.write_json_atomic(cfg.out_path, body)
    return EXIT_OK if report.passed else EXIT_NODES


def _cmd_certify(args) -> int:
    cfg = _resolve_config(args)
    cert = cohomology.certify_ulrich(
        cfg.curve(), cfg.quartic(), cfg.recipe(),
        picard.PolarizedSurfaceParams(4))
    out_path = cfg.out_path or "ulrich_certificate.json"
    cohomology.write_certificate(out_path, cert)
    for record in cert.checks:
        print(f"  [{'pass' if record.passed else 'FAIL'}] {record.name}: {record.value}")
    print(f"verdict: {cert.verdict}"
          + (f" ({cert.refutation_reason})" if cert.refutation_reason else ""))
    print(f"certificate written to {out_path}")
    if cert.verdict == "certified":
        return EXIT_OK
    return _REASON_EXITS.get(cert.refutation_reason, EXIT_FAILURE)


def _cmd_lattice(args) -> int:
    sub = args.check
    if sub == "theta-check":
        theta = picard.build_theta_star()  # construction asserts the table
        node_images = {picard.trope(picard.THETA_SWAP[l]) for l in picard.NODE_LABELS}
        tropes = {picard.trope(t) for t in picard.TROPE_LABELS}
        swap_ok = node_images == tropes
        h_ok = picard.is_invariant(theta, picard.polarization())
        m_ok = picard.is_invariant(theta, picard.default_recipe().divisor())
        print("  involution and isometry: pass (checked at construction)")
        print(f"  nodes map onto tropes: {'pass' if swap_ok else 'FAIL'}")
        print(f"  polarization invariant: {'pass' if h_ok else 'FAIL'}")
        print(f"  candidate class invariant: {'pass' if m_ok else 'FAIL'}")
        return EXIT_OK if (swap_ok and h_ok and m_ok) else EXIT_FAILURE
    if sub == "incidence":
        table = picard.incidence_table()
        valid = picard.incidence_is_16_6(table)
        for nl in picard.NODE_LABELS:
            row = "".join(str(table[(nl, tl)]) for tl in picard.TROPE_LABELS)
            print(f"  {node_token(nl):>4}  {row}")
        print("  columns: " + " ".join(trope_token(t) for t in picard.TROPE_LABELS))
        print(f"  every row and column sums to six: {'pass' if valid else 'FAIL'}")
        return EXIT_OK if valid else EXIT_FAILURE
    if sub == "even-eights":
        tester = picard.EvenEightTester()
        positives = tester.sweep()
        closed = all(frozenset(set(picard.NODE_LABELS) - s) in set(positives)
                     for s in positives)
        print(f"  positive eight-subsets: {len(positives)} of 12870")
        print(f"  closed under complementation: {'pass' if closed else 'FAIL'}")
        return EXIT_OK if closed else EXIT_FAILURE
    if sub == "horikawa":
        lattice = lattices.k3_lattice()
        vartheta = lattices.build_vartheta(lattice)
        invariant, _ = lattices.invariant_sublattice(lattice, vartheta)
        sig = invariant.signature()
        det = invariant.determinant()
        even = invariant.all_entries_even()
        print(f"  invariant sublattice rank: {invariant.rank}")
        print(f"  determinant: {det}")
        print(f"  signature: {sig}")
        print(f"  all Gram entries even: {even}")
        ok = (invariant.rank, det, sig, even) == (10, -1024, (1, 9), True)
        return EXIT_OK if ok else EXIT_FAILURE
    raise ValueError(f"unknown lattice check {sub!r}")


def _cmd_descend(args) -> int:
    try:
        document = cohomology.load_certificate_document(args.certificate)
    except FileNotFoundError:
        print(f"certificate file {args.certificate!r} not found", file=sys.stderr)
        return EXIT_UNCERTIFIED
    report = cohomology.descend_from_document(document)
    for name, cover, quotient in report.halving:
        print(f"  {name}: {cover} on the cover -> {quotient} on the quotient")
    print(f"  chi of the quotient polarization: {report.chi_polarization}")
    print(f"  h0 of the quotient polarization: {report.h0_polarization}"
          f" (degree-{report.plane_cover_degree} cover of the plane)")
    print(f"  conclusion: {report.conclusion}")
    if args.out:
        cohomology.write_json_atomic(
            args.out, cohomology.report_document(report, document.get("digest")))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulrichcert",
        description="Exact certification of an Ulrich line bundle on a "
                    "sixteen-nodes quartic cover of a degree-four quotient surface")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_config_flags(p):
        p.add_argument("--config", help="path to a key-value configuration file")
        p.add_argument("--paper-defaults", action="store_true",
                       help="use the built-in reference configuration")
        p.add_argument("--prime", type=int, default=None,
                       help="override the coefficient field prime")
        p.add_argument("--out", default=None, help="output file path")

    nodes = sub.add_parser("nodes", help="print and verify the sixteen node points")
    add_config_flags(nodes)
    nodes.set_defaults(func=_cmd_nodes)

    certify = sub.add_parser("certify", help="run the full certification chain")
    add_config_flags(certify)
    certify.set_defaults(func=_cmd_certify)

    lattice = sub.add_parser("lattice", help="lattice-only checks, no geometry needed")
    lattice.add_argument("check", choices=("theta-check", "incidence",
                                           "even-eights", "horikawa"))
    lattice.set_defaults(func=_cmd_lattice)

    descend = sub.add_parser("descend", help="emit the quotient-surface report")
    descend.add_argument("certificate", help="path to a certified certificate JSON")
    descend.add_argument("--out", default=None, help="report output path")
    descend.set_defaults(func=_cmd_descend)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except cohomology.CertificateIntegrityError as exc:
        print(f"integrity error: {exc}", file=sys.stderr)
        return EXIT_INTEGRITY
    except cohomology.UncertifiedCertificateError as exc:
        print(f"descent error: {exc}", file=sys.stderr)
        return EXIT_UNCERTIFIED
    except (ValueError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
