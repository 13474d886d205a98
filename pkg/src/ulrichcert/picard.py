"""Exact arithmetic in the rank-17 Picard Q-space of the Kummer surface.

The fixed basis is (L, E_0, E_12, E_13, ..., E_56) with Gram data L^2 = 4,
L.E = 0, E_a.E_b = -2 delta_ab. Tropes are the half-integer classes

    T_i   = (L - E_0 - sum_{k != i} E_ik) / 2
    T_ij6 = (L - E_i6 - E_j6 - E_ij - E_lm - E_mn - E_ln) / 2

(i < j <= 5, {l, m, n} the complement of {i, j} in {1..5}). The fixed-point
free switch involution acts on the lattice by exchanging each node with a
trope according to a sixteen-row table and sending L to 3L - E_0 - sum E_ij;
its involution and isometry properties are asserted after construction
rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import itertools
import re

from .labels import (NODE_LABELS, TROPE_LABELS, node_token, parse_node_token,
                     parse_trope_token, validate_node_label)
from .linalg import hermite_normal_form, hnf_contains

BASIS = ("L",) + NODE_LABELS
_INDEX = {name: k for k, name in enumerate(BASIS)}
RANK = len(BASIS)

# Gram diagonal: L^2 = 4, each node squares to -2, mixed products vanish.
_GRAM_DIAG = (Fraction(4),) + (Fraction(-2),) * 16


class DivisorClass:
    """An element of the Picard Q-space; coefficients have denominator 1 or 2."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != RANK:
            raise ValueError(f"expected {RANK} coefficients")
        for c in coeffs:
            if c.denominator not in (1, 2):
                raise ValueError(f"coefficient {c} has denominator outside {{1, 2}}")
        self.coeffs = coeffs

    @property
    def coeff_l(self) -> Fraction:
        return self.coeffs[0]

    def coeff_node(self, label) -> Fraction:
        return self.coeffs[_INDEX[validate_node_label(label)]]

    def __add__(self, other):
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, scalar):
        return DivisorClass(tuple(Fraction(scalar) * a for a in self.coeffs))

    def __eq__(self, other):
        return isinstance(other, DivisorClass) and other.coeffs == self.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"DivisorClass({format_divisor(self)})"


def zero_class() -> DivisorClass:
    return DivisorClass((0,) * RANK)


def hyperplane_class() -> DivisorClass:
    """L, the pullback of the P^3 hyperplane through the quartic model."""
    return DivisorClass((1,) + (0,) * 16)


def node_class(label) -> DivisorClass:
    coeffs = [Fraction(0)] * RANK
    coeffs[_INDEX[validate_node_label(label)]] = Fraction(1)
    return DivisorClass(coeffs)


def polarization() -> DivisorClass:
    """H = 2L - (1/2) sum of all sixteen nodes, the degree-8 polarization."""
    return DivisorClass((2,) + (Fraction(-1, 2),) * 16)


def pairing(a: DivisorClass, b: DivisorClass) -> Fraction:
    return sum(d * x * y for d, x, y in zip(_GRAM_DIAG, a.coeffs, b.coeffs))


def trope(label) -> DivisorClass:
    """The half-integer trope class for an odd (T_i) or even (T_ij6) label."""
    if label not in TROPE_LABELS:
        raise ValueError(f"invalid trope label {label!r}")
    total = hyperplane_class()
    if isinstance(label, int):
        total = total - node_class((0,))
        for k in range(1, 7):
            if k != label:
                total = total - node_class(tuple(sorted((label, k))))
    else:
        i, j, _ = label
        l, m, n = (k for k in range(1, 6) if k not in (i, j))
        for pair in ((i, 6), (j, 6), (i, j), (l, m), (m, n), (l, n)):
            total = total - node_class(tuple(sorted(pair)))
    return Fraction(1, 2) * total


def trope_node_labels(label):
    """The six node labels lying on the given trope."""
    t = trope(label)
    return tuple(lab for lab in NODE_LABELS if t.coeff_node(lab) != 0)


# Node <-> trope exchange table of the switch attached to the even
# theta-characteristic built from the Weierstrass indices {4, 5, 6}.
THETA_SWAP = {
    (0,): (4, 5, 6),
    (1, 2): 3,
    (1, 3): 2,
    (1, 4): (1, 5, 6),
    (1, 5): (1, 4, 6),
    (1, 6): (2, 3, 6),
    (2, 3): 1,
    (2, 4): (2, 5, 6),
    (2, 5): (2, 4, 6),
    (2, 6): (1, 3, 6),
    (3, 4): (3, 5, 6),
    (3, 5): (3, 4, 6),
    (3, 6): (1, 2, 6),
    (4, 5): 6,
    (4, 6): 5,
    (5, 6): 4,
}


class Involution:
    """A linear involutive isometry of the Picard Q-space."""

    __slots__ = ("columns",)

    def __init__(self, columns):
        """columns[k] is the image of basis vector k, as a DivisorClass."""
        columns = tuple(columns)
        if len(columns) != RANK:
            raise ValueError(f"expected {RANK} columns")
        self.columns = columns
        for k in range(RANK):
            unit = [Fraction(0)] * RANK
            unit[k] = Fraction(1)
            if self.apply(columns[k]).coeffs != tuple(unit):
                raise ValueError("map is not an involution")
        basis_classes = [DivisorClass(tuple(Fraction(1) if i == k else Fraction(0)
                                            for i in range(RANK))) for k in range(RANK)]
        for a, b in itertools.combinations_with_replacement(range(RANK), 2):
            if pairing(columns[a], columns[b]) != pairing(basis_classes[a], basis_classes[b]):
                raise ValueError("map does not preserve the intersection form")

    def apply(self, d: DivisorClass) -> DivisorClass:
        out = [Fraction(0)] * RANK
        for k, c in enumerate(d.coeffs):
            if c:
                for i, x in enumerate(self.columns[k].coeffs):
                    out[i] += c * x
        return DivisorClass(out)


def build_theta_star() -> Involution:
    """Assemble the switch involution from the exchange table.

    The image of L is 3L - E_0 - sum E_ij; each node maps to its paired
    trope. Involutivity and isometry are verified during construction, which
    doubles as a consistency check on the table itself.
    """
    image_of_l = DivisorClass((3,) + (-1,) * 16)
    columns = [image_of_l]
    for label in NODE_LABELS:
        columns.append(trope(THETA_SWAP[label]))
    return Involution(columns)


def is_invariant(inv: Involution, d: DivisorClass) -> bool:
    return inv.apply(d) == d


def chi_k3(d: DivisorClass) -> Fraction:
    """Euler characteristic 2 + d^2/2 on a K3 surface."""
    return 2 + pairing(d, d) / 2


@dataclass(frozen=True)
class PolarizedSurfaceParams:
    """Degree parameter s with H^2 = 2s; the reference surface has s = 4."""

    s: int = 4

    def __post_init__(self):
        if self.s < 1:
            raise ValueError("s must be a positive integer")


def numerical_ulrich(params: PolarizedSurfaceParams, h: DivisorClass,
                     m: DivisorClass) -> bool:
    """The numerical conditions h.m = 3s and m^2 = 4s - 4."""
    s = params.s
    if pairing(h, h) != 2 * s:
        raise ValueError(f"polarization square {pairing(h, h)} != 2s = {2 * s}")
    return pairing(h, m) == 3 * s and pairing(m, m) == 4 * s - 4


# ---------------------------------------------------------------------------
# Bundle recipes
# ---------------------------------------------------------------------------

TWELVE_NODES = "twelve-nodes"
HALF_EVEN_EIGHT = "half-even-eight"

# Printed recipe of the reference construction: 3L minus these twelve nodes.
DEFAULT_TWELVE = ((0,), (1, 6), (2, 6), (3, 6), (4, 6), (5, 6),
                  (1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (3, 5))


@dataclass(frozen=True)
class BundleRecipe:
    """How to build the candidate class M from L and node classes."""

    kind: str = TWELVE_NODES
    labels: tuple = DEFAULT_TWELVE

    def __post_init__(self):
        if self.kind not in (TWELVE_NODES, HALF_EVEN_EIGHT):
            raise ValueError(f"unknown recipe kind {self.kind!r}")
        labels = tuple(validate_node_label(l) for l in self.labels)
        if len(set(labels)) != len(labels):
            raise ValueError("recipe labels must be distinct")
        object.__setattr__(self, "labels", labels)

    def divisor(self) -> DivisorClass:
        if self.kind == TWELVE_NODES:
            total = 3 * hyperplane_class()
            for label in self.labels:
                total = total - node_class(label)
            return total
        total = 2 * hyperplane_class()
        for label in self.labels:
            total = total - Fraction(1, 2) * node_class(label)
        return total

    def tokens(self):
        return tuple(node_token(l) for l in self.labels)


def default_recipe() -> BundleRecipe:
    return BundleRecipe()


# ---------------------------------------------------------------------------
# Even eights
# ---------------------------------------------------------------------------

def default_picard_generators():
    """Working generator set {L} + nodes + tropes for divisibility questions.

    This is a declared subgroup of the Picard group, not asserted to be all
    of it; divisibility answers are relative to it.
    """
    gens = [hyperplane_class()]
    gens.extend(node_class(label) for label in NODE_LABELS)
    gens.extend(trope(label) for label in TROPE_LABELS)
    return gens


def _doubled_integer_vector(d: DivisorClass):
    out = []
    for c in d.coeffs:
        doubled = 2 * c
        assert doubled.denominator == 1
        out.append(int(doubled))
    return out


class EvenEightTester:
    """Divisibility-by-2 tests against a fixed generator set, HNF-backed."""

    def __init__(self, generators=None):
        gens = list(generators) if generators is not None else default_picard_generators()
        if not gens:
            raise ValueError("empty generator list")
        rows = [_doubled_integer_vector(g) for g in gens]
        self._hnf, self._pivots = hermite_normal_form(rows)

    def test(self, labels) -> bool:
        labels = [validate_node_label(l) for l in labels]
        if len(set(labels)) != 8:
            raise ValueError("an even-eight test needs exactly 8 distinct node labels")
        half_sum = Fraction(1, 2) * sum(
            (node_class(l) for l in labels[1:]), node_class(labels[0]))
        return hnf_contains(self._hnf, self._pivots, _doubled_integer_vector(half_sum))

    def sweep(self):
        """All positive 8-subsets of the sixteen node labels.

        Equivalent to calling test() on each of the 12870 subsets; the
        doubled coordinate vector of half a node sum is just an indicator
        vector, so the sweep builds those directly.
        """
        index = {label: k + 1 for k, label in enumerate(NODE_LABELS)}
        positives = []
        for combo in itertools.combinations(NODE_LABELS, 8):
            target = [0] * (len(NODE_LABELS) + 1)
            for label in combo:
                target[index[label]] = 1
            if hnf_contains(self._hnf, self._pivots, target):
                positives.append(frozenset(combo))
        return positives


def even_eight_test(labels, generators=None) -> bool:
    """True iff half the sum of the eight nodes lies in the generator span."""
    return EvenEightTester(generators).test(labels)


# ---------------------------------------------------------------------------
# Incidence configuration
# ---------------------------------------------------------------------------

def incidence_table():
    """Pairing values (node, trope), a 16 x 16 table of zeros and ones."""
    table = {}
    for nl in NODE_LABELS:
        e = node_class(nl)
        for tl in TROPE_LABELS:
            value = pairing(e, trope(tl))
            assert value.denominator == 1
            table[(nl, tl)] = int(value)
    return table


def incidence_is_16_6(table=None) -> bool:
    """Every node lies on six tropes and every trope contains six nodes."""
    table = table if table is not None else incidence_table()
    for nl in NODE_LABELS:
        if sum(table[(nl, tl)] for tl in TROPE_LABELS) != 6:
            return False
    for tl in TROPE_LABELS:
        if sum(table[(nl, tl)] for nl in NODE_LABELS) != 6:
            return False
    return all(v in (0, 1) for v in table.values())


# ---------------------------------------------------------------------------
# Divisor expressions
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"[+-]?[^+-]+")


def parse_divisor(text: str) -> DivisorClass:
    """Parse expressions like ``3*L - E0 - 1/2*E12 + T6``.

    Tokens are L, the node tokens E0, E12..E56 and the trope tokens T1..T6,
    T126..T456; trope tokens are normalized into the standard basis.
    """
    compact = "".join(text.split())
    if not compact:
        return zero_class()
    total = zero_class()
    pos = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != pos:
            raise ValueError(f"cannot parse divisor near {compact[pos:]!r}")
        pos = match.end()
        chunk = match.group()
        sign = Fraction(1)
        if chunk[0] in "+-":
            if chunk[0] == "-":
                sign = Fraction(-1)
            chunk = chunk[1:]
        parts = chunk.split("*")
        token = parts[-1]
        coeff = sign
        for factor in parts[:-1]:
            coeff *= Fraction(factor)
        if token == "L":
            base = hyperplane_class()
        elif token.startswith("E"):
            base = node_class(parse_node_token(token))
        elif token.startswith("T"):
            base = trope(parse_trope_token(token))
        else:
            raise ValueError(f"unknown divisor token {token!r}")
        total = total + coeff * base
    if pos != len(compact):
        raise ValueError(f"trailing garbage in divisor expression: {compact[pos:]!r}")
    return total


def format_divisor(d: DivisorClass) -> str:
    if all(c == 0 for c in d.coeffs):
        return "0"
    pieces = []
    for name, c in zip(BASIS, d.coeffs):
        if c == 0:
            continue
        token = "L" if name == "L" else node_token(name)
        mag = abs(c)
        body = token if mag == 1 else f"{mag}*{token}"
        if not pieces:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append(("+" if c > 0 else "-") + body)
    return "".join(pieces)
