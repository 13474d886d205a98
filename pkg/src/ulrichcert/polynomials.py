"""Sparse multivariate polynomials over an exact scalar domain.

A polynomial is a map from exponent tuples to nonzero scalars. The text
format accepted by :func:`parse_polynomial` is the usual computer-algebra
shape, e.g. ``7056*X^4-2016*X^2*Y^2+...``; :func:`format_polynomial` prints
the same shape with terms in descending graded reverse lexicographic order,
highest-precedence variable first.
"""
from __future__ import annotations

from dataclasses import dataclass
import itertools
import math
import re

Monomial = tuple


def grevlex_key(m: Monomial):
    """Sort key under which max() picks the grevlex-largest monomial."""
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: Monomial):
    return m


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order on exponent tuples; variable 0 has highest precedence."""

    kind: str  # "grevlex" or "lex"

    def key(self, m: Monomial):
        if self.kind == "grevlex":
            return grevlex_key(m)
        return lex_key(m)


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class PolyRing:
    """Variable names plus a scalar domain."""

    variables: tuple
    domain: object

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def poly(self, terms) -> "Poly":
        """Build a polynomial, coercing coefficients and dropping zeros."""
        if isinstance(terms, dict):
            terms = terms.items()
        out = {}
        for mon, coeff in terms:
            mon = tuple(int(e) for e in mon)
            if len(mon) != self.nvars or any(e < 0 for e in mon):
                raise ValueError(f"bad exponent tuple {mon}")
            c = self.domain.coerce(coeff)
            if mon in out:
                c = self.domain.add(out[mon], c)
            out[mon] = c
        return Poly(self, {m: c for m, c in out.items() if not self.domain.is_zero(c)})

    def zero(self) -> "Poly":
        return Poly(self, {})

    def variable(self, i: int) -> "Poly":
        mon = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Poly(self, {mon: self.domain.one})


class Poly:
    """Immutable sparse polynomial; construct through PolyRing.poly."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def coefficient(self, mon: Monomial):
        return self.terms.get(tuple(mon), self.ring.domain.zero)

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        dom = self.ring.domain
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = dom.add(out.get(m, dom.zero), c)
            if dom.is_zero(v):
                out.pop(m, None)
            else:
                out[m] = v
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        dom = self.ring.domain
        return Poly(self.ring, {m: dom.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        dom = self.ring.domain
        if not isinstance(other, Poly):
            c0 = dom.coerce(other)
            if dom.is_zero(c0):
                return self.ring.zero()
            return Poly(self.ring, {m: dom.mul(c, c0) for m, c in self.terms.items()})
        self._check(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = dom.add(out.get(m, dom.zero), dom.mul(c1, c2))
                out[m] = v
        return Poly(self.ring, {m: c for m, c in out.items() if not dom.is_zero(c)})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, Poly) and other.ring == self.ring
                and other.terms == self.terms)

    def __repr__(self):
        return f"Poly({format_polynomial(self)})"

    def _check(self, other: "Poly"):
        if other.ring != self.ring:
            raise ValueError("polynomials live in different rings")

    def diff(self, var: int) -> "Poly":
        """Partial derivative with respect to variable index var."""
        dom = self.ring.domain
        out = {}
        for m, c in self.terms.items():
            e = m[var]
            if e == 0:
                continue
            mm = m[:var] + (e - 1,) + m[var + 1:]
            v = dom.add(out.get(mm, dom.zero), dom.mul(c, dom.coerce(e)))
            out[mm] = v
        return Poly(self.ring, {m: c for m, c in out.items() if not dom.is_zero(c)})

    def evaluate(self, point):
        """Exact value at a point (coordinates in the coefficient domain)."""
        dom = self.ring.domain
        coords = point.coordinates if isinstance(point, ProjectivePoint) else tuple(point)
        if len(coords) != self.ring.nvars:
            raise ValueError("point dimension does not match variable count")
        coords = [dom.coerce(x) for x in coords]
        total = dom.zero
        for m, c in self.terms.items():
            v = c
            for x, e in zip(coords, m):
                for _ in range(e):
                    v = dom.mul(v, x)
            total = dom.add(total, v)
        return total


def partial_derivatives(f: Poly):
    """All partial derivatives of f, one per ring variable."""
    return [f.diff(i) for i in range(f.ring.nvars)]


class ProjectivePoint:
    """A projective point, normalized so its first nonzero coordinate is 1."""

    __slots__ = ("domain", "coordinates")

    def __init__(self, domain, coordinates):
        coords = [domain.coerce(x) for x in coordinates]
        lead = next((x for x in coords if not domain.is_zero(x)), None)
        if lead is None:
            raise ValueError("all coordinates are zero")
        inv = domain.inv(lead)
        self.domain = domain
        self.coordinates = tuple(domain.mul(inv, x) for x in coords)

    def __eq__(self, other):
        return (isinstance(other, ProjectivePoint) and other.domain == self.domain
                and other.coordinates == self.coordinates)

    def __hash__(self):
        return hash((self.domain, self.coordinates))

    def __repr__(self):
        return "(" + ":".join(str(x) for x in self.coordinates) + ")"


def monomial_basis(d: int, n: int):
    """All monomials of total degree d in n variables, grevlex-descending."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    mons = []
    for bars in itertools.combinations(range(d + n - 1), n - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + n - 2 - prev)
        mons.append(tuple(exps))
    mons.sort(key=grevlex_key, reverse=True)
    assert len(mons) == math.comb(d + n - 1, n - 1)
    return mons


_TERM_RE = re.compile(r"[+-]?[^+-]+")
_FACTOR_RE = re.compile(r"^([A-Za-z_]\w*)(?:\^(\d+))?$")


def parse_polynomial(text: str, ring: PolyRing) -> Poly:
    """Parse a sum of ``c*V1^e1*V2^e2`` terms into a polynomial."""
    compact = "".join(text.split())
    if not compact:
        return ring.zero()
    var_index = {name: i for i, name in enumerate(ring.variables)}
    terms = []
    pos = 0
    for match in _TERM_RE.finditer(compact):
        if match.start() != pos:
            raise ValueError(f"cannot parse polynomial near {compact[pos:pos+20]!r}")
        pos = match.end()
        chunk = match.group()
        sign = 1
        if chunk[0] in "+-":
            sign = -1 if chunk[0] == "-" else 1
            chunk = chunk[1:]
        coeff = 1
        exps = [0] * ring.nvars
        for factor in chunk.split("*"):
            if not factor:
                raise ValueError(f"empty factor in term {match.group()!r}")
            if factor[0].isdigit():
                if not factor.isdigit():
                    raise ValueError(f"bad coefficient {factor!r}")
                coeff *= int(factor)
            else:
                fm = _FACTOR_RE.match(factor)
                if not fm or fm.group(1) not in var_index:
                    raise ValueError(f"unknown variable in factor {factor!r}")
                exps[var_index[fm.group(1)]] += int(fm.group(2) or 1)
        terms.append((tuple(exps), sign * coeff))
    if pos != len(compact):
        raise ValueError(f"trailing garbage in polynomial: {compact[pos:]!r}")
    return ring.poly(terms)


def format_polynomial(f: Poly, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text form: grevlex-descending terms, '^' powers, '*' products."""
    if f.is_zero():
        return "0"
    names = f.ring.variables
    pieces = []
    for mon in sorted(f.terms, key=order.key, reverse=True):
        coeff = f.terms[mon]
        text = str(coeff)
        neg = text.startswith("-")
        if neg:
            text = text[1:]
        factors = []
        if text != "1" or not any(mon):
            factors.append(text)
        for name, e in zip(names, mon):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        body = "*".join(factors)
        if not pieces:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("-" if neg else "+") + body)
    return "".join(pieces)
