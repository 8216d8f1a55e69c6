"""The binomial ideal of inner 2-minors and its Hilbert-function oracle.

Every proper inner interval of a polyomino contributes one pure-difference
binomial: the product of the variables at its diagonal corners minus the
product at its anti-diagonal corners.  A Groebner basis of the ideal these
generate is computed by a Buchberger loop specialised to signless monomial
pairs (S-pairs and reductions of pure-difference binomials stay pure), and
the Hilbert function is then read off by counting standard monomials, i.e.
monomials divisible by no leading term.

This route never touches the rook polynomial or the collapse recursion,
which makes it an independent check of the closed-form series: the two
are compared by :func:`verify_theorem` (simple thin boards, where equality
is proven) and :func:`verify_conjecture` (arbitrary connected boards).
"""

from __future__ import annotations

import heapq
import os
from dataclasses import dataclass
from math import comb
from typing import Iterable, Optional, Sequence

from .errors import (
    FalsificationError,
    InsufficientDepthError,
    PreconditionError,
    ResourceLimitError,
)
from .grid import Point, Polyomino, inner_intervals, is_connected, is_simple, is_thin
from .hilbert import HilbertSeries, hilbert_series_thin
from .rook import IntPolynomial, rook_number, rook_polynomial_bruteforce

DEFAULT_MAX_VARS = 30
DEFAULT_MAX_DEGREE = 12

MAX_VARS_ENV = "POLYALG_MAX_VARS"
MAX_DEGREE_ENV = "POLYALG_MAX_DEGREE"


@dataclass(frozen=True)
class Monomial:
    """Monomial over indexed variables, as a dense exponent tuple."""

    exps: tuple[int, ...]

    @property
    def exponents(self) -> dict[int, int]:
        """Sparse view: variable index -> positive exponent."""
        return {i: e for i, e in enumerate(self.exps) if e}

    @property
    def degree(self) -> int:
        return sum(self.exps)

    def mul(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exps, other.exps)))

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def div(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a - b for a, b in zip(self.exps, other.exps)))

    def lcm(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(max(a, b) for a, b in zip(self.exps, other.exps)))

    def coprime(self, other: "Monomial") -> bool:
        return all(a == 0 or b == 0 for a, b in zip(self.exps, other.exps))


@dataclass(frozen=True)
class TermOrder:
    """Degree-reverse-lexicographic order over coordinate-sorted vertices.

    Variables are indexed by the vertices in ascending lexicographic
    order, and a lower index means a larger variable.
    """

    vertices: tuple[Point, ...]
    kind: str = "degrevlex"

    @classmethod
    def for_polyomino(cls, polyomino: Polyomino) -> "TermOrder":
        return cls(tuple(sorted(polyomino.vertices)))

    @property
    def nvars(self) -> int:
        return len(self.vertices)

    def variable(self, vertex: Point) -> Monomial:
        exps = [0] * self.nvars
        exps[self.vertices.index(vertex)] = 1
        return Monomial(tuple(exps))

    def sort_key(self, monomial: Monomial):
        # ascending key: compare total degree, then reversed negated exponents
        return (monomial.degree, tuple(-e for e in reversed(monomial.exps)))

    def greater(self, a: Monomial, b: Monomial) -> bool:
        return self.sort_key(a) > self.sort_key(b)


@dataclass(frozen=True)
class Binomial:
    """Pure-difference binomial lead - trail with lead > trail."""

    lead: Monomial
    trail: Monomial


def _oriented(a: Monomial, b: Monomial, order: TermOrder) -> Optional[Binomial]:
    if a == b:
        return None
    if order.greater(a, b):
        return Binomial(a, b)
    return Binomial(b, a)


def inner_2_minors(polyomino: Polyomino, order: Optional[TermOrder] = None) -> list[Binomial]:
    """One generator per proper inner interval, oriented by the term order."""
    if order is None:
        order = TermOrder.for_polyomino(polyomino)
    gens = set()
    for interval in inner_intervals(polyomino):
        a, b = interval.diagonal_corners
        c, d = interval.antidiagonal_corners
        diagonal = order.variable(a).mul(order.variable(b))
        antidiagonal = order.variable(c).mul(order.variable(d))
        gen = _oriented(diagonal, antidiagonal, order)
        if gen is None:
            raise FalsificationError("degenerate inner 2-minor")
        gens.add(gen)
    return sorted(gens, key=lambda g: (order.sort_key(g.lead), order.sort_key(g.trail)))


def _normal_form(monomial: Monomial, basis: Sequence[Binomial]) -> Monomial:
    # each rewrite strictly decreases the monomial in the order, so this stops
    changed = True
    while changed:
        changed = False
        for g in basis:
            if g.lead.divides(monomial):
                monomial = monomial.div(g.lead).mul(g.trail)
                changed = True
                break
    return monomial


def buchberger(
    gens: Iterable[Binomial],
    order: TermOrder,
    degree_cap: Optional[int] = None,
) -> list[Binomial]:
    """Interreduced Groebner basis of a pure-difference binomial ideal.

    S-pairs of pure binomials are pure binomials, and reducing one monomial
    of a pure binomial keeps it pure, so the whole computation stays inside
    signless monomial pairs.  The generators here are homogeneous, so
    processing S-pairs in ascending lcm degree and deferring those above
    ``degree_cap`` yields a truncated basis whose leading terms are exactly
    right up to the cap; with ``degree_cap=None`` the full basis is
    returned.
    """
    basis: list[Binomial] = []
    pairs: list[tuple] = []

    def push_pairs(new_index: int) -> None:
        g = basis[new_index]
        for i in range(new_index):
            lcm = basis[i].lead.lcm(g.lead)
            heapq.heappush(
                pairs, (lcm.degree, order.sort_key(lcm), i, new_index)
            )

    def insert(binomial: Binomial) -> None:
        if not order.greater(binomial.lead, binomial.trail):
            raise FalsificationError("mis-oriented binomial reached the basis")
        basis.append(binomial)
        push_pairs(len(basis) - 1)

    for gen in dict.fromkeys(gens):
        insert(gen)

    while pairs:
        degree, _, i, j = heapq.heappop(pairs)
        if degree_cap is not None and degree > degree_cap:
            break  # heap is degree-ordered: everything left is deferred
        f, g = basis[i], basis[j]
        if f.lead.coprime(g.lead):
            continue  # the S-pair reduces to zero
        lcm = f.lead.lcm(g.lead)
        a = _normal_form(lcm.div(g.lead).mul(g.trail), basis)
        b = _normal_form(lcm.div(f.lead).mul(f.trail), basis)
        remainder = _oriented(a, b, order)
        if remainder is not None:
            insert(remainder)

    return _interreduce(basis, order)


def _interreduce(basis: Sequence[Binomial], order: TermOrder) -> list[Binomial]:
    by_lead = sorted(basis, key=lambda g: order.sort_key(g.lead))
    minimal: list[Binomial] = []
    for g in by_lead:
        if not any(h.lead.divides(g.lead) for h in minimal):
            minimal.append(g)
    reduced = []
    for g in minimal:
        trail = _normal_form(g.trail, [h for h in minimal if h is not g])
        reduced.append(Binomial(g.lead, trail))
    return sorted(reduced, key=lambda g: (order.sort_key(g.lead), order.sort_key(g.trail)))


def _count_standard(leads: Sequence[tuple[int, ...]], nvars: int, degree: int) -> int:
    """Number of degree-``degree`` monomials divisible by no lead.

    Recursive enumeration over exponent prefixes, pruned by the set of
    leads still compatible with the prefix; once no constraint is alive
    the tail is counted in closed form.
    """

    def free_count(vars_left: int, deg_left: int) -> int:
        if vars_left == 0:
            return 1 if deg_left == 0 else 0
        return comb(vars_left - 1 + deg_left, vars_left - 1)

    def rec(i: int, deg_left: int, alive: list[tuple[int, ...]]) -> int:
        if not alive:
            return free_count(nvars - i, deg_left)
        for m in alive:
            if all(m[j] == 0 for j in range(i, nvars)):
                return 0  # the prefix is already divisible by m
        if i == nvars:
            return 0
        total = 0
        for e in range(deg_left + 1):
            total += rec(i + 1, deg_left - e, [m for m in alive if m[i] <= e])
        return total

    return rec(0, degree, [m for m in leads if sum(m) <= degree])


def _resource_limits(max_vars: Optional[int], max_degree: Optional[int]) -> tuple[int, int]:
    if max_vars is None:
        max_vars = int(os.environ.get(MAX_VARS_ENV, DEFAULT_MAX_VARS))
    if max_degree is None:
        max_degree = int(os.environ.get(MAX_DEGREE_ENV, DEFAULT_MAX_DEGREE))
    return max_vars, max_degree


def hilbert_function_oracle(
    polyomino: Polyomino,
    up_to: int,
    max_vars: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> list[int]:
    """Dimensions of the graded pieces of the quotient ring, degrees 0..up_to.

    Computed by counting standard monomials against a degree-capped
    Groebner basis; exact arbitrary-precision integers throughout.
    """
    if up_to < 0:
        raise PreconditionError("the Hilbert function needs a non-negative degree bound")
    max_vars, max_degree = _resource_limits(max_vars, max_degree)
    nvars = len(polyomino.vertices)
    if nvars > max_vars:
        raise ResourceLimitError(
            f"{nvars} vertex variables exceed the limit of {max_vars}"
            f" (raise {MAX_VARS_ENV} to override)"
        )
    if up_to > max_degree:
        raise ResourceLimitError(
            f"degree bound {up_to} exceeds the limit of {max_degree}"
            f" (raise {MAX_DEGREE_ENV} to override)"
        )
    order = TermOrder.for_polyomino(polyomino)
    basis = buchberger(inner_2_minors(polyomino, order), order, degree_cap=up_to + 1)
    leads = [g.lead.exps for g in basis]
    return [_count_standard(leads, nvars, k) for k in range(up_to + 1)]


def series_expansion(series: HilbertSeries, up_to: int) -> list[int]:
    """Coefficients 0..up_to of h(t) / (1-t)^d as a power series."""
    if up_to < 0:
        raise PreconditionError("the expansion needs a non-negative degree bound")
    h = series.numerator
    d = series.denom_power
    if d == 0:
        return [h[k] for k in range(up_to + 1)]
    return [
        sum(h[i] * comb(d - 1 + k - i, d - 1) for i in range(0, min(k, len(h.coeffs) - 1) + 1))
        for k in range(up_to + 1)
    ]


def h_from_differences(values: Sequence[int]) -> tuple[IntPolynomial, int]:
    """Recover the reduced (h, d) pair from a Hilbert-function prefix.

    Repeatedly applies the difference operator a(k) -> a(k) - a(k-1)
    (with a(-1) = 0) until the sequence ends in at least two zeros; the
    nonzero prefix is h and the number of applications is d.  This is the
    inverse of :func:`series_expansion` whenever the prefix is long enough.
    """
    seq = [int(v) for v in values]
    if not seq:
        raise PreconditionError("empty Hilbert-function prefix")
    # the denominator exponent may far exceed the prefix length (few entries,
    # high dimension), so the runaway guard is deliberately loose
    cap = max(64, 2 * len(seq))
    applications = 0
    while True:
        trailing = 0
        for v in reversed(seq):
            if v != 0:
                break
            trailing += 1
        if trailing >= 2:
            break
        if applications >= cap:
            raise InsufficientDepthError(
                "Hilbert-function prefix too short to stabilize; extend the depth"
            )
        seq = [seq[0]] + [seq[k] - seq[k - 1] for k in range(1, len(seq))]
        applications += 1
    return IntPolynomial(seq), applications


@dataclass(frozen=True)
class TheoremCheck:
    """Oracle Hilbert function vs closed-form expansion on a simple thin board."""

    depth: int
    hilbert_function: tuple[int, ...]
    expansion: tuple[int, ...]
    series: HilbertSeries
    match: bool

    def as_dict(self) -> dict:
        return {
            "mode": "theorem",
            "depth": self.depth,
            "hilbert_function": list(self.hilbert_function),
            "series_expansion": list(self.expansion),
            "h_polynomial": list(self.series.numerator.coeffs),
            "denominator_power": self.series.denom_power,
            "match": self.match,
        }


@dataclass(frozen=True)
class ConjectureCheck:
    """Oracle-recovered h-polynomial vs rook polynomial on any connected board."""

    depth: int
    hilbert_function: tuple[int, ...]
    h_polynomial: IntPolynomial
    denom_power: int
    rook_polynomial: IntPolynomial
    thin: bool
    equal: bool
    degrees_match: bool

    def as_dict(self) -> dict:
        return {
            "mode": "conjecture",
            "depth": self.depth,
            "hilbert_function": list(self.hilbert_function),
            "h_polynomial": list(self.h_polynomial.coeffs),
            "denominator_power": self.denom_power,
            "rook_polynomial": list(self.rook_polynomial.coeffs),
            "thin": self.thin,
            "equal": self.equal,
            "degrees_match": self.degrees_match,
        }


def verify_theorem(
    polyomino: Polyomino,
    depth: int,
    max_vars: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> TheoremCheck:
    """Compare the oracle Hilbert function with the rook-polynomial series.

    Only meaningful on simple thin polyominoes, where the two provably
    agree; a mismatch therefore signals a bug rather than a property of
    the input.  The caller decides how loudly to fail on it.
    """
    if not is_connected(polyomino) or not is_simple(polyomino) or not is_thin(polyomino):
        raise PreconditionError(
            "the theorem check needs a simple thin polyomino; use the conjecture "
            "check for anything else"
        )
    needed = rook_number(polyomino) + 2
    if depth < needed:
        raise InsufficientDepthError(f"depth {depth} is below the required {needed}")
    series = hilbert_series_thin(polyomino)
    expansion = series_expansion(series, depth)
    oracle = hilbert_function_oracle(polyomino, depth, max_vars, max_degree)
    return TheoremCheck(depth, tuple(oracle), tuple(expansion), series, oracle == expansion)


def verify_conjecture(
    polyomino: Polyomino,
    depth: int,
    max_vars: Optional[int] = None,
    max_degree: Optional[int] = None,
) -> ConjectureCheck:
    """Recover h from the oracle and compare it with the rook polynomial."""
    if not is_connected(polyomino):
        raise PreconditionError("the conjecture check needs a connected polyomino")
    values = hilbert_function_oracle(polyomino, depth, max_vars, max_degree)
    h, d = h_from_differences(values)
    rook = rook_polynomial_bruteforce(polyomino)
    return ConjectureCheck(
        depth=depth,
        hilbert_function=tuple(values),
        h_polynomial=h,
        denom_power=d,
        rook_polynomial=rook,
        thin=is_thin(polyomino),
        equal=h == rook,
        degrees_match=h.degree == rook.degree,
    )


def format_binomial(binomial: Binomial, order: TermOrder) -> str:
    """Plain-text form like ``x(0,0)*x(1,1) - x(0,1)*x(1,0)``."""

    def side(monomial: Monomial) -> str:
        factors = []
        for idx, exp in sorted(monomial.exponents.items()):
            x, y = order.vertices[idx]
            factor = f"x({x},{y})"
            factors.append(factor if exp == 1 else f"{factor}^{exp}")
        return "*".join(factors) if factors else "1"

    return f"{side(binomial.lead)} - {side(binomial.trail)}"


def dump_binomials(binomials: Iterable[Binomial], order: TermOrder) -> str:
    """One binomial per line, for cross-checks in external algebra systems."""
    return "\n".join(format_binomial(b, order) for b in binomials)
