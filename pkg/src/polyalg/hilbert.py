"""Hilbert-Poincare series of thin polyomino rings and derived invariants.

The reduced series of the quotient by the ideal of inner 2-minors is
h(t) / (1-t)^d with d = |vertices| - rank for simple polyominoes.  For
simple thin polyominoes the numerator h(t) equals the rook polynomial,
which yields the regularity (deg h), multiplicity (h(1)), a-invariant
(deg h - d) and, via symmetry of h, the Gorenstein property.

Two independent constructions of the series are provided: directly from
the rook polynomial and Krull dimension, and by a recursion over leaf
removal and interval collapse with the straight-run series
(1 + r*t)/(1-t)^(r+2) as base case.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import FalsificationError, PreconditionError
from .grid import Polyomino, is_cell_interval, is_connected, is_simple, is_thin
from .rook import IntPolynomial, rook_number, rook_polynomial_bruteforce
from .structure import collapse, collapse_leaf, find_collapse, has_s_property, remove_leaf


@dataclass(frozen=True, init=False)
class HilbertSeries:
    """Rational series h(t) / (1-t)^d, stored in reduced form.

    Common (1-t) factors are cancelled on construction, so ``numerator``
    never vanishes at t = 1 while ``denom_power`` is positive.
    """

    numerator: IntPolynomial
    denom_power: int

    def __init__(self, numerator, denom_power: int):
        num = numerator if isinstance(numerator, IntPolynomial) else IntPolynomial(numerator)
        d = int(denom_power)
        if d < 0:
            raise ValueError("denominator power must be non-negative")
        while d > 0 and not num.is_zero and num.evaluate(1) == 0:
            num = _divide_by_one_minus_t(num)
            d -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denom_power", d)

    def __repr__(self) -> str:
        return f"HilbertSeries({list(self.numerator.coeffs)}, d={self.denom_power})"


def _divide_by_one_minus_t(poly: IntPolynomial) -> IntPolynomial:
    # exact division, valid when poly(1) == 0: quotient is the partial-sum prefix
    acc = 0
    out = []
    for c in poly.coeffs[:-1]:
        acc += c
        out.append(acc)
    return IntPolynomial(out)


def one_minus_t_power(n: int) -> IntPolynomial:
    """(1 - t)**n expanded."""
    return IntPolynomial([(-1) ** k * comb(n, k) for k in range(n + 1)])


def _require_simple_thin(polyomino: Polyomino, what: str) -> None:
    if not is_thin(polyomino):
        raise PreconditionError(f"{what} needs a thin polyomino")
    if not is_simple(polyomino):
        raise PreconditionError(f"{what} needs a simple polyomino")


def krull_dimension(polyomino: Polyomino) -> int:
    """|vertices| - rank; valid for simple polyominoes."""
    if not is_connected(polyomino) or not is_simple(polyomino):
        raise PreconditionError("the dimension formula needs a simple polyomino")
    return len(polyomino.vertices) - polyomino.rank


def cell_interval_series(r: int) -> HilbertSeries:
    """Series of a straight run of r cells: (1 + r*t) / (1-t)^(r+2)."""
    if r < 1:
        raise PreconditionError("a cell interval has at least one cell")
    return HilbertSeries(IntPolynomial([1, r]), r + 2)


def hilbert_series_thin(polyomino: Polyomino) -> HilbertSeries:
    """Reduced series of a simple thin polyomino: rook polynomial over (1-t)^d."""
    _require_simple_thin(polyomino, "the thin-series formula")
    return HilbertSeries(rook_polynomial_bruteforce(polyomino), krull_dimension(polyomino))


def hilbert_series_recursive(polyomino: Polyomino) -> HilbertSeries:
    """Reduced series by leaf/collapse recursion.

    Combines the series of the leaf-removed and collapsed polyominoes over
    the common denominator; the two recursive denominators must line up as
    d-1 and d-length (falsification check), and the final denominator must
    equal the Krull dimension.
    """
    _require_simple_thin(polyomino, "the series recursion")
    series = _series_recursive(polyomino)
    expected = krull_dimension(polyomino)
    if series.denom_power != expected:
        raise FalsificationError(
            f"series recursion produced denominator {series.denom_power}, "
            f"dimension formula says {expected}"
        )
    return series


def _series_recursive(polyomino: Polyomino) -> HilbertSeries:
    if is_cell_interval(polyomino):
        return cell_interval_series(polyomino.rank)
    step = find_collapse(polyomino)
    leaf = collapse_leaf(polyomino, step)
    left = _series_recursive(remove_leaf(polyomino, leaf))
    right = _series_recursive(collapse(polyomino, step))
    d = left.denom_power + 1
    if right.denom_power + step.length != d:
        raise FalsificationError(
            "collapse recursion denominators disagree: "
            f"{left.denom_power}+1 != {right.denom_power}+{step.length}"
        )
    return HilbertSeries(left.numerator + right.numerator.shifted(1), d)


def betti_numerator_identity(r: int) -> bool:
    """Check the alternating-binomial numerator identity for straight runs.

    Verifies, as exact integer polynomials,
    1 + sum_{i=1}^{r-1} (-1)^i * i * C(r+1, i+1) * t^(i+1) + (-1)^r * r * t^(r+1)
    == (1 + r*t) * (1-t)^r.
    """
    if r < 1:
        raise PreconditionError("the identity is stated for r >= 1")
    lhs = [0] * (r + 2)
    lhs[0] = 1
    for i in range(1, r):
        lhs[i + 1] += (-1) ** i * i * comb(r + 1, i + 1)
    lhs[r + 1] += (-1) ** r * r
    rhs = IntPolynomial([1, r]) * one_minus_t_power(r)
    return IntPolynomial(lhs) == rhs


def regularity(polyomino: Polyomino) -> int:
    """Castelnuovo-Mumford regularity: the degree of the h-polynomial."""
    _require_simple_thin(polyomino, "regularity")
    return rook_number(polyomino)


def multiplicity(polyomino: Polyomino) -> int:
    """h(1): the rook polynomial evaluated at 1."""
    _require_simple_thin(polyomino, "multiplicity")
    return rook_polynomial_bruteforce(polyomino).evaluate(1)


def a_invariant(polyomino: Polyomino) -> int:
    """deg h - d."""
    _require_simple_thin(polyomino, "the a-invariant")
    return rook_number(polyomino) - krull_dimension(polyomino)


def is_palindromic(poly: IntPolynomial) -> bool:
    """True iff the coefficient sequence reads the same in both directions."""
    return poly.coeffs == poly.coeffs[::-1]


def is_gorenstein(polyomino: Polyomino) -> bool:
    """Gorenstein test for simple thin polyominoes.

    Decided by the single-cell property; the answer is cross-checked
    against palindromicity of the rook polynomial, and any disagreement
    between the two characterizations aborts loudly.
    """
    _require_simple_thin(polyomino, "the Gorenstein test")
    by_singles = has_s_property(polyomino)
    by_symmetry = is_palindromic(rook_polynomial_bruteforce(polyomino))
    if by_singles != by_symmetry:
        raise FalsificationError(
            "single-cell property and rook-polynomial symmetry disagree on "
            f"{polyomino!r}: {by_singles} vs {by_symmetry}"
        )
    return by_singles
