"""Rook polynomials on polyomino boards.

Two rooks attack each other when they share a row or column and every
cell strictly between them belongs to the board: a missing cell blocks
the attack.  On a thin polyomino this is the same as forbidding two rooks
in one maximal straight interval.

The polynomial is computed twice, by independent routes: direct
backtracking over placements, and a recursion that removes a leaf and
collapses an interval.  Both must agree on every simple thin polyomino.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError
from .grid import Cell, Polyomino, is_cell_interval, is_simple, is_thin
from .structure import collapse, collapse_leaf, find_collapse, remove_leaf


@dataclass(frozen=True, init=False)
class IntPolynomial:
    """Dense univariate polynomial with arbitrary-precision integer coefficients.

    Stored canonically, with no trailing zero coefficient; the zero
    polynomial has an empty coefficient tuple and degree ``-inf``.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coefficients=()):
        cs = [int(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[k] + other[k] for k in range(n))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    def shifted(self, k: int) -> "IntPolynomial":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"


def attacks(polyomino: Polyomino, first: Cell, second: Cell) -> bool:
    """True iff two distinct board cells attack each other.

    They must share a row or column, and every cell strictly between them
    must belong to the board.
    """
    first, second = Cell(*first), Cell(*second)
    for cell in (first, second):
        if cell not in polyomino.cells:
            raise PreconditionError(f"cell {tuple(cell)} is not on the board")
    if first == second:
        raise PreconditionError("attack test needs two distinct cells")
    if first.y == second.y:
        lo, hi = sorted((first.x, second.x))
        return all(Cell(x, first.y) in polyomino.cells for x in range(lo + 1, hi))
    if first.x == second.x:
        lo, hi = sorted((first.y, second.y))
        return all(Cell(first.x, y) in polyomino.cells for y in range(lo + 1, hi))
    return False


def rook_polynomial_bruteforce(polyomino: Polyomino) -> IntPolynomial:
    """Count non-attacking rook placements of every size by backtracking."""
    cells = polyomino.sorted_cells
    n = len(cells)
    attacked = [[False] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if attacks(polyomino, cells[i], cells[j]):
                attacked[i][j] = attacked[j][i] = True
    counts = [0] * (n + 1)
    counts[0] = 1

    def extend(start: int, chosen: list[int]) -> None:
        for i in range(start, n):
            row = attacked[i]
            if any(row[j] for j in chosen):
                continue
            chosen.append(i)
            counts[len(chosen)] += 1
            extend(i + 1, chosen)
            chosen.pop()

    extend(0, [])
    return IntPolynomial(counts)


def rook_number(polyomino: Polyomino) -> int:
    """Largest number of mutually non-attacking rooks the board carries."""
    return rook_polynomial_bruteforce(polyomino).degree


def rook_polynomial_recursive(polyomino: Polyomino) -> IntPolynomial:
    """Rook polynomial of a simple thin polyomino by leaf/collapse recursion.

    A straight run of p cells contributes 1 + p*t.  Otherwise, with a
    collapse step on interval I and the leaf C at I's free end, the
    placements split into those avoiding C (the polyomino minus C) and
    those using C (t times the collapsed polyomino).
    """
    if not is_thin(polyomino):
        raise PreconditionError("the collapse recursion needs a thin polyomino")
    if not is_simple(polyomino):
        raise PreconditionError("the collapse recursion needs a simple polyomino")
    return _rook_recursive(polyomino)


def _rook_recursive(polyomino: Polyomino) -> IntPolynomial:
    if is_cell_interval(polyomino):
        return IntPolynomial([1, polyomino.rank])
    step = find_collapse(polyomino)
    leaf = collapse_leaf(polyomino, step)
    without_leaf = remove_leaf(polyomino, leaf)
    collapsed = collapse(polyomino, step)
    return _rook_recursive(without_leaf) + _rook_recursive(collapsed).shifted(1)
