"""Shared fixtures and independent test oracles.

The oracles here re-derive everything from first principles (subset
filtering, Redelmeier's untried-set enumeration, stars-and-bars counting)
so they stay independent of the library code paths they are checking.
"""

from __future__ import annotations

import itertools

from hypothesis import strategies as st

from polyalg import Cell, Polyomino

# Named boards used across the suite.
#
# ZIGZAG7 is the 7-cell double elbow: two horizontal runs of a 4-wide strip
# connected by two vertical runs.  It satisfies the one-single-cell-per-
# interval property and is the running Gorenstein example.
ZIGZAG7 = Polyomino([(0, 2), (1, 2), (1, 1), (1, 0), (2, 1), (3, 1), (3, 0)])
# STAIRS5 is the 5-cell staircase whose middle run has no single cell.
STAIRS5 = Polyomino([(0, 2), (1, 2), (1, 1), (2, 1), (2, 0)])
SKEW4 = Polyomino([(0, 0), (0, 1), (1, 1), (1, 2)])
SQUARE4 = Polyomino([(0, 0), (1, 0), (0, 1), (1, 1)])
L_TROMINO = Polyomino([(0, 0), (1, 0), (1, 1)])
PLUS5 = Polyomino([(1, 0), (0, 1), (1, 1), (2, 1), (1, 2)])
DOMINO_H = Polyomino([(0, 0), (1, 0)])
SINGLE = Polyomino([(0, 0)])
# 3x3 ring: thin but not simple (one enclosed hole).
RING8 = Polyomino([(x, y) for x in range(3) for y in range(3) if (x, y) != (1, 1)])
# Crossbar: a 5-cell row crossed in its second and fourth cells by vertical
# trominoes.  It has no tails, only endcuts.
CROSSBAR9 = Polyomino(
    [(0, 1), (1, 1), (2, 1), (3, 1), (4, 1), (1, 0), (1, 2), (3, 0), (3, 2)]
)


def straight(r: int, horizontal: bool = True) -> Polyomino:
    cells = [(i, 0) for i in range(r)] if horizontal else [(0, i) for i in range(r)]
    return Polyomino(cells)


def rook_counts_by_subsets(polyomino: Polyomino) -> list[int]:
    """Rook-placement counts by filtering every subset of cells.

    Independent oracle: its attack test is written from scratch (shared
    row or column with every strictly-between cell present).
    """
    cells = sorted((c.x, c.y) for c in polyomino.cells)
    occupied = set(cells)

    def hit(a, b):
        if a[0] == b[0]:
            lo, hi = sorted((a[1], b[1]))
            return all((a[0], y) in occupied for y in range(lo + 1, hi))
        if a[1] == b[1]:
            lo, hi = sorted((a[0], b[0]))
            return all((x, a[1]) in occupied for x in range(lo + 1, hi))
        return False

    counts = []
    for k in range(len(cells) + 1):
        good = 0
        for combo in itertools.combinations(cells, k):
            if all(not hit(a, b) for a, b in itertools.combinations(combo, 2)):
                good += 1
        counts.append(good)
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


def redelmeier_counts(max_size: int) -> list[int]:
    """Fixed-polyomino counts by Redelmeier's untried-set algorithm.

    Independent of the library's growth-and-deduplicate enumeration.
    """
    counts = [0] * (max_size + 1)
    origin = (0, 0)
    reached = {origin}

    def in_field(cell):
        x, y = cell
        return y > 0 or (y == 0 and x >= 0)

    def rec(untried, size):
        while untried:
            x, y = untried.pop()
            counts[size + 1] += 1
            if size + 1 < max_size:
                fresh = []
                for nb in ((x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)):
                    if in_field(nb) and nb not in reached:
                        reached.add(nb)
                        fresh.append(nb)
                rec(untried + fresh, size + 1)
                for nb in fresh:
                    reached.discard(nb)

    rec([origin], 0)
    return counts[1:]


def count_standard_by_enumeration(leads, nvars: int, degree: int) -> int:
    """Standard-monomial count by generating every monomial of the degree."""
    count = 0
    for combo in itertools.combinations_with_replacement(range(nvars), degree):
        exps = [0] * nvars
        for v in combo:
            exps[v] += 1
        if not any(all(e >= m for e, m in zip(exps, lead)) for lead in leads):
            count += 1
    return count


def contains_square_block(polyomino: Polyomino) -> bool:
    """2x2-block scan written independently of the thinness predicate."""
    cells = {(c.x, c.y) for c in polyomino.cells}
    xs = sorted({x for x, _ in cells})
    ys = sorted({y for _, y in cells})
    return any(
        {(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)} <= cells
        for x in xs
        for y in ys
    )


@st.composite
def polyominoes(draw, max_rank: int = 6):
    """Random connected polyomino built by seeded frontier growth."""
    rank = draw(st.integers(min_value=1, max_value=max_rank))
    cells = {Cell(0, 0)}
    for _ in range(rank - 1):
        frontier = sorted({nb for c in cells for nb in c.neighbors()} - cells)
        cells.add(frontier[draw(st.integers(0, len(frontier) - 1))])
    return Polyomino(cells)


@st.composite
def simple_thin_polyominoes(draw, max_rank: int = 6):
    """Random simple thin polyomino: frontier growth avoiding 2x2 blocks."""
    from polyalg import is_simple, is_thin

    rank = draw(st.integers(min_value=1, max_value=max_rank))
    cells = {Cell(0, 0)}
    for _ in range(rank - 1):
        frontier = sorted(
            nb
            for c in cells
            for nb in c.neighbors()
            if nb not in cells and is_thin(Polyomino(cells | {nb}))
        )
        if not frontier:
            break
        cells.add(frontier[draw(st.integers(0, len(frontier) - 1))])
    result = Polyomino(cells)
    # growth without 2x2 blocks cannot close a hole at these ranks, but be safe
    return result if is_simple(result) else Polyomino([(0, 0)])
