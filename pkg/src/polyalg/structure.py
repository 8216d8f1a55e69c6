"""Reduction moves on simple thin polyominoes.

Two moves drive every recursion in this package:

* removing a *leaf*, a cell owning an edge that touches no other cell;
* *collapsing* a maximal straight interval that is crossed by exactly one
  other maximal interval, in a single pivot cell.  Removing the interval
  splits the rest into a fixed part and (possibly) a moved part; the moved
  part, always a straight run attached to the pivot, is translated one
  step so its cells glue back onto the fixed part.

A collapse with an empty moved part is a *tail*; with a non-empty one it
is an *endcut*.  Every simple thin polyomino that is not itself a single
straight run admits at least one such move, and the search aborts loudly
if it ever fails to find one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import FalsificationError, PreconditionError
from .grid import (
    Cell,
    CellInterval,
    Point,
    Polyomino,
    connected_components,
    is_cell_interval,
    is_simple,
    is_thin,
    maximal_cell_intervals,
    normalize,
)

TAIL = "tail"
ENDCUT = "endcut"


@dataclass(frozen=True)
class Leaf:
    """A removable cell together with its canonical free edge."""

    cell: Cell
    free_edge: tuple[Point, Point]


@dataclass(frozen=True)
class CollapseStep:
    """One collapse move, recorded in the coordinates of the original polyomino.

    ``interval`` is the straight run being removed, ``crossing`` the unique
    maximal interval meeting it in the single ``pivot`` cell.  The cell set
    splits as fixed_part | interval | moved_part; ``moved_part`` is None
    for a tail and a straight run for an endcut.  ``fixed_corners`` and
    ``moved_corners`` are the pivot-cell corner pairs on the two sides, and
    ``shift`` (fixed minus moved, componentwise) is the translation applied
    to the moved part.
    """

    interval: CellInterval
    crossing: CellInterval
    pivot: Cell
    kind: str
    fixed_part: Polyomino
    moved_part: Optional[Polyomino]
    fixed_corners: tuple[Point, Point]
    moved_corners: tuple[Point, Point]
    shift: Point
    length: int

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "interval": [list(c) for c in self.interval.cells],
            "crossing": [list(c) for c in self.crossing.cells],
            "pivot": list(self.pivot),
            "fixed_part": [list(c) for c in self.fixed_part.sorted_cells],
            "moved_part": None
            if self.moved_part is None
            else [list(c) for c in self.moved_part.sorted_cells],
            "fixed_corners": [list(p) for p in self.fixed_corners],
            "moved_corners": [list(p) for p in self.moved_corners],
            "shift": list(self.shift),
            "length": self.length,
        }


def _require_simple_thin(polyomino: Polyomino, what: str) -> None:
    if not is_thin(polyomino):
        raise PreconditionError(f"{what} needs a thin polyomino")
    if not is_simple(polyomino):
        raise PreconditionError(f"{what} needs a simple polyomino")


def leaves(polyomino: Polyomino) -> list[Leaf]:
    """All cells with an edge whose two corners touch no other cell.

    Intended for simple polyominoes.  When several edges of one cell
    qualify, the lexicographically smallest edge is recorded.
    """
    occurrences: dict[Point, int] = {}
    for cell in polyomino.cells:
        for pt in cell.corners:
            occurrences[pt] = occurrences.get(pt, 0) + 1
    found = []
    for cell in polyomino.sorted_cells:
        free = [
            edge
            for edge in cell.edges
            if occurrences[edge[0]] == 1 and occurrences[edge[1]] == 1
        ]
        if free:
            found.append(Leaf(cell, min(free)))
    return found


def remove_leaf(polyomino: Polyomino, leaf: Leaf) -> Polyomino:
    """Delete the leaf cell and renormalize."""
    if polyomino.rank < 2:
        raise PreconditionError("cannot remove the only cell of a polyomino")
    if leaf.cell not in polyomino.cells or not any(
        lf.cell == leaf.cell for lf in leaves(polyomino)
    ):
        raise PreconditionError(f"cell {tuple(leaf.cell)} is not a leaf of the polyomino")
    return normalize(Polyomino(polyomino.cells - {leaf.cell}))


def _arms(crossing: CellInterval, pivot: Cell) -> list[tuple[Cell, ...]]:
    idx = crossing.cells.index(pivot)
    before = crossing.cells[:idx]
    after = crossing.cells[idx + 1 :]
    return [arm for arm in (before, after) if arm]


def _pivot_edges(pivot: Cell, towards: Cell) -> tuple[tuple[Point, Point], tuple[Point, Point]]:
    """Corner pairs of the pivot on the far side from ``towards`` and on its side."""
    x, y = pivot
    dx, dy = towards.x - x, towards.y - y
    left = ((x, y), (x, y + 1))
    right = ((x + 1, y), (x + 1, y + 1))
    bottom = ((x, y), (x + 1, y))
    top = ((x, y + 1), (x + 1, y + 1))
    if (dx, dy) == (1, 0):
        return left, right
    if (dx, dy) == (-1, 0):
        return right, left
    if (dx, dy) == (0, 1):
        return bottom, top
    if (dx, dy) == (0, -1):
        return top, bottom
    raise ValueError("pivot and neighbor are not edge-adjacent")


def _build_step(
    polyomino: Polyomino,
    interval: CellInterval,
    crossing: CellInterval,
    pivot: Cell,
) -> Optional[CollapseStep]:
    rest = polyomino.cells - interval.cell_set
    components = connected_components(rest)
    if len(components) == 1:
        # Tail: nothing moves.  The pivot corners on the side of the
        # crossing's surviving arm belong to the fixed part.
        neighbor = min(
            c for arm in _arms(crossing, pivot) for c in (arm[0], arm[-1])
            if abs(c.x - pivot.x) + abs(c.y - pivot.y) == 1
        )
        far, near = _pivot_edges(pivot, neighbor)
        shift = (near[0][0] - far[0][0], near[0][1] - far[0][1])
        return CollapseStep(
            interval=interval,
            crossing=crossing,
            pivot=pivot,
            kind=TAIL,
            fixed_part=Polyomino(components[0]),
            moved_part=None,
            fixed_corners=near,
            moved_corners=far,
            shift=shift,
            length=len(interval),
        )
    if len(components) != 2:
        return None
    arm_sets = [frozenset(arm) for arm in _arms(crossing, pivot)]
    eligible = [comp for comp in components if comp in arm_sets]
    if not eligible:
        return None
    # When the whole remainder is just the two arms, move the later one.
    moved_cells = max(eligible, key=min) if len(eligible) == 2 else eligible[0]
    fixed_cells = next(c for c in components if c != moved_cells)
    neighbor = next(
        c for c in moved_cells if abs(c.x - pivot.x) + abs(c.y - pivot.y) == 1
    )
    fixed_corners, moved_corners = _pivot_edges(pivot, neighbor)
    shift = (
        fixed_corners[0][0] - moved_corners[0][0],
        fixed_corners[0][1] - moved_corners[0][1],
    )
    return CollapseStep(
        interval=interval,
        crossing=crossing,
        pivot=pivot,
        kind=ENDCUT,
        fixed_part=Polyomino(fixed_cells),
        moved_part=Polyomino(moved_cells),
        fixed_corners=fixed_corners,
        moved_corners=moved_corners,
        shift=shift,
        length=len(interval),
    )


def find_collapse(polyomino: Polyomino) -> CollapseStep:
    """Deterministically pick a collapse move.

    Among all collapsible intervals, tails are preferred over endcuts and
    ties break on the interval's smallest cell.  For a simple thin
    polyomino that is not a cell interval a move always exists; failing to
    find one is a falsification-level error, not an input error.
    """
    if is_cell_interval(polyomino):
        raise PreconditionError("a cell interval has no collapse step")
    _require_simple_thin(polyomino, "collapse search")
    intervals = maximal_cell_intervals(polyomino)
    steps = []
    for interval in intervals:
        meets = []
        for other in intervals:
            if other is interval:
                continue
            shared = interval.cell_set & other.cell_set
            if len(shared) > 1:
                raise FalsificationError(
                    "two maximal intervals of a thin polyomino share several cells"
                )
            if shared:
                meets.append((other, next(iter(shared))))
        if len(meets) != 1:
            continue
        crossing, pivot = meets[0]
        step = _build_step(polyomino, interval, crossing, pivot)
        if step is not None:
            steps.append(step)
    if not steps:
        raise FalsificationError(
            "no collapsible interval found on a simple thin polyomino"
        )
    return min(steps, key=lambda s: (s.kind != TAIL, s.interval.cells[0]))


def collapse(polyomino: Polyomino, step: CollapseStep) -> Polyomino:
    """Apply a collapse move and renormalize.

    The result drops ``step.length`` cells: the interval disappears and the
    moved part (if any) is translated by ``step.shift`` so that it glues
    onto the fixed part.
    """
    expected = (
        step.fixed_part.cells
        | step.interval.cell_set
        | (step.moved_part.cells if step.moved_part is not None else frozenset())
    )
    if expected != polyomino.cells or step.pivot not in step.interval.cell_set:
        raise PreconditionError("collapse step does not decompose this polyomino")
    cells = set(step.fixed_part.cells)
    if step.moved_part is not None:
        dx, dy = step.shift
        moved = {Cell(c.x + dx, c.y + dy) for c in step.moved_part.cells}
        if moved & cells:
            raise PreconditionError("collapse step overlaps after translation")
        cells |= moved
    result = normalize(Polyomino(cells))
    if result.rank != polyomino.rank - step.length:
        raise PreconditionError("collapse step lost or duplicated cells")
    return result


def collapse_leaf(polyomino: Polyomino, step: CollapseStep) -> Leaf:
    """The leaf sitting at a free end of the collapsed interval.

    The collapsed interval always ends in at least one leaf of the whole
    polyomino (both ends qualify when the pivot is interior); the
    lexicographically smallest one is returned.
    """
    candidates = {end for end in step.interval.ends if end != step.pivot}
    options = [lf for lf in leaves(polyomino) if lf.cell in candidates]
    if not options:
        raise FalsificationError("collapsible interval has no free-end leaf")
    return min(options, key=lambda lf: lf.cell)


def single_cells(polyomino: Polyomino) -> frozenset[Cell]:
    """Cells lying in exactly one maximal cell interval (thin input)."""
    intervals = maximal_cell_intervals(polyomino)
    return frozenset(
        cell
        for cell in polyomino.cells
        if sum(cell in iv for iv in intervals) == 1
    )


def has_s_property(polyomino: Polyomino) -> bool:
    """True iff every maximal cell interval contains exactly one single cell."""
    _require_simple_thin(polyomino, "the single-cell property")
    singles = single_cells(polyomino)
    return all(
        sum(cell in singles for cell in iv) == 1
        for iv in maximal_cell_intervals(polyomino)
    )
