"""Exact lattice model of polyominoes.

Cells are unit squares named by their lower-left integer corner.  A
:class:`Polyomino` is any finite non-empty set of distinct cells; whether
the set is edge-connected, hole-free ("simple") or free of 2x2 blocks
("thin") is answered by predicates instead of being enforced at
construction time, so arbitrary inputs can still be parsed and classified.

Everything here is immutable and every operation is a pure function, so
values can be shared freely across threads.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from functools import cached_property
from operator import index
from typing import Iterable, Iterator, NamedTuple

from .errors import ParseError, PreconditionError

Point = tuple[int, int]

ASCII_GRID = "ascii-grid"
COORDINATE_LIST = "coordinate-list"
FORMATS = (ASCII_GRID, COORDINATE_LIST)

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
POINT = "point"


class Cell(NamedTuple):
    """Unit cell with lower-left corner ``(x, y)``."""

    x: int
    y: int

    @property
    def corners(self) -> tuple[Point, Point, Point, Point]:
        x, y = self
        return ((x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1))

    @property
    def edges(self) -> tuple[tuple[Point, Point], ...]:
        """The four edges, each as a lexicographically sorted vertex pair."""
        x, y = self
        return (
            ((x, y), (x + 1, y)),
            ((x, y), (x, y + 1)),
            ((x + 1, y), (x + 1, y + 1)),
            ((x, y + 1), (x + 1, y + 1)),
        )

    def neighbors(self) -> tuple["Cell", ...]:
        x, y = self
        return (Cell(x - 1, y), Cell(x + 1, y), Cell(x, y - 1), Cell(x, y + 1))


@dataclass(frozen=True, init=False)
class Polyomino:
    """Finite non-empty set of distinct unit cells."""

    cells: frozenset[Cell]

    def __init__(self, cells: Iterable[Point | Cell]):
        coerced = frozenset(Cell(index(x), index(y)) for x, y in cells)
        if not coerced:
            raise ValueError("a polyomino needs at least one cell")
        object.__setattr__(self, "cells", coerced)

    @cached_property
    def sorted_cells(self) -> tuple[Cell, ...]:
        """Cells in canonical (lexicographic by (x, y)) order."""
        return tuple(sorted(self.cells))

    @property
    def rank(self) -> int:
        """Number of cells."""
        return len(self.cells)

    @cached_property
    def vertices(self) -> frozenset[Point]:
        """Union of the four corner points of every cell."""
        return frozenset(pt for cell in self.cells for pt in cell.corners)

    @cached_property
    def bounds(self) -> tuple[int, int, int, int]:
        """(min x, min y, max x, max y) over the cells."""
        xs = [c.x for c in self.cells]
        ys = [c.y for c in self.cells]
        return (min(xs), min(ys), max(xs), max(ys))

    def translate(self, dx: int, dy: int) -> "Polyomino":
        return Polyomino(Cell(c.x + dx, c.y + dy) for c in self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cells

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.sorted_cells)

    def __len__(self) -> int:
        return len(self.cells)

    def __repr__(self) -> str:
        body = ", ".join(f"({c.x},{c.y})" for c in self.sorted_cells)
        return f"Polyomino([{body}])"


@dataclass(frozen=True)
class CellInterval:
    """A straight run of cells, or a single isolated cell ("point")."""

    cells: tuple[Cell, ...]
    orientation: str

    @cached_property
    def cell_set(self) -> frozenset[Cell]:
        return frozenset(self.cells)

    @property
    def ends(self) -> tuple[Cell, Cell]:
        return self.cells[0], self.cells[-1]

    def __len__(self) -> int:
        return len(self.cells)

    def __iter__(self) -> Iterator[Cell]:
        return iter(self.cells)

    def __contains__(self, cell: object) -> bool:
        return cell in self.cell_set


class VertexInterval(NamedTuple):
    """Axis-aligned lattice rectangle [lower, upper]."""

    lower: Point
    upper: Point

    @property
    def is_proper(self) -> bool:
        return self.lower[0] < self.upper[0] and self.lower[1] < self.upper[1]

    @property
    def diagonal_corners(self) -> tuple[Point, Point]:
        return (self.lower, self.upper)

    @property
    def antidiagonal_corners(self) -> tuple[Point, Point]:
        (i, j), (k, l) = self.lower, self.upper
        return ((i, l), (k, j))

    def cells(self) -> tuple[Cell, ...]:
        (i, j), (k, l) = self.lower, self.upper
        return tuple(Cell(x, y) for x in range(i, k) for y in range(j, l))


def parse_polyomino(text: str, fmt: str = "auto") -> Polyomino:
    """Parse ``text`` into a normalized polyomino.

    Two formats are accepted.  ``ascii-grid`` is newline-separated rows of
    ``#`` (cell) and ``.`` (empty), with the top row at the highest y.
    ``coordinate-list`` is a JSON array of ``[x, y]`` integer pairs.  With
    ``fmt="auto"`` a leading ``[`` selects the coordinate list.  Duplicate
    coordinates collapse to one cell.
    """
    if fmt == "auto":
        fmt = COORDINATE_LIST if text.lstrip().startswith("[") else ASCII_GRID
    if fmt == ASCII_GRID:
        return _parse_ascii(text)
    if fmt == COORDINATE_LIST:
        return _parse_coordinates(text)
    raise ParseError(f"unknown input format {fmt!r}; expected one of {FORMATS}")


def _parse_ascii(text: str) -> Polyomino:
    lines = [line.rstrip() for line in text.splitlines()]
    while lines and not lines[0]:
        lines.pop(0)
    while lines and not lines[-1]:
        lines.pop()
    cells = []
    for row, line in enumerate(lines):
        for col, ch in enumerate(line):
            if ch == "#":
                cells.append((col, len(lines) - 1 - row))
            elif ch != ".":
                raise ParseError(f"malformed character {ch!r} in ascii grid")
    if not cells:
        raise ParseError("ascii grid contains no cells")
    return normalize(Polyomino(cells))


def _parse_coordinates(text: str) -> Polyomino:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON coordinate list: {exc}") from None
    if not isinstance(data, list):
        raise ParseError("coordinate list must be a JSON array of [x, y] pairs")
    cells = []
    for item in data:
        if (
            not isinstance(item, (list, tuple))
            or len(item) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in item)
        ):
            raise ParseError(f"non-integer coordinate pair: {item!r}")
        cells.append((item[0], item[1]))
    if not cells:
        raise ParseError("coordinate list contains no cells")
    return normalize(Polyomino(cells))


def normalize(polyomino: Polyomino) -> Polyomino:
    """Translate so that min x = 0 and min y = 0."""
    minx, miny, _, _ = polyomino.bounds
    if minx == 0 and miny == 0:
        return polyomino
    return polyomino.translate(-minx, -miny)


def vertex_set(polyomino: Polyomino) -> frozenset[Point]:
    """All lattice points that are corners of some cell."""
    return polyomino.vertices


def render_ascii(polyomino: Polyomino) -> str:
    """Draw the cells as ``#``/``.`` rows, top row at the highest y."""
    minx, miny, maxx, maxy = polyomino.bounds
    rows = []
    for y in range(maxy, miny - 1, -1):
        rows.append(
            "".join("#" if Cell(x, y) in polyomino.cells else "." for x in range(minx, maxx + 1))
        )
    return "\n".join(rows)


def connected_components(cells: Iterable[Cell]) -> list[frozenset[Cell]]:
    """Edge-adjacency components, sorted by their smallest cell."""
    remaining = set(cells)
    components = []
    while remaining:
        seed = min(remaining)
        stack = [seed]
        remaining.discard(seed)
        component = {seed}
        while stack:
            for nb in stack.pop().neighbors():
                if nb in remaining:
                    remaining.discard(nb)
                    component.add(nb)
                    stack.append(nb)
        components.append(frozenset(component))
    return sorted(components, key=min)


def is_connected(polyomino: Polyomino) -> bool:
    """True iff the cell adjacency graph (shared full edges) is connected."""
    return len(connected_components(polyomino.cells)) == 1


def is_simple(polyomino: Polyomino) -> bool:
    """True iff the polyomino has no holes.

    Decided by a flood fill over the complement inside the bounding box
    padded by one ring of cells; everything outside that box is trivially
    connected to the exterior.
    """
    if not is_connected(polyomino):
        raise PreconditionError("simplicity is only defined for connected polyominoes")
    minx, miny, maxx, maxy = polyomino.bounds
    lox, hix = minx - 1, maxx + 1
    loy, hiy = miny - 1, maxy + 1
    empty = {
        (x, y)
        for x in range(lox, hix + 1)
        for y in range(loy, hiy + 1)
        if Cell(x, y) not in polyomino.cells
    }
    stack = [(lox, loy)]
    seen = {(lox, loy)}
    while stack:
        x, y = stack.pop()
        for nb in ((x - 1, y), (x + 1, y), (x, y - 1), (x, y + 1)):
            if nb in empty and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(empty)


def is_thin(polyomino: Polyomino) -> bool:
    """True iff no four cells form a 2x2 block."""
    cells = polyomino.cells
    return not any(
        Cell(c.x + 1, c.y) in cells
        and Cell(c.x, c.y + 1) in cells
        and Cell(c.x + 1, c.y + 1) in cells
        for c in cells
    )


def is_cell_interval(polyomino: Polyomino) -> bool:
    """True iff all cells form one straight horizontal or vertical run."""
    cells = polyomino.sorted_cells
    if len(cells) == 1:
        return True
    xs = {c.x for c in cells}
    ys = {c.y for c in cells}
    if len(ys) == 1:
        return {c.x for c in cells} == set(range(min(xs), max(xs) + 1))
    if len(xs) == 1:
        return ys == set(range(min(ys), max(ys) + 1))
    return False


def _runs(values_by_line: dict[int, list[int]], horizontal: bool) -> list[tuple[Cell, ...]]:
    runs = []
    for line, positions in sorted(values_by_line.items()):
        positions.sort()
        start = prev = positions[0]
        chunks = []
        for v in positions[1:]:
            if v == prev + 1:
                prev = v
                continue
            chunks.append((start, prev))
            start = prev = v
        chunks.append((start, prev))
        for lo, hi in chunks:
            if horizontal:
                runs.append(tuple(Cell(x, line) for x in range(lo, hi + 1)))
            else:
                runs.append(tuple(Cell(line, y) for y in range(lo, hi + 1)))
    return runs


def maximal_cell_intervals(polyomino: Polyomino) -> list[CellInterval]:
    """All maximal straight runs of cells, in canonical order.

    For a thin polyomino these are exactly the maximal inner intervals of
    cells, and a length-1 run strictly contained in a perpendicular run is
    dropped.  A cell isolated in both directions is reported once, with
    orientation ``"point"``.  Non-thin input still yields the maximal
    straight runs, but those need not be maximal inner intervals; a
    warning flags this.
    """
    if not is_thin(polyomino):
        warnings.warn(
            "non-thin polyomino: maximal straight runs need not be maximal inner intervals",
            RuntimeWarning,
            stacklevel=2,
        )
    by_row: dict[int, list[int]] = {}
    by_col: dict[int, list[int]] = {}
    for c in polyomino.cells:
        by_row.setdefault(c.y, []).append(c.x)
        by_col.setdefault(c.x, []).append(c.y)
    hruns = _runs(by_row, horizontal=True)
    vruns = _runs(by_col, horizontal=False)
    covered = {c for run in hruns if len(run) > 1 for c in run}
    covered |= {c for run in vruns if len(run) > 1 for c in run}
    intervals = [CellInterval(run, HORIZONTAL) for run in hruns if len(run) > 1]
    intervals += [CellInterval(run, VERTICAL) for run in vruns if len(run) > 1]
    intervals += [
        CellInterval((c,), POINT) for c in polyomino.cells if c not in covered
    ]
    return sorted(intervals, key=lambda iv: (iv.cells[0], iv.orientation))


def inner_intervals(polyomino: Polyomino) -> list[VertexInterval]:
    """Every proper vertex interval whose cells all belong to the polyomino."""
    minx, miny, maxx, maxy = polyomino.bounds
    cells = polyomino.cells
    found = []
    for i in range(minx, maxx + 1):
        for k in range(i + 1, maxx + 2):
            for j in range(miny, maxy + 1):
                for l in range(j + 1, maxy + 2):
                    if all(
                        Cell(x, y) in cells for x in range(i, k) for y in range(j, l)
                    ):
                        found.append(VertexInterval((i, j), (k, l)))
    return sorted(found)
