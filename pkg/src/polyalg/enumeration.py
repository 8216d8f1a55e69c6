"""Exhaustive generation of fixed polyominoes and the corpus-wide scan.

Polyominoes are enumerated up to translation only ("fixed"), by growing
each shape one edge-adjacent cell at a time and deduplicating canonical
forms.  The stream is deterministic: ranks ascend, and within a rank the
canonical cell tuples are sorted.

:func:`conjecture_scan` runs the Groebner oracle against the rook
polynomial over every polyomino in range and aggregates counterexamples
to "thin iff the polynomials agree" and to "deg h equals the rook
number"; resource skips are recorded, never dropped.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional

from .errors import InsufficientDepthError, PreconditionError, ResourceLimitError
from .grid import Cell, Polyomino, is_cell_interval, is_connected, is_simple, is_thin
from .ideal import verify_conjecture
from .rook import IntPolynomial, rook_polynomial_bruteforce

DEFAULT_RANK_LIMIT = 10
DEFAULT_DEPTH_MARGIN = 3  # scan depth: rook number + margin

CanonicalForm = tuple[Cell, ...]


def canonical_form(polyomino: Polyomino) -> CanonicalForm:
    """Translation-canonical key: sorted cells of the normalized shape."""
    minx, miny, _, _ = polyomino.bounds
    return tuple(sorted(Cell(c.x - minx, c.y - miny) for c in polyomino.cells))


def _canonical(cells: Iterable[Cell]) -> CanonicalForm:
    cells = list(cells)
    minx = min(c.x for c in cells)
    miny = min(c.y for c in cells)
    return tuple(sorted(Cell(c.x - minx, c.y - miny) for c in cells))


def enumerate_fixed(max_rank: int, rank_limit: int = DEFAULT_RANK_LIMIT) -> Iterator[Polyomino]:
    """Every fixed polyomino of rank <= max_rank, exactly once per translation class."""
    if max_rank < 1:
        raise PreconditionError("enumeration needs max_rank >= 1")
    if max_rank > rank_limit:
        raise PreconditionError(
            f"max_rank {max_rank} exceeds the enumeration limit {rank_limit}"
        )
    level: set[CanonicalForm] = {(Cell(0, 0),)}
    for rank in range(1, max_rank + 1):
        for form in sorted(level):
            yield Polyomino(form)
        if rank == max_rank:
            return
        grown: set[CanonicalForm] = set()
        for form in level:
            occupied = set(form)
            for cell in form:
                for nb in cell.neighbors():
                    if nb not in occupied:
                        grown.add(_canonical([*form, nb]))
        level = grown


_PREDICATES: dict[str, Callable[[Polyomino], bool]] = {
    "connected": is_connected,
    "simple": is_simple,
    "thin": is_thin,
    "cell-interval": is_cell_interval,
}


def filter_corpus(
    max_rank: int,
    predicates: Iterable[str] = (),
    rank_limit: int = DEFAULT_RANK_LIMIT,
) -> Iterator[Polyomino]:
    """Enumeration filtered by named predicates; ``not-`` negates any name."""
    checks = []
    for name in predicates:
        negate = name.startswith("not-")
        base = name[4:] if negate else name
        if base not in _PREDICATES:
            raise PreconditionError(f"unknown predicate {name!r}")
        checks.append((_PREDICATES[base], negate))
    for polyomino in enumerate_fixed(max_rank, rank_limit):
        if all(pred(polyomino) != negate for pred, negate in checks):
            yield polyomino


@dataclass(frozen=True)
class ScanRecord:
    """Outcome of the oracle-vs-rook comparison for one polyomino."""

    cells: CanonicalForm
    thin: bool
    simple: bool
    rook_polynomial: IntPolynomial
    depth: Optional[int]
    h_polynomial: Optional[IntPolynomial]
    denom_power: Optional[int]
    equal: Optional[bool]
    degrees_match: Optional[bool]
    skipped: Optional[str]

    def as_dict(self) -> dict:
        return {
            "cells": [list(c) for c in self.cells],
            "thin": self.thin,
            "simple": self.simple,
            "rook_polynomial": list(self.rook_polynomial.coeffs),
            "depth": self.depth,
            "h_polynomial": None
            if self.h_polynomial is None
            else list(self.h_polynomial.coeffs),
            "denominator_power": self.denom_power,
            "equal": self.equal,
            "degrees_match": self.degrees_match,
            "skipped": self.skipped,
        }


@dataclass(frozen=True)
class ScanReport:
    """Aggregated scan outcome with full per-polyomino records."""

    max_rank: int
    records: tuple[ScanRecord, ...]

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def skipped(self) -> tuple[ScanRecord, ...]:
        return tuple(r for r in self.records if r.skipped is not None)

    @property
    def processed(self) -> int:
        return self.total - len(self.skipped)

    @property
    def thin_unequal(self) -> tuple[ScanRecord, ...]:
        """Counterexamples to "thin implies equal"."""
        return tuple(
            r for r in self.records if r.skipped is None and r.thin and not r.equal
        )

    @property
    def nonthin_equal(self) -> tuple[ScanRecord, ...]:
        """Counterexamples to "non-thin implies unequal"."""
        return tuple(
            r for r in self.records if r.skipped is None and not r.thin and r.equal
        )

    @property
    def degree_mismatches(self) -> tuple[ScanRecord, ...]:
        """Counterexamples to "deg h equals the rook number"."""
        return tuple(
            r for r in self.records if r.skipped is None and not r.degrees_match
        )

    def summary(self) -> dict:
        return {
            "max_rank": self.max_rank,
            "total": self.total,
            "processed": self.processed,
            "skipped": len(self.skipped),
            "thin_unequal": [r.as_dict() for r in self.thin_unequal],
            "nonthin_equal": [r.as_dict() for r in self.nonthin_equal],
            "degree_mismatches": [r.as_dict() for r in self.degree_mismatches],
        }


def _scan_one(form: CanonicalForm, depth_policy: Optional[Callable[[Polyomino], int]]) -> ScanRecord:
    polyomino = Polyomino(form)
    rook = rook_polynomial_bruteforce(polyomino)
    thin = is_thin(polyomino)
    simple = is_simple(polyomino)
    depth = depth_policy(polyomino) if depth_policy else rook.degree + DEFAULT_DEPTH_MARGIN
    try:
        check = verify_conjecture(polyomino, depth)
    except (ResourceLimitError, InsufficientDepthError) as exc:
        return ScanRecord(
            cells=form,
            thin=thin,
            simple=simple,
            rook_polynomial=rook,
            depth=depth,
            h_polynomial=None,
            denom_power=None,
            equal=None,
            degrees_match=None,
            skipped=f"{type(exc).__name__}: {exc}",
        )
    return ScanRecord(
        cells=form,
        thin=thin,
        simple=simple,
        rook_polynomial=rook,
        depth=depth,
        h_polynomial=check.h_polynomial,
        denom_power=check.denom_power,
        equal=check.equal,
        degrees_match=check.degrees_match,
        skipped=None,
    )


def _scan_worker(form: CanonicalForm) -> ScanRecord:
    return _scan_one(form, None)


def conjecture_scan(
    max_rank: int,
    depth_policy: Optional[Callable[[Polyomino], int]] = None,
    jobs: int = 1,
    rank_limit: int = DEFAULT_RANK_LIMIT,
) -> ScanReport:
    """Run the oracle-vs-rook comparison over every polyomino in range.

    ``depth_policy`` maps a polyomino to the oracle depth; the default is
    rook number + 3.  With ``jobs > 1`` the per-polyomino work runs in a
    process pool (default policy only); record order is deterministic
    either way.
    """
    forms = [canonical_form(p) for p in enumerate_fixed(max_rank, rank_limit)]
    if jobs > 1 and depth_policy is None:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_scan_worker, forms, chunksize=8))
    else:
        records = [_scan_one(form, depth_policy) for form in forms]
    return ScanReport(max_rank=max_rank, records=tuple(records))
