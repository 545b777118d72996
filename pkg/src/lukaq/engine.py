"""Graded query evaluation over a normalized table.

Every row is a possible world; a query formula gets a truth degree per row.
Results are ranked by degree (descending, ties broken by ascending row id);
the rows at degree exactly 1 form the crisp answer set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .dataset import NormalizedTable
from .degrees import ONE, Degree
from .errors import UnboundVariable
from .formula import Formula, evaluate, free_vars_ordered


@dataclass(frozen=True)
class ResultEntry:
    row_id: int
    degree: Degree
    display: Mapping[str, str]


@dataclass(frozen=True)
class RankedResult:
    """Entries sorted by degree descending, then by row id ascending."""

    entries: tuple[ResultEntry, ...]

    def answer_set(self) -> list[int]:
        """Row ids with degree exactly 1 (the crisp answer set)."""
        return [e.row_id for e in self.entries if e.degree == ONE]


def evaluate_query(
    phi: Formula,
    ntable: NormalizedTable,
    limit: int | None = None,
    only_positive: bool = False,
) -> RankedResult:
    """Rank every row of `ntable` by its degree under `phi`.

    `limit` truncates the ranking after sorting; `only_positive` drops
    degree-0 rows. Unknown query variables raise UnboundVariable (the first
    one in the formula's left-to-right order).
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be >= 1")
    known = ntable.variables
    for name in free_vars_ordered(phi):
        if name not in known:
            raise UnboundVariable(name)

    entries = [
        ResultEntry(row_id, evaluate(phi, ntable.worlds[row_id]), ntable.display[row_id])
        for row_id in ntable.row_ids
    ]
    if only_positive:
        entries = [e for e in entries if e.degree > 0]
    entries.sort(key=lambda e: (-e.degree, e.row_id))
    if limit is not None:
        entries = entries[:limit]
    return RankedResult(tuple(entries))


def answer_set(result: RankedResult) -> list[int]:
    """Row ids of `result` at degree exactly 1."""
    return result.answer_set()
