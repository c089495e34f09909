# (C) 2026 kdyck contributors
"""The sweep map and its inverse via the Filling and Ranking tableaux."""
import heapq
import logging
from collections import defaultdict
from dataclasses import dataclass
from functools import total_ordering
from typing import Any

from kdyck.errors import (
    IndexOutOfRangeError,
    InvalidSweepImageError,
    KDyckError,
    NoActiveEntryError,
    ReconstructionStuckError,
)
from kdyck.paths import KDyckPath, make_path, rank_sequence

logger = logging.getLogger(__name__)


@total_ordering
@dataclass(frozen=True, eq=True)
class SweepKey:
    """Position of a step in the sweep order.

    Steps are read by start rank from bottom to top, and from right to left
    when they start at the same rank.
    """

    start_rank: int
    position: int

    def __lt__(self, other: "SweepKey") -> bool:
        if self.start_rank != other.start_rank:
            return self.start_rank < other.start_rank
        return self.position > other.position


@dataclass(frozen=True)
class FillingTableau:
    # columns[j] lists the step indices of column j, top to bottom
    columns: tuple[tuple[int, ...], ...]

    @property
    def tops(self) -> tuple[int, ...]:
        return tuple(column[0] for column in self.columns)

    def to_json(self) -> dict[str, Any]:
        return {"columns": [list(column) for column in self.columns]}


@dataclass(frozen=True)
class RankTableau:
    columns: tuple[tuple[int, ...], ...]

    @classmethod
    def from_tops(cls, tops: list[int], parts: list[int]) -> "RankTableau":
        """Columns a, a+1, ..., a+k for every top entry a and part k."""
        return cls(
            tuple(tuple(range(top, top + part + 1)) for top, part in zip(tops, parts))
        )

    @property
    def first_row(self) -> tuple[int, ...]:
        return tuple(column[0] for column in self.columns)

    def to_json(self) -> dict[str, Any]:
        return {"columns": [list(column) for column in self.columns]}


def sweep_keys(path: KDyckPath) -> list[SweepKey]:
    starts = rank_sequence(path).start_ranks
    return [SweepKey(rank, position) for position, rank in enumerate(starts, 1)]


def sweep_order(path: KDyckPath) -> list[int]:
    """1-based step indices of ``path`` listed in sweep order."""
    return [key.position for key in sorted(sweep_keys(path))]


def sweep_map(path: KDyckPath) -> KDyckPath:
    steps = [path.steps[position - 1] for position in sweep_order(path)]
    try:
        return make_path(steps)
    except KDyckError as e:
        raise InvalidSweepImageError(f"Sweep image of {path} is invalid: {e.cause}")


def filling_tableau(image: KDyckPath) -> FillingTableau:
    """Places the step indices of ``image`` into columns of heights k_j + 1.

    An up step opens the next column. A down step goes directly below the
    smallest active entry, i.e. the smallest bottom entry of a column that is
    not yet full.
    """
    heights = [part + 1 for part in image.composition.parts]
    columns: list[list[int]] = []
    active: list[tuple[int, int]] = []  # heap of (bottom entry, column)

    for index, step in enumerate(image.steps, start=1):
        if step.is_up:
            column = len(columns)
            columns.append([index])
            heapq.heappush(active, (index, column))
            continue
        if not active:
            raise NoActiveEntryError(index)
        _, column = heapq.heappop(active)
        columns[column].append(index)
        if len(columns[column]) < heights[column]:
            heapq.heappush(active, (index, column))

    return FillingTableau(tuple(tuple(column) for column in columns))


def ranking_tableau(tableau: FillingTableau) -> RankTableau:
    """Ranks every index of a Filling tableau.

    The first column gets 0, 1, ..., k1. Any later column whose top index is
    A+1 starts at the rank of index A and counts up by one.
    """
    rank_of: dict[int, int] = {}
    tops: list[int] = []
    for number, column in enumerate(tableau.columns):
        if number == 0:
            top = 0
        else:
            previous = column[0] - 1
            if previous not in rank_of:
                raise KDyckError(
                    f"Index {previous} is not ranked before column {number + 1}."
                )
            top = rank_of[previous]
        tops.append(top)
        for offset, index in enumerate(column):
            rank_of[index] = top + offset
    return RankTableau.from_tops(tops, [len(column) - 1 for column in tableau.columns])


def image_ranks(image: KDyckPath) -> list[int]:
    """Rank assigned to every index of ``image`` by the Ranking algorithm."""
    filling = filling_tableau(image)
    ranking = ranking_tableau(filling)
    ranks = [0] * len(image)
    for indices, values in zip(filling.columns, ranking.columns):
        for index, rank in zip(indices, values):
            ranks[index - 1] = rank
    return ranks


def inverse_sweep(image: KDyckPath) -> KDyckPath:
    """Rebuilds the sweep preimage of ``image`` in linear time.

    Every image step gets its start rank in the preimage from the Ranking
    algorithm. The preimage is then walked left to right: at level c the next
    step is the unused step of rank c with the largest index, since steps of
    equal rank are swept from right to left.
    """
    unused: dict[int, list[int]] = defaultdict(list)
    for index, rank in enumerate(image_ranks(image), start=1):
        unused[rank].append(index)

    steps = []
    level = 0
    for _ in range(len(image)):
        candidates = unused.get(level)
        if not candidates:
            raise ReconstructionStuckError(level)
        step = image.steps[candidates.pop() - 1]
        steps.append(step)
        level += step.length

    preimage = make_path(steps)
    logger.debug(f"Inverse sweep of {image} is {preimage}.")
    return preimage


def prop31_rank(preimage: KDyckPath, step_index: int) -> int:
    """Start rank, within the sweep image, of the image of step ``step_index``.

    Computed without building the image: the lengths of the up steps that
    precede the step in sweep order, minus the number of such down steps.
    """
    if not 1 <= step_index <= len(preimage):
        raise IndexOutOfRangeError(step_index, len(preimage))
    keys = sweep_keys(preimage)
    target = keys[step_index - 1]
    return sum(step.length for step, key in zip(preimage.steps, keys) if key < target)
