# (C) 2026 kdyck contributors
"""The area, dinv and bounce statistics of k-vector Dyck paths."""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Any

from kdyck.errors import BounceStuckError, InvalidCompositionError, ZeroAreaError
from kdyck.paths import (
    Composition,
    KDyckPath,
    check_red_ranks,
    make_path,
    rank_sequence,
    red_ranks,
)
from kdyck.sweep import RankTableau

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DinvBreakdown:
    sweep_dinv: int
    red_dinv: int

    @property
    def total(self) -> int:
        return self.sweep_dinv + self.red_dinv

    def to_json(self) -> dict[str, int]:
        return {"sweep": self.sweep_dinv, "red": self.red_dinv, "total": self.total}


@dataclass(frozen=True)
class BounceTrace:
    v: tuple[int, ...]
    h: tuple[int, ...]
    tableau: RankTableau
    value: int

    def to_json(self) -> dict[str, Any]:
        return {"v": list(self.v), "h": list(self.h), "value": self.value}


def area(path: KDyckPath) -> int:
    return sum(red_ranks(path))


def dinv(path: KDyckPath) -> DinvBreakdown:
    """Sweep dinv plus red dinv.

    A down step W sweeps a later up step S when r(S) <= r(W) <= end(S).
    A pair of up steps adds the difference of their end ranks when one
    arrow nests inside the other under a slope-epsilon shift.
    """
    ranks = rank_sequence(path)
    down_ranks: list[int] = []
    ups: list[tuple[int, int]] = []
    sweep_dinv = 0
    red_dinv = 0

    for step, start, end in zip(path.steps, ranks.start_ranks, ranks.end_ranks):
        if not step.is_up:
            down_ranks.append(start)
            continue
        sweep_dinv += sum(1 for rank in down_ranks if start <= rank <= end)
        for earlier_start, earlier_end in ups:
            if earlier_start >= start and end > earlier_end:
                red_dinv += end - earlier_end
            elif earlier_start < start and end < earlier_end:
                red_dinv += earlier_end - end
        ups.append((start, end))

    return DinvBreakdown(sweep_dinv, red_dinv)


def bounce(image: KDyckPath) -> BounceTrace:
    """Runs the Bouncing algorithm on ``image`` read as a north/east path.

    Up steps are north runs, down steps unit east steps. Round i moves north
    to the east step above the current abscissa, consuming every up step
    whose top is passed (v_i of them, each opening a column i, i+1, ...),
    then moves east by the number of entries equal to i+1 in the tableau.
    """
    parts = image.composition.parts
    total = image.composition.total
    tops: list[int] = []
    east_heights: list[int] = []
    height = 0
    for step in image.steps:
        if step.is_up:
            height += step.length
            tops.append(height)
        else:
            east_heights.append(height)

    columns: list[tuple[int, ...]] = []
    entries: Counter[int] = Counter()
    v: list[int] = []
    h: list[int] = []
    x = y = 0
    consumed = 0
    i = 0
    while x < total:
        y = east_heights[x]
        moved_up = 0
        while consumed < len(tops) and tops[consumed] <= y:
            column = tuple(range(i, i + parts[consumed] + 1))
            columns.append(column)
            entries.update(column)
            consumed += 1
            moved_up += 1
        moved_east = entries[i + 1]
        if moved_east == 0 or x + moved_east > total:
            raise BounceStuckError((x, y))
        v.append(moved_up)
        h.append(moved_east)
        x += moved_east
        i += 1

    if consumed != len(tops) or y != total:
        raise BounceStuckError((x, y))

    value = sum(i * count for i, count in enumerate(v))
    logger.debug(f"Bounce of {image}: v={v} h={h} value={value}.")
    return BounceTrace(tuple(v), tuple(h), RankTableau(tuple(columns)), value)


def bounce_closed_form_n3(k: Composition, r2: int, r3: int) -> int:
    """Bounce of the path of D_k (n = 3) with red ranks (0, r2, r3)."""
    if k.length != 3:
        raise InvalidCompositionError(f"Expected three parts, got {k.parts}.")
    check_red_ranks(k, (0, r2, r3))
    k1, k2, _ = k.parts
    drop = r2 + k2 - r3
    shared = min(r2, k2)
    if drop >= 2 * shared:
        return 2 * (k1 - r2) + drop - shared
    return 2 * (k1 - r2) + (drop + 1) // 2


def remove_top_cell(path: KDyckPath) -> KDyckPath:
    """Lowers the rightmost highest up step by one level.

    That up step is always followed by a down step; the two are swapped,
    which decreases the area by exactly one.
    """
    starts = rank_sequence(path).start_ranks
    up_positions = [i for i, step in enumerate(path.steps) if step.is_up]
    highest = max(starts[i] for i in up_positions)
    if highest == 0:
        raise ZeroAreaError()
    position = max(i for i in up_positions if starts[i] == highest)
    steps = list(path.steps)
    steps[position], steps[position + 1] = steps[position + 1], steps[position]
    return make_path(steps)


def zero_area_dinv(k: Composition) -> int:
    """dinv of the zero-area path: (n-1)k_n + (n-2)k_(n-1) + ... + k_2."""
    return sum(i * part for i, part in enumerate(k.parts))


def stats_to_json(path: KDyckPath) -> dict[str, Any]:
    return {
        "area": area(path),
        "dinv": dinv(path).to_json(),
        "bounce": bounce(path).to_json(),
    }
