# (C) 2026 kdyck contributors
"""k-vector Dyck paths: construction, text format, ranks and enumeration.

A path is a sequence of up steps of lengths k1, ..., kn (in order) and unit
down steps whose running level never drops below zero and ends at zero.
"""
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate, chain
from typing import Any, Iterator, Sequence

from sympy.utilities.iterables import multiset_permutations, partitions

from kdyck.config import DEFAULT_MAX_STEPS
from kdyck.errors import (
    BadRedRanksError,
    EmptyPathError,
    InvalidCompositionError,
    InvalidPartitionError,
    NonzeroTotalError,
    PathSyntaxError,
    PrefixNegativeError,
    SizeGuardError,
)

UP_TOKEN_REGEX = re.compile(r"S([1-9][0-9]*)")
DOWN_TOKEN = "W"

logger = logging.getLogger(__name__)


def _parse_int_list(text: str) -> tuple[int, ...]:
    """Parses "3,1,4" into (3, 1, 4); raises ValueError on bad input."""
    items = [item.strip() for item in text.split(",")]
    if not items or any(not item for item in items):
        raise ValueError(f'Malformed integer list "{text}".')
    return tuple(int(item) for item in items)


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InvalidCompositionError("A composition needs at least one part.")
        for part in self.parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise InvalidCompositionError(
                    f"Composition parts must be positive integers, got {self.parts}."
                )

    @classmethod
    def from_text(cls, text: str) -> "Composition":
        """Creates Composition from a comma separated literal like "3,1,4"."""
        try:
            return cls(_parse_int_list(text))
        except ValueError as e:
            raise InvalidCompositionError(str(e))

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        """Number of steps of any path in D_k, n + |k|."""
        return self.length + self.total

    def partition(self) -> "Partition":
        return Partition(tuple(sorted(self.parts, reverse=True)))

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise InvalidPartitionError("A partition needs at least one part.")
        for part in self.parts:
            if isinstance(part, bool) or not isinstance(part, int) or part < 1:
                raise InvalidPartitionError(
                    f"Partition parts must be positive integers, got {self.parts}."
                )
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise InvalidPartitionError(
                f"Partition parts must be weakly decreasing, got {self.parts}."
            )

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "Partition":
        """Creates Partition from parts given in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        """Creates Partition from "3,1,1,1"; the parts are sorted."""
        try:
            return cls.from_parts(_parse_int_list(text))
        except ValueError as e:
            raise InvalidPartitionError(str(e))

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return ",".join(str(part) for part in self.parts)


@dataclass(frozen=True)
class Step:
    # k for an up step S^k, -1 for a down step W
    length: int

    def __post_init__(self):
        if self.length != -1 and self.length < 1:
            raise ValueError(f"Invalid step length {self.length}.")

    @classmethod
    def up(cls, k: int) -> "Step":
        return cls(k)

    @classmethod
    def down(cls) -> "Step":
        return DOWN

    @property
    def is_up(self) -> bool:
        return self.length > 0

    @property
    def token(self) -> str:
        return f"S{self.length}" if self.is_up else DOWN_TOKEN


DOWN = Step(-1)


@dataclass(frozen=True)
class KDyckPath:
    steps: tuple[Step, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise EmptyPathError()
        level = 0
        for index, step in enumerate(self.steps, start=1):
            level += step.length
            if level < 0:
                raise PrefixNegativeError(index)
        if level != 0:
            raise NonzeroTotalError(level)

    @cached_property
    def composition(self) -> Composition:
        return Composition(tuple(step.length for step in self.steps if step.is_up))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return render_path(self)


@dataclass(frozen=True)
class RankSequence:
    start_ranks: tuple[int, ...]
    end_ranks: tuple[int, ...]


@dataclass(frozen=True)
class RowCounts:
    # index j-1 holds row j, the band between heights j-1 and j
    red: tuple[int, ...]
    blue: tuple[int, ...]

    @property
    def height(self) -> int:
        return len(self.red)

    def row(self, j: int) -> tuple[int, int]:
        return self.red[j - 1], self.blue[j - 1]

    @property
    def balanced(self) -> bool:
        return self.red == self.blue


def make_path(steps: Sequence[Step]) -> KDyckPath:
    """Validates the steps and returns the path they describe."""
    return KDyckPath(tuple(steps))


def parse_path(text: str) -> KDyckPath:
    """Parses whitespace separated "S<d>" and "W" tokens into a path."""
    steps: list[Step] = []
    for position, token in enumerate(text.split(), start=1):
        if token == DOWN_TOKEN:
            steps.append(DOWN)
            continue
        match = UP_TOKEN_REGEX.fullmatch(token)
        if not match:
            raise PathSyntaxError(position, token)
        steps.append(Step.up(int(match.group(1))))
    return make_path(steps)


def render_path(path: KDyckPath) -> str:
    return " ".join(step.token for step in path.steps)


def path_to_json(path: KDyckPath) -> dict[str, Any]:
    return {"path": render_path(path), "composition": list(path.composition.parts)}


def rank_sequence(path: KDyckPath) -> RankSequence:
    levels = list(accumulate((step.length for step in path.steps), initial=0))
    # the final level is always 0, so end ranks are (r2, ..., r_N, 0)
    return RankSequence(tuple(levels[:-1]), tuple(levels[1:]))


def red_ranks(path: KDyckPath) -> list[int]:
    """Start ranks of the up steps, in path order."""
    ranks = rank_sequence(path).start_ranks
    return [rank for rank, step in zip(ranks, path.steps) if step.is_up]


def check_red_ranks(k: Composition, reds: Sequence[int]) -> None:
    """Raises BadRedRanksError unless ``reds`` are the red ranks of a path in D_k."""
    if len(reds) != k.length:
        raise BadRedRanksError(
            len(reds), f"Expected {k.length} red ranks, got {len(reds)}."
        )
    if reds[0] != 0:
        raise BadRedRanksError(1, "The first red rank must be 0.")
    for i in range(1, k.length):
        top = reds[i - 1] + k.parts[i - 1]
        if not 0 <= reds[i] <= top:
            raise BadRedRanksError(
                i + 1, f"Red rank {reds[i]} at position {i + 1} is outside 0..{top}."
            )


def path_from_red_ranks(k: Composition, reds: Sequence[int]) -> KDyckPath:
    """Rebuilds the unique path of D_k whose up steps start at ``reds``.

    Down runs are forced: after the i-th up step the path descends to the
    next red rank, and after the last one it descends to the axis.
    """
    check_red_ranks(k, reds)
    steps: list[Step] = []
    for i, part in enumerate(k.parts):
        following = reds[i + 1] if i + 1 < k.length else 0
        steps.append(Step.up(part))
        steps.extend([DOWN] * (reds[i] + part - following))
    return make_path(steps)


def zero_area_path(k: Composition) -> KDyckPath:
    return path_from_red_ranks(k, [0] * k.length)


def row_segment_counts(path: KDyckPath) -> RowCounts:
    ranks = rank_sequence(path)
    height = max(ranks.start_ranks)
    red = [0] * height
    blue = [0] * height
    for step, start, end in zip(path.steps, ranks.start_ranks, ranks.end_ranks):
        if step.is_up:
            for j in range(start + 1, end + 1):
                red[j - 1] += 1
        else:
            blue[start - 1] += 1
    return RowCounts(tuple(red), tuple(blue))


def _check_size(k: Composition, max_steps: int) -> None:
    if k.size > max_steps:
        raise SizeGuardError(k.size, max_steps)


def enumerate_paths(
    k: Composition, max_steps: int = DEFAULT_MAX_STEPS
) -> Iterator[KDyckPath]:
    """Yields every path of D_k once, lexicographically with up before down."""
    _check_size(k, max_steps)
    ups = [Step.up(part) for part in k.parts]
    prefix: list[Step] = []

    def extend(ups_used: int, level: int) -> Iterator[KDyckPath]:
        # level > 0 implies a down step is still available
        if ups_used == len(ups) and level == 0:
            yield KDyckPath(tuple(prefix))
            return
        if ups_used < len(ups):
            prefix.append(ups[ups_used])
            yield from extend(ups_used + 1, level + ups[ups_used].length)
            prefix.pop()
        if level > 0:
            prefix.append(DOWN)
            yield from extend(ups_used, level - 1)
            prefix.pop()

    logger.debug(f"Enumerating D_({k}).")
    yield from extend(0, 0)


def count_paths(k: Composition, max_steps: int = DEFAULT_MAX_STEPS) -> int:
    """|D_k| by dynamic programming over (up steps used, down steps used)."""
    _check_size(k, max_steps)
    heights = list(accumulate(k.parts, initial=0))
    downs = k.total
    table = [[0] * (downs + 1) for _ in range(k.length + 1)]
    table[0][0] = 1
    for i in range(k.length + 1):
        for d in range(downs + 1):
            if heights[i] - d < 0:
                table[i][d] = 0
                continue
            if i > 0:
                table[i][d] += table[i - 1][d]
            if d > 0:
                table[i][d] += table[i][d - 1]
    return table[k.length][downs]


def compositions_of(lam: Partition) -> Iterator[Composition]:
    """All distinct rearrangements of ``lam`` in lexicographic order."""
    for parts in multiset_permutations(sorted(lam.parts)):
        yield Composition(tuple(parts))


def partitions_up_to(max_size: int) -> Iterator[Partition]:
    """Partitions with |lam| + len(lam) <= max_size, by increasing |lam|."""
    for total in range(1, max_size):
        found = []
        for multiplicities in partitions(total, m=max_size - total):
            parts = chain.from_iterable(
                [part] * count for part, count in multiplicities.items()
            )
            found.append(tuple(sorted(parts, reverse=True)))
        for parts in sorted(found, reverse=True):
            yield Partition(parts)


def compositions_up_to(max_size: int) -> Iterator[Composition]:
    for lam in partitions_up_to(max_size):
        yield from compositions_of(lam)
