# (C) 2026 kdyck contributors
from math import comb

import pytest
from hypothesis import given

from kdyck import errors, paths
from tests.strategies import kdyck_paths

WORKED_PATH = "S3 W S1 W W W S4 W W S1 S1 W W W W"
WORKED_RANKS = (0, 3, 2, 3, 2, 1, 0, 4, 3, 2, 3, 4, 3, 2, 1)


def test_parse_worked_path():
    path = paths.parse_path(WORKED_PATH)
    assert len(path) == 15
    assert path.composition == paths.Composition((3, 1, 4, 1, 1))
    assert paths.rank_sequence(path).start_ranks == WORKED_RANKS
    assert paths.red_ranks(path) == [0, 2, 0, 2, 3]
    assert paths.render_path(path) == WORKED_PATH


def test_end_ranks_shift_start_ranks():
    ranks = paths.rank_sequence(paths.parse_path(WORKED_PATH))
    assert ranks.end_ranks == WORKED_RANKS[1:] + (0,)


def test_parse_ignores_extra_whitespace():
    assert paths.parse_path("  S2   W\tW ") == paths.parse_path("S2 W W")


@pytest.mark.parametrize(
    "text, error",
    [
        ("", errors.EmptyPathError),
        ("W S1", errors.PrefixNegativeError),
        ("S2 W", errors.NonzeroTotalError),
        ("S0 W", errors.PathSyntaxError),
        ("S1 X", errors.PathSyntaxError),
        ("S01 W", errors.PathSyntaxError),
        ("s1 W", errors.PathSyntaxError),
    ],
)
def test_parse_invalid_path_raises_error(text, error):
    with pytest.raises(error):
        paths.parse_path(text)


def test_parse_error_carries_position():
    with pytest.raises(errors.PathSyntaxError) as e:
        paths.parse_path("S1 W X")
    assert e.value.position == 3
    assert e.value.token == "X"


def test_prefix_negative_error_carries_index():
    with pytest.raises(errors.PrefixNegativeError) as e:
        paths.parse_path("S1 W W S1")
    assert e.value.index == 3


def test_step_tokens():
    assert paths.Step.up(4).token == "S4"
    assert paths.Step.down().token == "W"
    assert not paths.Step.down().is_up
    with pytest.raises(ValueError):
        paths.Step(0)


@pytest.mark.parametrize(
    "text, parts",
    [("3,1,4", (3, 1, 4)), ("1", (1,)), (" 2, 2 ", (2, 2))],
)
def test_composition_from_text(text, parts):
    assert paths.Composition.from_text(text).parts == parts


@pytest.mark.parametrize("text", ["", "3,,1", "a", "0,1", "2,-1", "1,"])
def test_composition_from_bad_text_raises_error(text):
    with pytest.raises(errors.InvalidCompositionError):
        paths.Composition.from_text(text)


def test_composition_properties():
    k = paths.Composition((3, 1, 4))
    assert k.total == 8
    assert k.length == 3
    assert k.size == 11
    assert k.partition() == paths.Partition((4, 3, 1))
    assert str(k) == "3,1,4"


def test_partition_sorts_parts():
    assert paths.Partition.from_text("1,3,1").parts == (3, 1, 1)
    with pytest.raises(errors.InvalidPartitionError):
        paths.Partition((1, 3))
    with pytest.raises(errors.InvalidPartitionError):
        paths.Partition.from_text("3,0")


def test_path_from_red_ranks_rebuilds_worked_path():
    k = paths.Composition((3, 1, 4, 1, 1))
    path = paths.path_from_red_ranks(k, (0, 2, 0, 2, 3))
    assert paths.render_path(path) == WORKED_PATH


@pytest.mark.parametrize(
    "parts, reds",
    [
        ((2, 1), (1, 0)),
        ((2, 1), (0, 3)),
        ((2, 1), (0,)),
        ((1, 1, 1), (0, 1, 3)),
    ],
)
def test_bad_red_ranks_raise_error(parts, reds):
    with pytest.raises(errors.BadRedRanksError):
        paths.path_from_red_ranks(paths.Composition(parts), reds)


def test_zero_area_path():
    path = paths.zero_area_path(paths.Composition((2, 1)))
    assert paths.render_path(path) == "S2 W W S1 W"
    assert paths.red_ranks(path) == [0, 0]


def test_row_counts_of_worked_path():
    counts = paths.row_segment_counts(paths.parse_path(WORKED_PATH))
    assert counts.height == 4
    assert counts.balanced
    assert counts.row(4) == (2, 2)
    assert paths.row_segment_counts(paths.parse_path("S1 W")).row(1) == (1, 1)


def test_enumerate_paths_order():
    found = [
        paths.render_path(path)
        for path in paths.enumerate_paths(paths.Composition((2, 1)))
    ]
    assert found == ["S2 S1 W W W", "S2 W S1 W W", "S2 W W S1 W"]


def test_enumerate_single_part():
    found = list(paths.enumerate_paths(paths.Composition((4,))))
    assert [paths.render_path(path) for path in found] == ["S4 W W W W"]


@pytest.mark.parametrize(
    "parts, count",
    [
        ((1, 1, 1), 5),
        ((1, 1, 1, 1), 14),
        ((2, 2), 3),
        ((2, 2, 2), 12),
        ((3, 3), 4),
        ((1, 2), 2),
        ((2, 1), 3),
    ],
)
def test_count_paths(parts, count):
    k = paths.Composition(parts)
    assert paths.count_paths(k) == count
    assert sum(1 for _ in paths.enumerate_paths(k)) == count


FUSS_CATALAN_GRID = [
    (part, n) for part in range(1, 20) for n in range(1, 20 // (part + 1) + 1)
]


@pytest.mark.parametrize("n", range(1, 9))
def test_catalan_counts(n):
    k = paths.Composition((1,) * n)
    expected = comb(2 * n, n) // (n + 1)
    assert paths.count_paths(k) == expected
    assert sum(1 for _ in paths.enumerate_paths(k)) == expected


@pytest.mark.parametrize("part, n", FUSS_CATALAN_GRID)
def test_fuss_catalan_counts(part, n):
    k = paths.Composition((part,) * n)
    expected = comb((part + 1) * n, n) // (part * n + 1)
    assert paths.count_paths(k) == expected
    assert sum(1 for _ in paths.enumerate_paths(k)) == expected


def test_enumeration_is_distinct_and_ordered():
    k = paths.Composition((2, 1, 3))
    found = [paths.render_path(path) for path in paths.enumerate_paths(k)]
    assert len(set(found)) == len(found)
    assert all(path.composition == k for path in paths.enumerate_paths(k))


def test_size_guard():
    k = paths.Composition((5, 5, 5))
    with pytest.raises(errors.SizeGuardError):
        list(paths.enumerate_paths(k, max_steps=10))
    with pytest.raises(errors.SizeGuardError):
        paths.count_paths(k, max_steps=10)


def test_compositions_of():
    found = list(paths.compositions_of(paths.Partition((3, 1, 1, 1))))
    assert [k.parts for k in found] == [
        (1, 1, 1, 3),
        (1, 1, 3, 1),
        (1, 3, 1, 1),
        (3, 1, 1, 1),
    ]
    assert [k.parts for k in paths.compositions_of(paths.Partition((2, 2)))] == [
        (2, 2)
    ]


def test_partitions_up_to():
    found = [lam.parts for lam in paths.partitions_up_to(4)]
    assert found == [(1,), (2,), (1, 1), (3,)]


def test_compositions_up_to_respects_size():
    found = list(paths.compositions_up_to(6))
    assert all(k.size <= 6 for k in found)
    assert len(found) == len(set(found))
    assert paths.Composition((1, 3)) in found


def test_path_to_json():
    path = paths.parse_path("S2 W S1 W W")
    assert paths.path_to_json(path) == {"path": "S2 W S1 W W", "composition": [2, 1]}


@given(kdyck_paths())
def test_text_and_red_rank_round_trips(path):
    assert paths.parse_path(paths.render_path(path)) == path
    assert paths.path_from_red_ranks(path.composition, paths.red_ranks(path)) == path
    assert paths.row_segment_counts(path).balanced
