# (C) 2026 kdyck contributors
import pytest
from hypothesis import given

from kdyck import errors, stats
from kdyck.paths import (
    Composition,
    compositions_up_to,
    enumerate_paths,
    parse_path,
    path_from_red_ranks,
    render_path,
    zero_area_path,
)
from kdyck.sweep import inverse_sweep, sweep_map
from tests.strategies import kdyck_paths

WORKED_PATH = parse_path("S3 W S1 W W W S4 W W S1 S1 W W W W")
WORKED_IMAGE = parse_path("S4 S3 W W W S1 W S1 W S1 W W W W W")


def test_area_of_worked_path():
    assert stats.area(WORKED_PATH) == 7


def test_dinv_of_worked_path():
    breakdown = stats.dinv(WORKED_PATH)
    assert breakdown.sweep_dinv == 13
    assert breakdown.red_dinv == 3
    assert breakdown.total == 16
    assert breakdown.to_json() == {"sweep": 13, "red": 3, "total": 16}


def test_bounce_of_worked_image():
    trace = stats.bounce(WORKED_IMAGE)
    assert trace.v == (2, 0, 2, 1)
    assert trace.h == (2, 2, 4, 2)
    assert trace.value == 7
    assert trace.to_json() == {"v": [2, 0, 2, 1], "h": [2, 2, 4, 2], "value": 7}


@pytest.mark.parametrize(
    "text, dinv_total",
    [
        ("S2 W W S1 W", 1),
        ("S1 W S2 W W", 2),
        ("S1 W", 0),
        ("S1 S1 W W", 0),
        ("S1 W S1 W", 1),
    ],
)
def test_dinv_of_small_paths(text, dinv_total):
    assert stats.dinv(parse_path(text)).total == dinv_total


@pytest.mark.parametrize(
    "parts", [(1,), (2, 1), (1, 2), (3, 1, 4, 1, 1), (1, 1, 1, 1), (2, 3, 1)]
)
def test_zero_area_dinv(parts):
    k = Composition(parts)
    path = zero_area_path(k)
    assert stats.area(path) == 0
    assert stats.dinv(path).total == stats.zero_area_dinv(k)


def test_zero_area_dinv_formula():
    assert stats.zero_area_dinv(Composition((3, 1, 4, 1, 1))) == 16
    assert stats.zero_area_dinv(Composition((5,))) == 0


def test_statistics_swept_exhaustively():
    for k in compositions_up_to(9):
        for path in enumerate_paths(k):
            image = sweep_map(path)
            assert stats.dinv(path).total == stats.area(image), render_path(path)
            assert stats.area(path) == stats.bounce(image).value, render_path(path)


@given(kdyck_paths())
def test_bounce_is_area_of_preimage(path):
    assert stats.bounce(path).value == stats.area(inverse_sweep(path))


def test_bounce_closed_form_matches_direct_bounce():
    for k1 in range(1, 4):
        for k2 in range(1, 4):
            for k3 in range(1, 4):
                k = Composition((k1, k2, k3))
                for r2 in range(k1 + 1):
                    for r3 in range(r2 + k2 + 1):
                        path = path_from_red_ranks(k, (0, r2, r3))
                        expected = stats.bounce(path).value
                        assert stats.bounce_closed_form_n3(k, r2, r3) == expected


def test_bounce_closed_form_rejects_bad_input():
    with pytest.raises(errors.InvalidCompositionError):
        stats.bounce_closed_form_n3(Composition((1, 1)), 0, 0)
    with pytest.raises(errors.BadRedRanksError):
        stats.bounce_closed_form_n3(Composition((1, 1, 1)), 2, 0)


def test_remove_top_cell_of_worked_path():
    lowered = stats.remove_top_cell(WORKED_PATH)
    assert render_path(lowered) == "S3 W S1 W W W S4 W W S1 W S1 W W W"
    assert stats.area(lowered) == 6


@given(kdyck_paths())
def test_remove_top_cell_difference(path):
    if stats.area(path) == 0:
        with pytest.raises(errors.ZeroAreaError):
            stats.remove_top_cell(path)
        return
    lowered = stats.remove_top_cell(path)
    assert stats.area(lowered) == stats.area(path) - 1
    assert stats.dinv(path).total - stats.dinv(lowered).total == stats.area(
        sweep_map(path)
    ) - stats.area(sweep_map(lowered))


def test_stats_to_json():
    document = stats.stats_to_json(WORKED_PATH)
    assert document["area"] == 7
    assert document["dinv"] == {"sweep": 13, "red": 3, "total": 16}
    assert document["bounce"]["value"] == stats.area(inverse_sweep(WORKED_PATH))
