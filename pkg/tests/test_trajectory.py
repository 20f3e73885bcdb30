import math

import mpmath
import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from trajhotspot import (
    Config,
    Edge,
    Square,
    TimedVertex,
    Trajectory,
    TrajectoryError,
    clip_edge_time_interval,
    phi,
    square_weight,
    total_duration,
    total_edge_length,
    validate_trajectory,
)
from trajhotspot.generate import random_walk
from trajhotspot.trajectory import edge_lengths, square_weights

from conftest import random_trajectory, trajectories


def edge(p, q):
    return Edge(TimedVertex(*p), TimedVertex(*q))


def positions(traj, times):
    return np.interp(times, traj.t, traj.x), np.interp(times, traj.t, traj.y)


# validation

def test_minimal_trajectory():
    traj = validate_trajectory([(0, 0, 0), (1, 1, 1)])
    assert traj.n_edges == 1
    assert traj.vertex(1) == TimedVertex(1.0, 1.0, 1.0)


def test_accepts_vertex_objects():
    traj = validate_trajectory([TimedVertex(0, 1, 2), TimedVertex(3, 4, 5)])
    assert traj.edge(0).duration == 3


@pytest.mark.parametrize(
    "raw, message",
    [
        ([(0, 0, 0), (0, 1, 1)], "non-increasing timestamp at index 1"),
        ([(0, 0, 0)], "fewer than 2 vertices"),
        ([], "fewer than 2 vertices"),
        ([(0, 0, 0), (1, 0, 0), (0.5, 0, 0)], "non-increasing timestamp at index 2"),
        ([(0, 0, 0), (1, float("nan"), 0)], "non-finite value at index 1"),
        ([(0, 0, 0), (float("inf"), 0, 0)], "non-finite value at index 1"),
    ],
)
def test_validation_errors(raw, message):
    with pytest.raises(TrajectoryError, match=message):
        validate_trajectory(raw)


def test_wrong_arity():
    with pytest.raises(TrajectoryError, match="index 1"):
        validate_trajectory([(0, 0, 0), (1, 2)])


def test_arrays_are_read_only():
    traj = validate_trajectory([(0, 0, 0), (1, 1, 1)])
    with pytest.raises(ValueError):
        traj.x[0] = 5


def test_square_and_config_checks():
    with pytest.raises(ValueError):
        Square(0, 0, 0)
    with pytest.raises(ValueError):
        Config(1, 0)
    with pytest.raises(ValueError):
        Config(-1, 0.5)
    with pytest.raises(TrajectoryError):
        edge((1, 0, 0), (1, 1, 1))


# scalar summaries

def test_total_duration_examples(rng):
    assert total_duration(validate_trajectory([(0, 0, 0), (10, 1, 1)])) == 10
    assert total_duration(validate_trajectory([(0, 0, 0), (3, 1, 1), (10, 2, 2)])) == 10
    traj = random_trajectory(rng, 19, 10)
    per_edge = math.fsum(e.duration for e in traj.edges())
    assert per_edge == pytest.approx(traj.t[-1] - traj.t[0], rel=1e-12)


def test_total_edge_length_examples():
    assert total_edge_length(validate_trajectory([(0, 0, 0), (1, 10, 0)])) == 10
    assert total_edge_length(validate_trajectory([(0, 0, 0), (1, 3, 4)])) == 5
    unit = validate_trajectory([(0, 0, 0), (1, 1, 0), (2, 1, 1), (3, 0, 1)])
    assert total_edge_length(unit) == 3


def test_phi_examples():
    assert phi(validate_trajectory([(0, 0, 0), (1, 10, 0)]), 10) == 1.0
    assert phi(validate_trajectory([(0, 0, 0), (1, 3, 0), (2, 3, 5)]), 2) == 2.0


def test_phi_of_long_walk_matches_high_precision_sum():
    traj = random_walk(1000, seed=3)
    with mpmath.workdps(50):
        total = mpmath.fsum(
            mpmath.sqrt(mpmath.mpf(float(dx)) ** 2 + mpmath.mpf(float(dy)) ** 2)
            for dx, dy in zip(np.diff(traj.x), np.diff(traj.y))
        )
        expected = float(total / 1000 / 2)
    assert phi(traj, 2.0) == pytest.approx(expected, rel=1e-13)


# clipping

def test_clip_horizontal_edge():
    assert clip_edge_time_interval(edge((0, 0, 0), (10, 10, 0)), Square(2, -1, 5)) == (2, 7)


def test_clip_disjoint():
    assert clip_edge_time_interval(edge((0, 0, 0), (10, 10, 0)), Square(20, 20, 1)) is None


def test_clip_diagonal_matches_sampling():
    e = edge((0, 0, 0), (8, 4, 4))
    r = Square(1, 0, 2)
    t = np.linspace(0, 8, 10001)
    x = y = t / 2
    inside = t[(x >= r.min_x) & (x <= r.max_x) & (y >= r.min_y) & (y <= r.max_y)]
    sampled = (inside.min(), inside.max())
    assert sampled == (2.0, 4.0)
    assert clip_edge_time_interval(e, r) == pytest.approx(sampled, abs=1e-12)


def test_clip_grazing_is_degenerate():
    # passes through the corner (1, 1) only
    got = clip_edge_time_interval(edge((0, 0, 2), (2, 2, 0)), Square(0, 0, 1))
    assert got == pytest.approx((1.0, 1.0))
    assert square_weight(validate_trajectory([(0, 0, 2), (2, 2, 0)]), Square(0, 0, 1)) == pytest.approx(0, abs=1e-12)


def test_clip_stationary_edge():
    e = edge((1, 3, 3), (5, 3, 3))
    assert clip_edge_time_interval(e, Square(3, 3, 1)) == (1, 5)
    assert clip_edge_time_interval(e, Square(3.5, 3, 1)) is None


def test_square_weight_inside_and_outside(rng):
    traj = random_trajectory(rng, 10, 5)
    assert square_weight(traj, Square(-1, -1, 7)) == pytest.approx(total_duration(traj), rel=1e-12)
    assert square_weight(traj, Square(10, 10, 1)) == 0


def test_square_weight_monte_carlo():
    rng = np.random.default_rng(99)
    traj = random_trajectory(rng, 10, 4)
    r = Square(1.0, 1.2, 1.7)
    n = 10**6
    times = rng.uniform(traj.t[0], traj.t[-1], n)
    x, y = positions(traj, times)
    p = np.mean((x >= r.min_x) & (x <= r.max_x) & (y >= r.min_y) & (y <= r.max_y))
    duration = total_duration(traj)
    sigma = duration * math.sqrt(p * (1 - p) / n)
    assert 0 < p < 1
    assert abs(square_weight(traj, r) - p * duration) <= 3 * sigma


def test_batched_weights_agree(rng):
    traj = random_trajectory(rng, 30, 5)
    mx, my = rng.uniform(-1, 5, 200), rng.uniform(-1, 5, 200)
    batch = square_weights(traj, mx, my, 1.3, chunk=64)
    single = [square_weight(traj, Square(a, b, 1.3)) for a, b in zip(mx, my)]
    np.testing.assert_allclose(batch, single, rtol=1e-12, atol=1e-12)


def test_edge_lengths():
    traj = validate_trajectory([(0, 0, 0), (1, 3, 4), (2, 3, 4)])
    np.testing.assert_array_equal(edge_lengths(traj), [5, 0])


# properties

squares = st.builds(
    Square,
    st.floats(-60, 60),
    st.floats(-60, 60),
    st.floats(0.01, 80),
)


@given(trajectories(), squares, st.floats(0, 20), st.floats(0, 1), st.floats(0, 1))
def test_monotone_under_inclusion(traj, r, grow, fx, fy):
    outer = Square(r.min_x - grow * fx, r.min_y - grow * fy, r.side + grow)
    assume(outer.contains_square(r))
    assert square_weight(traj, r) <= square_weight(traj, outer) + 1e-9 * total_duration(traj)


@given(trajectories(), squares, st.data())
def test_splitting_an_edge_keeps_weight(traj, r, data):
    i = data.draw(st.integers(0, traj.n_edges - 1))
    frac = data.draw(st.floats(0.01, 0.99))
    t_mid = traj.t[i] + frac * (traj.t[i + 1] - traj.t[i])
    if not traj.t[i] < t_mid < traj.t[i + 1]:
        return
    x_mid, y_mid = positions(traj, t_mid)
    split = Trajectory(
        np.insert(traj.t, i + 1, t_mid),
        np.insert(traj.x, i + 1, x_mid),
        np.insert(traj.y, i + 1, y_mid),
    )
    before, after = square_weight(traj, r), square_weight(split, r)
    assert after == pytest.approx(before, rel=1e-9, abs=1e-9 * total_duration(traj))


def dyadic(traj):
    return Trajectory(traj.t, np.round(traj.x * 64) / 64, np.round(traj.y * 64) / 64)


@given(trajectories(), squares, st.integers(-30, 30), st.integers(-30, 30))
def test_translation(traj, r, dx, dy):
    # dyadic coordinates and integer shifts keep every sum exact, so a vertex
    # on a boundary stays on it
    traj = dyadic(traj)
    r = Square(round(r.min_x * 64) / 64, round(r.min_y * 64) / 64, max(round(r.side * 64), 1) / 64)
    moved = Square(r.min_x + dx, r.min_y + dy, r.side)
    got = square_weight(traj.translated(dx, dy), moved)
    assert got == pytest.approx(square_weight(traj, r), rel=1e-9, abs=1e-9 * total_duration(traj))


@given(trajectories(max_edges=4), squares)
def test_clip_interval_within_edge(traj, r):
    for e in traj.edges():
        got = clip_edge_time_interval(e, r)
        if got is not None:
            t0, t1 = got
            assert e.a.t <= t0 <= t1 <= e.b.t


@given(trajectories(), squares)
def test_weight_bounded_by_duration(traj, r):
    w = square_weight(traj, r)
    assert 0 <= w <= total_duration(traj) * (1 + 1e-12)
