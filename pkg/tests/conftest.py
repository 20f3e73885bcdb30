import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from trajhotspot import Trajectory

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

coord = st.floats(-50, 50, allow_nan=False, allow_infinity=False)
step = st.floats(0.01, 10, allow_nan=False, allow_infinity=False)


@st.composite
def trajectories(draw, min_edges=1, max_edges=12):
    """Trajectories that may revisit places and stand still."""
    n = draw(st.integers(min_edges, max_edges))
    xs, ys = [draw(coord)], [draw(coord)]
    for _ in range(n):
        if draw(st.booleans()) and draw(st.booleans()):
            xs.append(xs[-1])
            ys.append(ys[-1])
        else:
            xs.append(draw(coord))
            ys.append(draw(coord))
    dts = draw(st.lists(step, min_size=n, max_size=n))
    t = np.concatenate(([draw(st.floats(-100, 100))], dts)).cumsum()
    return Trajectory(t, xs, ys)


def random_trajectory(rng: np.random.Generator, n_edges: int, extent: float) -> Trajectory:
    """Vertices in an ``extent`` box; about a fifth of the edges are stops."""
    xs = rng.uniform(0, extent, n_edges + 1)
    ys = rng.uniform(0, extent, n_edges + 1)
    stay = rng.random(n_edges) < 0.2
    for i in np.flatnonzero(stay) + 1:
        xs[i], ys[i] = xs[i - 1], ys[i - 1]
    t = np.concatenate(([0.0], rng.uniform(0.1, 2.0, n_edges).cumsum()))
    return Trajectory(t, xs, ys)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
