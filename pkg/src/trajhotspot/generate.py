"""Deterministic random-walk trajectories for benchmarks and tests."""

from __future__ import annotations

import numpy as np

from .trajectory import Trajectory


def random_walk(
    n_edges: int,
    step_mean: float = 1.0,
    duration_mean: float = 1.0,
    seed: int = 0,
) -> Trajectory:
    """Walk with exponential step lengths, uniform headings and durations
    drawn uniformly from ``[0.5, 1.5] * duration_mean``."""
    if n_edges < 1:
        raise ValueError("n_edges must be at least 1")
    if not (step_mean >= 0 and duration_mean > 0):
        raise ValueError("step_mean must be >= 0 and duration_mean > 0")
    rng = np.random.default_rng(seed)
    steps = rng.exponential(step_mean, n_edges) if step_mean > 0 else np.zeros(n_edges)
    heading = rng.uniform(0.0, 2 * np.pi, n_edges)
    durations = duration_mean * rng.uniform(0.5, 1.5, n_edges)
    t = np.concatenate(([0.0], np.cumsum(durations)))
    x = np.concatenate(([0.0], np.cumsum(steps * np.cos(heading))))
    y = np.concatenate(([0.0], np.cumsum(steps * np.sin(heading))))
    return Trajectory(t, x, y)
