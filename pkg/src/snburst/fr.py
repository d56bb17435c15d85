"""Naive all-pairs Fruchterman-Reingold baseline.

Classic FR with k = sqrt(area/n), attraction d^2/k along edges, repulsion
k^2/d between all pairs, displacement capped by a linearly decaying
temperature.  All-pairs (no grid) on purpose: it keeps the per-iteration
cost O(n^2), the same as Sync-and-Burst, so per-iteration timing
comparisons are apples to apples.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .layout import Layout, NumericError
from .records import RunRecord
from .rng import SplitMix64, hash_angle
from .snb import DegenerateGraphError, _adjacency_matrix, _from_complex

_COINCIDENT_DIST = 1e-9


@dataclass(frozen=True)
class FrParams:
    """FR tunables.  None means the derived default (20n iterations,
    initial temperature 0.1 * area_side)."""

    iterations: int | None = None
    area_side: float = 1.0
    initial_temperature: float | None = None
    seed: int = 0

    def __post_init__(self):
        if self.iterations is not None and self.iterations < 1:
            raise ValueError("iterations must be positive")
        if self.area_side <= 0:
            raise ValueError("area_side must be positive")
        if self.initial_temperature is not None and self.initial_temperature <= 0:
            raise ValueError("initial_temperature must be positive")


def fr_temperature(t: int, total: int, t0: float) -> float:
    """Linear decay: t0 at the first iteration down to t0/total at the last."""
    return t0 * (total - t + 1) / total


def fr_run(
    g: Graph,
    params: FrParams | None = None,
    *,
    graph_id: str = "",
    total_multiplier: int = 20,
    capture_every: int = 0,
) -> RunRecord:
    """Run FR for the configured iteration count (default 20n).

    Deterministic given (g, params).  Coincident vertices get a
    deterministic hashed direction and a tiny separation distance; the
    resulting huge repulsion is harmless because displacement is capped by
    the temperature.
    """
    if g.n < 2:
        raise DegenerateGraphError("a single vertex needs no layout")
    if params is None:
        params = FrParams()
    side = params.area_side
    total = params.iterations if params.iterations is not None else total_multiplier * g.n
    t0 = (
        params.initial_temperature
        if params.initial_temperature is not None
        else 0.1 * side
    )
    k = math.sqrt(side * side / g.n)
    adj = _adjacency_matrix(g)
    rng = SplitMix64(params.seed)
    z = np.array(
        [complex(rng.next_float() * side, rng.next_float() * side) for _ in range(g.n)]
    )
    trajectory = []
    start = time.perf_counter()
    for t in range(1, total + 1):
        dz = z[None, :] - z[:, None]  # dz[i, j]: direction i -> j
        d = np.sqrt(dz.real * dz.real + dz.imag * dz.imag)
        np.fill_diagonal(d, 1.0)
        if d.min() == 0.0:
            coincident = d == 0.0
            d[coincident] = _COINCIDENT_DIST
            for i, j in zip(*np.nonzero(coincident)):
                if i < j:
                    theta = hash_angle(params.seed, t, int(i), int(j))
                    dz[i, j] = _COINCIDENT_DIST * complex(math.cos(theta), math.sin(theta))
                    dz[j, i] = -dz[i, j]
        u = dz / d
        # Per pair: attraction d^2/k toward (adjacent only), repulsion k^2/d away.
        coef = adj * (d * d / k) - (k * k) / d
        np.fill_diagonal(coef, 0.0)
        disp = np.einsum("ij,ij->i", coef, u)
        norm = np.sqrt(disp.real * disp.real + disp.imag * disp.imag)
        temp = fr_temperature(t, total, t0)
        scale = np.where(norm > temp, temp / np.where(norm == 0.0, 1.0, norm), 1.0)
        z = z + disp * scale
        z = np.clip(z.real, 0.0, side) + 1j * np.clip(z.imag, 0.0, side)
        if not np.all(np.isfinite(z)):
            raise NumericError("non-finite coordinates in FR iteration")
        if capture_every and t % capture_every == 0:
            trajectory.append((t, Layout(_from_complex(z), t)))
    elapsed = time.perf_counter() - start
    pos = _from_complex(z)
    return RunRecord(
        graph_id=graph_id,
        algorithm="fr",
        seed=params.seed,
        n=g.n,
        m=g.m,
        iterations=total,
        wall_time_total=elapsed,
        wall_time_per_iteration=elapsed / total,
        final_layout=Layout(pos, total),
        trajectory=trajectory,
    )
