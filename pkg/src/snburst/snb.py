"""The Sync-and-Burst engine: magnitude schedule, step and full runs.

The algorithm applies a uniform repulsion magnitude M(t) to every vertex
pair and an attraction magnitude m*M(t)^0.9 to every adjacent pair; the
new coordinates of a vertex are the raw force sums, so only the angles
between vertices in the previous layout matter.  M(t) grows like t^10 and
overflows float range long before 20n iterations on dense graphs, so all
magnitude arithmetic here is done in log space and each step works with
the attraction:repulsion ratio m*M^(-0.1), which stays in range.  Every
step output is renormalized (zero centroid, unit max-extent); this is
exactly trajectory-preserving because the step depends only on directions
between points.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, betweenness
from .layout import Layout, NumericError
from .records import RunRecord
from .rng import SplitMix64, hash_angle


class DegenerateGraphError(ValueError):
    """Graph too small for the schedule (needs n >= 2 and m >= 1)."""


MAX_SYNC_PARAM = 4.0
SYNC_PARAM_NUMERATOR = 20.0


@dataclass(frozen=True)
class SnbParams:
    """Tunables for one Sync-and-Burst run.

    `sync_param` is s: the sync phase lasts about s*n of the
    total_multiplier*n iterations.  `initial_magnitude` is M(0); None
    means the default 1/m.
    """

    sync_param: float
    seed: int = 0
    total_multiplier: int = 20
    attraction_exponent: float = 0.9
    schedule_exponent: int = 10
    initial_magnitude: float | None = None

    def __post_init__(self):
        s = self.sync_param
        b = self.total_multiplier - s
        if not (0.0 < s < b):
            raise ValueError(
                f"need 0 < s < b (s={s}, total_multiplier={self.total_multiplier})"
            )
        if not (0.0 < self.attraction_exponent < 1.0):
            raise ValueError("attraction_exponent must lie in (0, 1)")
        if self.schedule_exponent < 1:
            raise ValueError("schedule_exponent must be positive")
        if self.initial_magnitude is not None and self.initial_magnitude <= 0:
            raise ValueError("initial_magnitude must be positive")


def _require_schedulable(g: Graph):
    if g.n < 2:
        raise DegenerateGraphError("a single vertex needs no layout")
    if g.m < 1:
        raise DegenerateGraphError("the magnitude schedule requires at least one edge")


def log_magnitude(t: int, g: Graph, p: SnbParams) -> float:
    """Natural log of the repulsion magnitude M(t) for t >= 1."""
    _require_schedulable(g)
    if t < 1:
        raise ValueError("t must be >= 1")
    base = (
        math.log(2.0)
        + math.log(t)
        + 2.0 * math.log(g.m)
        - math.log(p.sync_param)
        - 2.0 * math.log(g.n)
        - math.log(g.n - 1)
    )
    return p.schedule_exponent * base


def magnitude(t: int, g: Graph, p: SnbParams) -> float:
    """Uniform repulsion magnitude M(t) = (2 t m^2 / (s n^2 (n-1)))^10."""
    return math.exp(log_magnitude(t, g, p))


def log_turning_point_magnitude(g: Graph, attraction_exponent: float = 0.9) -> float:
    """Natural log of the magnitude where total attraction equals total repulsion."""
    _require_schedulable(g)
    base = math.log(2.0) + 2.0 * math.log(g.m) - math.log(g.n) - math.log(g.n - 1)
    return base / (1.0 - attraction_exponent)


def turning_point_magnitude(g: Graph, attraction_exponent: float = 0.9) -> float:
    """M at the sync/burst turning point: (2 m^2 / (n (n-1)))^10 for the default 0.9."""
    return math.exp(log_turning_point_magnitude(g, attraction_exponent))


def _safe_exp(x: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        return math.inf


def total_magnitude_curve(g: Graph, p: SnbParams, t_max: int):
    """Per-iteration totals (t, Ma, Mr, f) under the magnitude schedule.

    Ma = 2 M(t)^0.9 m^2, Mr = M(t) n (n-1), f = Ma - Mr.  The sign of f is
    always computed in log space so it stays meaningful even when the
    plain values overflow to infinity.
    """
    if t_max < 1:
        raise ValueError("t_max must be >= 1")
    _require_schedulable(g)
    a = p.attraction_exponent
    rows = []
    for t in range(1, t_max + 1):
        lm = log_magnitude(t, g, p)
        la = math.log(2.0) + a * lm + 2.0 * math.log(g.m)
        lr = lm + math.log(g.n) + math.log(g.n - 1)
        ma, mr = _safe_exp(la), _safe_exp(lr)
        f = ma - mr
        if math.isnan(f):  # inf - inf: recover the sign from the logs
            f = math.inf if la > lr else -math.inf
        rows.append((t, ma, mr, f))
    return rows


def compute_sync_param(g: Graph) -> float:
    """s = min(4, 20 / stdev of betweenness centralities), capped at 4.

    Zero stdev (e.g. vertex-transitive graphs) yields the cap.
    """
    _require_schedulable(g)
    stdev = betweenness(g).stdev
    if stdev == 0.0:
        return MAX_SYNC_PARAM
    return min(MAX_SYNC_PARAM, SYNC_PARAM_NUMERATOR / stdev)


def sync_phase_iterations(g: Graph, p: SnbParams) -> int:
    """Iteration count of the sync phase: ceil(s*n), capped by the total."""
    return min(math.ceil(p.sync_param * g.n), p.total_multiplier * g.n)


# ---------------------------------------------------------------------------
# Stepping


def _adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for u, v in g.edges:
        a[u, v] = 1.0
        a[v, u] = 1.0
    return a


def _unit_directions(z, iteration, seed):
    """Unit direction u[i, j] from vertex i to vertex j as complex numbers.

    The diagonal is zero.  Coincident pairs get a deterministic hashed
    direction so the step never fails on them.  sqrt of the exact sum of
    squares (not hypot) keeps the result bitwise invariant under exact
    power-of-two rescaling of the input.
    """
    dz = z[None, :] - z[:, None]
    d = np.sqrt(dz.real * dz.real + dz.imag * dz.imag)
    np.fill_diagonal(d, 1.0)
    if d.min() == 0.0:
        coincident = d == 0.0
        d[coincident] = 1.0
        u = dz / d
        for i, j in zip(*np.nonzero(coincident)):
            if i < j:
                theta = hash_angle(seed, iteration, int(i), int(j))
                u[i, j] = complex(math.cos(theta), math.sin(theta))
                u[j, i] = -u[i, j]
        return u
    return dz / d


def _step(z, iteration, adj, ratio, seed):
    """One Sync-and-Burst iteration on complex coordinates.

    `ratio` is the attraction:repulsion magnitude ratio m*M^(a-1); the
    common factor M is dropped since the output is renormalized anyway.
    Returns the renormalized (zero centroid, unit max-extent) coordinates.
    """
    u = _unit_directions(z, iteration, seed)
    # Force sum per vertex: ratio on adjacent pairs minus 1 on all pairs.
    # u has a zero diagonal, so the i = j terms drop out by themselves.
    f = ratio * np.einsum("ij,ij->i", adj, u) - u.sum(axis=1)
    f -= f.mean()
    extent = max(np.ptp(f.real), np.ptp(f.imag))
    if extent > 0.0:
        f /= extent
    if not np.all(np.isfinite(f)):
        raise NumericError("non-finite coordinates produced by step")
    return f


def _to_complex(coords):
    return coords[:, 0] + 1j * coords[:, 1]


def _from_complex(z):
    return np.column_stack([z.real, z.imag])


def snb_step(g: Graph, prev: Layout, magnitude_prev: float, p: SnbParams) -> Layout:
    """Advance one iteration using the previous iteration's magnitude M(t-1)."""
    _require_schedulable(g)
    if len(prev) != g.n:
        raise ValueError("layout size does not match vertex count")
    if not magnitude_prev > 0.0:
        raise ValueError("magnitude_prev must be positive")
    ratio = g.m * magnitude_prev ** (p.attraction_exponent - 1.0)
    z = _step(_to_complex(prev.coords), prev.iteration, _adjacency_matrix(g), ratio, p.seed)
    return Layout(_from_complex(z), prev.iteration + 1)


def initial_layout(g: Graph, seed: int) -> Layout:
    """Uniform i.i.d. positions in the unit square from a splitmix64 stream."""
    rng = SplitMix64(seed)
    coords = np.array(
        [[rng.next_float(), rng.next_float()] for _ in range(g.n)], dtype=np.float64
    )
    return Layout(coords, 0)


def snb_run(
    g: Graph,
    params: SnbParams | None = None,
    *,
    graph_id: str = "",
    capture_every: int = 0,
) -> RunRecord:
    """Full Sync-and-Burst run: total_multiplier*n steps from a seeded random layout.

    Deterministic given (g, params).  Per the pseudocode convention, the
    step at iteration t uses M(t-1), starting from M(0) = 1/m.  With
    `capture_every` = k > 0 every k-th layout is kept in the trajectory.
    """
    _require_schedulable(g)
    if params is None:
        params = SnbParams(sync_param=compute_sync_param(g))
    a = params.attraction_exponent
    log_m = math.log(g.m)
    if params.initial_magnitude is not None:
        log_mag_prev = math.log(params.initial_magnitude)
    else:
        log_mag_prev = -log_m  # M(0) = 1/m
    adj = _adjacency_matrix(g)
    z = _to_complex(initial_layout(g, params.seed).coords)
    total = params.total_multiplier * g.n
    sync_end = sync_phase_iterations(g, params)
    sync_end_layout = None
    trajectory = []
    start = time.perf_counter()
    for t in range(1, total + 1):
        ratio = math.exp(log_m + (a - 1.0) * log_mag_prev)
        z = _step(z, t - 1, adj, ratio, params.seed)
        log_mag_prev = log_magnitude(t, g, params)
        if t == sync_end:
            sync_end_layout = Layout(_from_complex(z), t)
        if capture_every and t % capture_every == 0:
            trajectory.append((t, Layout(_from_complex(z), t)))
    elapsed = time.perf_counter() - start
    layout = Layout(_from_complex(z), total)
    return RunRecord(
        graph_id=graph_id,
        algorithm="snb",
        seed=params.seed,
        n=g.n,
        m=g.m,
        iterations=total,
        wall_time_total=elapsed,
        wall_time_per_iteration=elapsed / total,
        final_layout=layout,
        sync_end_layout=sync_end_layout,
        trajectory=trajectory,
    )
