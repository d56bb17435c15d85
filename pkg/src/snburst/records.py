"""Shared run-record container used by both layout algorithms and the harness."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Optional

if TYPE_CHECKING:
    from .layout import Layout
    from .metrics import MetricsReport


@dataclass
class RunRecord:
    """One algorithm run: identity, timing, final layout and metrics."""

    graph_id: str
    algorithm: str  # "snb" or "fr"
    seed: int
    n: int
    m: int
    iterations: int
    wall_time_total: float
    wall_time_per_iteration: float
    final_layout: "Layout"
    metrics: Optional["MetricsReport"] = None
    # Layout captured at the end of the sync phase (SnB only).
    sync_end_layout: Optional["Layout"] = None
    # Sampled (iteration, Layout) pairs when trajectory capture is on.
    trajectory: list = field(default_factory=list)
