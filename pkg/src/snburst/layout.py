"""Layout container and normalization shared by both algorithms and the metrics."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class DegenerateLayoutError(ValueError):
    """All vertices coincide; the layout cannot be normalized."""


class NumericError(ArithmeticError):
    """An internal numeric invariant (finiteness) was violated."""


@dataclass(frozen=True)
class Layout:
    """Per-vertex 2D coordinates at one iteration.

    `coords` is an (n, 2) float64 array, copied and frozen on construction.
    All coordinates must be finite.
    """

    coords: np.ndarray
    iteration: int = 0

    def __post_init__(self):
        arr = np.array(self.coords, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 2 or arr.shape[0] < 1:
            raise ValueError(f"coords must be (n, 2), got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NumericError("non-finite coordinate in layout")
        if self.iteration < 0:
            raise ValueError("iteration must be non-negative")
        arr.flags.writeable = False
        object.__setattr__(self, "coords", arr)

    def __len__(self) -> int:
        return self.coords.shape[0]


def normalize_layout(layout: Layout) -> Layout:
    """Scale and translate so the larger bounding-box side spans [0, 1].

    Aspect ratio is preserved; applied before rendering and before metrics.
    Idempotent for already-normalized layouts.
    """
    lo = layout.coords.min(axis=0)
    hi = layout.coords.max(axis=0)
    side = float(max(hi[0] - lo[0], hi[1] - lo[1]))
    if side == 0.0:
        raise DegenerateLayoutError("all vertices coincide")
    return Layout((layout.coords - lo) / side, layout.iteration)
