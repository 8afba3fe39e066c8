"""Immutable square convolution kernel."""
from dataclasses import dataclass, field, replace

import numpy as np

KINDS = ("smoothing", "gradient-x", "gradient-y")
_TRANSPOSED_KIND = {"smoothing": "smoothing", "gradient-x": "gradient-y", "gradient-y": "gradient-x"}


@dataclass(frozen=True, eq=False)
class Kernel:
    """Square coefficient matrix.

    Row index follows the first sampling coordinate (x), column index the
    second (y). When applied to an image, rows map to image rows.
    """

    coefficients: np.ndarray
    kind: str
    normalized: bool = False
    metadata: tuple = field(default=())

    def __post_init__(self):
        arr = np.array(self.coefficients, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.size == 0:
            raise ValueError(f"kernel must be a nonempty square matrix, got shape {arr.shape}")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kernel kind {self.kind!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "coefficients", arr)
        object.__setattr__(self, "metadata", tuple(self.metadata))

    @property
    def size(self) -> int:
        return self.coefficients.shape[0]

    @property
    def positive_sum(self) -> float:
        c = self.coefficients
        return float(c[c > 0].sum())

    @property
    def negative_sum(self) -> float:
        c = self.coefficients
        return float(c[c < 0].sum())

    def transpose(self) -> "Kernel":
        return replace(self, coefficients=self.coefficients.T, kind=_TRANSPOSED_KIND[self.kind])

    def scaled(self, factor: float) -> "Kernel":
        return replace(self, coefficients=self.coefficients * factor, normalized=False)

    def __repr__(self):
        flag = "normalized" if self.normalized else "raw"
        return f"Kernel({self.kind}, {self.size}x{self.size}, {flag})"
