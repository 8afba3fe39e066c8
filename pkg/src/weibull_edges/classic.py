"""Classical gradient operators used as baselines."""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidGridError
from .kernel import Kernel
from .masks import normalize_gradient


def _pair(mx, my, **kw):
    return Kernel(mx, "gradient-x", **kw), Kernel(my, "gradient-y", **kw)


def sobel_masks():
    sx = np.array([[-1, 0, 1], [-2, 0, 2], [-1, 0, 1]], dtype=np.float64)
    return _pair(sx, sx.T, metadata=("operator sobel",))


def prewitt_masks():
    px = np.array([[-1, 0, 1], [-1, 0, 1], [-1, 0, 1]], dtype=np.float64)
    return _pair(px, px.T, metadata=("operator prewitt",))


def roberts_masks():
    """Roberts cross pair. Even-sized, so the output is anchored at the top-left tap."""
    r1 = np.array([[1, 0], [0, -1]], dtype=np.float64)
    r2 = np.rot90(r1, -1)  # [[0, 1], [-1, 0]]
    return _pair(r1, r2, metadata=("operator roberts",))


@dataclass(frozen=True)
class GaussianSpec:
    sigma: float = 1.0
    half_width: int = 1

    def __post_init__(self):
        if not self.sigma > 0:
            raise InvalidGridError(f"sigma must be positive, got {self.sigma}")
        if int(self.half_width) != self.half_width or self.half_width < 1:
            raise InvalidGridError(f"half_width must be an integer >= 1, got {self.half_width}")


def gaussian_gradient_raw(spec: GaussianSpec):
    h, s2 = spec.half_width, spec.sigma**2
    i = np.arange(-h, h + 1, dtype=np.float64)[:, None]
    j = np.arange(-h, h + 1, dtype=np.float64)[None, :]
    gx = -i / s2 * np.exp(-(i**2 + j**2) / (2 * s2))
    return _pair(gx, gx.T, metadata=(f"operator gaussian sigma {spec.sigma!r}",))


def gaussian_gradient_masks(spec: GaussianSpec = GaussianSpec()):
    """First-derivative-of-Gaussian pair on integer offsets, two-sided normalized."""
    gx, gy = gaussian_gradient_raw(spec)
    return normalize_gradient(gx), normalize_gradient(gy)
