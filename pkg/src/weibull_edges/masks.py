"""Weibull smoothing and gradient masks sampled on a square grid."""
import warnings
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateMaskError, InvalidGridError, KernelKindError, NonPositiveGridWarning
from .kernel import Kernel
from .weibull import WeibullParams, grad_x_2d, grad_y_2d, pdf_2d, pdf_mode

# Reproduces the printed alpha=1 masks for beta=2 and beta=3 to 4 decimals.
DEFAULT_CENTER = (2**-0.5, 2**-0.5)
DEFAULT_SPACING = 0.5

_SAMPLERS = {"smoothing": pdf_2d, "gradient-x": grad_x_2d, "gradient-y": grad_y_2d}


@dataclass(frozen=True)
class SamplingGrid:
    center_x: float
    center_y: float
    spacing_x: float
    spacing_y: float
    half_width: int

    def __post_init__(self):
        if int(self.half_width) != self.half_width or self.half_width < 1:
            raise InvalidGridError(f"half_width must be an integer >= 1, got {self.half_width}")
        if not (self.spacing_x > 0 and self.spacing_y > 0):
            raise InvalidGridError(f"spacing must be positive, got ({self.spacing_x}, {self.spacing_y})")
        if not (self.center_x > 0 and self.center_y > 0):
            raise InvalidGridError(f"center must be positive, got ({self.center_x}, {self.center_y})")

    @property
    def size(self) -> int:
        return 2 * self.half_width + 1

    @property
    def x_coords(self) -> np.ndarray:
        return _axis(self.center_x, self.spacing_x, self.half_width)

    @property
    def y_coords(self) -> np.ndarray:
        return _axis(self.center_y, self.spacing_y, self.half_width)

    @property
    def has_nonpositive(self) -> bool:
        return bool((self.x_coords <= 0).any() or (self.y_coords <= 0).any())


def _axis(center, spacing, half_width):
    return center + spacing * np.arange(-half_width, half_width + 1, dtype=np.float64)


def build_grid(half_width: int, spacing=DEFAULT_SPACING, center=DEFAULT_CENTER) -> SamplingGrid:
    """Grid of 2*half_width+1 points per axis around `center`.

    `spacing` is a single increment or an (x, y) pair. Warns with
    NonPositiveGridWarning when coordinates leave the positive quadrant.
    """
    sx, sy = (spacing, spacing) if np.ndim(spacing) == 0 else spacing
    grid = SamplingGrid(float(center[0]), float(center[1]), float(sx), float(sy), half_width)
    if grid.has_nonpositive:
        warnings.warn(
            f"{grid.size}x{grid.size} grid reaches nonpositive coordinates "
            f"(min x {grid.x_coords[0]:.6g}, min y {grid.y_coords[0]:.6g}); those samples are 0",
            NonPositiveGridWarning,
            stacklevel=2,
        )
    return grid


def mode_center(params: WeibullParams) -> tuple:
    """Alternative grid center at the density mode (not the default)."""
    m = pdf_mode(params)
    return (m, m)


def _describe(params, grid):
    return (
        f"alpha {params.alpha!r} beta {params.beta!r}",
        f"center {grid.center_x!r} {grid.center_y!r} spacing {grid.spacing_x!r} {grid.spacing_y!r}",
    )


def sample_mask(kind: str, params: WeibullParams, grid: SamplingGrid) -> Kernel:
    if kind not in _SAMPLERS:
        raise KernelKindError(f"unknown mask kind {kind!r}")
    xs = grid.x_coords[:, None]
    ys = grid.y_coords[None, :]
    coeffs = _SAMPLERS[kind](xs, ys, params)
    return Kernel(coeffs, kind, normalized=False, metadata=_describe(params, grid))


def normalize_smoothing(raw: Kernel) -> Kernel:
    if raw.kind != "smoothing":
        raise KernelKindError(f"expected a smoothing kernel, got {raw.kind}")
    total = raw.coefficients.sum()
    if not total > 0:
        raise DegenerateMaskError("smoothing mask has no positive mass")
    return replace(raw, coefficients=raw.coefficients / total, normalized=True)


def normalize_gradient(raw: Kernel) -> Kernel:
    """Scale positive entries to sum 1 and negative entries to sum -1."""
    if raw.kind not in ("gradient-x", "gradient-y"):
        raise KernelKindError(f"expected a gradient kernel, got {raw.kind}")
    c = raw.coefficients
    pos = c[c > 0].sum()
    neg = -c[c < 0].sum()
    if not (pos > 0 and neg > 0):
        raise DegenerateMaskError(
            f"{raw.kind} mask needs both positive and negative entries "
            f"(positive sum {pos:.6g}, negative sum {-neg:.6g})"
        )
    out = np.where(c > 0, c / pos, np.where(c < 0, c / neg, c))
    return replace(raw, coefficients=out, normalized=True)


def weibull_smoothing(params: WeibullParams, half_width=1, spacing=DEFAULT_SPACING, center=DEFAULT_CENTER) -> Kernel:
    grid = build_grid(half_width, spacing, center)
    return normalize_smoothing(sample_mask("smoothing", params, grid))


def weibull_gradient_pair(params: WeibullParams, half_width=1, spacing=DEFAULT_SPACING, center=DEFAULT_CENTER, raw=False):
    """(Mx, My) gradient masks, normalized unless raw=True."""
    grid = build_grid(half_width, spacing, center)
    mx = sample_mask("gradient-x", params, grid)
    my = sample_mask("gradient-y", params, grid)
    if raw:
        return mx, my
    return normalize_gradient(mx), normalize_gradient(my)


def half_width_for(size: int) -> int:
    if size < 3 or size % 2 == 0:
        raise InvalidGridError(f"size must be odd and >= 3, got {size}")
    return size // 2


def resolve_center(params: WeibullParams, center=None, at_mode=False):
    if at_mode:
        return mode_center(params)
    return DEFAULT_CENTER if center is None else tuple(center)


__all__ = [
    "DEFAULT_CENTER",
    "DEFAULT_SPACING",
    "SamplingGrid",
    "build_grid",
    "half_width_for",
    "mode_center",
    "normalize_gradient",
    "normalize_smoothing",
    "resolve_center",
    "sample_mask",
    "weibull_gradient_pair",
    "weibull_smoothing",
]
