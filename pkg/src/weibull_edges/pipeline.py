"""Convolution, gradient fields, thresholding and the edge-detection pipeline.

Images are numpy arrays: uint8 (H, W) for gray images, float64 (H, W) for
real planes and bool (H, W) for edge maps. Masks are applied as written
(correlation, no flip), so output(r, c) = sum_ij k[i, j] * f(r + i - h, c + j - h)
with h = (size - 1) // 2. Even-sized kernels are therefore anchored at their
top-left tap.
"""
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .classic import GaussianSpec, gaussian_gradient_masks, prewitt_masks, roberts_masks, sobel_masks
from .errors import InvalidRuleError, KernelKindError, KernelSizeError, WeibullEdgesError
from .kernel import Kernel
from .masks import DEFAULT_CENTER, DEFAULT_SPACING, weibull_gradient_pair
from .weibull import WeibullParams

BORDER_POLICIES = {"replicate": "edge", "reflect": "reflect", "zero": "constant"}
NORMS = ("l2", "l1")
DETECTORS = ("weibull", "sobel", "prewitt", "roberts", "gaussian")


def as_gray(image) -> np.ndarray:
    arr = np.asarray(image)
    if arr.ndim != 2 or arr.size == 0:
        raise WeibullEdgesError(f"gray image must be a nonempty 2D array, got shape {arr.shape}")
    if arr.dtype != np.uint8:
        if arr.dtype.kind not in "iub" or arr.min() < 0 or arr.max() > 255:
            raise WeibullEdgesError("gray image intensities must be integers in [0, 255]")
        arr = arr.astype(np.uint8)
    return arr


def _coefficients(kernel) -> np.ndarray:
    if isinstance(kernel, Kernel):
        return kernel.coefficients
    k = np.asarray(kernel, dtype=np.float64)
    if k.ndim != 2 or k.size == 0:
        raise KernelSizeError(f"kernel must be a nonempty 2D array, got shape {k.shape}")
    return k


def pad_plane(plane: np.ndarray, kshape, border: str) -> np.ndarray:
    try:
        mode = BORDER_POLICIES[border]
    except KeyError:
        raise WeibullEdgesError(f"unknown border policy {border!r}") from None
    widths = [((k - 1) // 2, k - 1 - (k - 1) // 2) for k in kshape]
    return np.pad(plane, widths, mode=mode)


def _check_fits(shape, kshape):
    if kshape[0] > shape[0] or kshape[1] > shape[1]:
        raise KernelSizeError(f"kernel {kshape[0]}x{kshape[1]} is larger than image {shape[1]}x{shape[0]}")


def _correlate_rows(padded, k, r0, r1, width):
    out = np.zeros((r1 - r0, width))
    # fixed tap order keeps every pixel's sum identical across row partitions
    for i in range(k.shape[0]):
        for j in range(k.shape[1]):
            out += k[i, j] * padded[r0 + i : r1 + i, j : j + width]
    return out


def convolve(plane, kernel, border: str = "replicate", workers: int = 1) -> np.ndarray:
    """Apply `kernel` to `plane` as a sum of products over each neighborhood.

    With workers > 1 the output rows are split across threads; the result is
    bit-identical to the sequential path.
    """
    plane = np.asarray(plane, dtype=np.float64)
    k = _coefficients(kernel)
    _check_fits(plane.shape, k.shape)
    padded = pad_plane(plane, k.shape, border)
    height, width = plane.shape
    workers = max(1, min(int(workers), height))
    if workers == 1:
        return _correlate_rows(padded, k, 0, height, width)
    bounds = np.linspace(0, height, workers + 1).astype(int)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda ab: _correlate_rows(padded, k, ab[0], ab[1], width), zip(bounds[:-1], bounds[1:]))
        return np.vstack(list(parts))


def rank1_factors(kernel, rtol: float = 1e-12):
    """Split a rank-1 kernel into (column, row) vectors with kernel = outer(column, row)."""
    k = _coefficients(kernel)
    p, q = np.unravel_index(np.argmax(np.abs(k)), k.shape)
    if k[p, q] == 0:
        return np.zeros(k.shape[0]), np.zeros(k.shape[1])
    col = k[:, q].copy()
    row = k[p, :] / k[p, q]
    if not np.allclose(np.outer(col, row), k, rtol=0, atol=rtol * abs(k[p, q])):
        raise KernelSizeError("kernel is not rank 1")
    return col, row


def convolve_separable(plane, column, row, border: str = "replicate") -> np.ndarray:
    """Same contract as convolve() for the kernel outer(column, row), in two 1D passes."""
    plane = np.asarray(plane, dtype=np.float64)
    column = np.asarray(column, dtype=np.float64)
    row = np.asarray(row, dtype=np.float64)
    kshape = (column.size, row.size)
    _check_fits(plane.shape, kshape)
    padded = pad_plane(plane, kshape, border)
    height, width = plane.shape
    tmp = np.zeros((height, padded.shape[1]))
    for i, c in enumerate(column):
        tmp += c * padded[i : i + height, :]
    out = np.zeros((height, width))
    for j, r in enumerate(row):
        out += r * tmp[:, j : j + width]
    return out


@dataclass(frozen=True, eq=False)
class GradientField:
    gx: np.ndarray
    gy: np.ndarray
    magnitude: np.ndarray
    direction: np.ndarray


def _flush_roundoff(response, k, peak):
    # a zero-sum mask on flat input leaves only accumulated rounding; clear it
    bound = 4 * k.size * np.finfo(np.float64).eps * np.abs(k).sum() * peak
    response[np.abs(response) <= bound] = 0.0
    return response


def gradient_field(image, mx, my, border: str = "replicate", norm: str = "l2", workers: int = 1) -> GradientField:
    plane = as_gray(image).astype(np.float64)
    kx, ky = _coefficients(mx), _coefficients(my)
    if kx.shape != ky.shape:
        raise KernelSizeError(f"mask shapes differ: {kx.shape} vs {ky.shape}")
    if norm not in NORMS:
        raise WeibullEdgesError(f"unknown norm {norm!r}")
    peak = float(plane.max())
    gx = _flush_roundoff(convolve(plane, kx, border, workers), kx, peak)
    gy = _flush_roundoff(convolve(plane, ky, border, workers), ky, peak)
    if norm == "l2":
        magnitude = np.hypot(gx, gy)
    else:
        magnitude = np.abs(gx) + np.abs(gy)
    direction = np.arctan2(gy, gx)
    direction[(gx == 0) & (gy == 0)] = 0.0
    direction[direction <= -math.pi] = math.pi
    return GradientField(gx, gy, magnitude, direction)


@dataclass(frozen=True)
class ThresholdRule:
    """Either an absolute level or a nearest-rank percentile of the magnitudes."""

    kind: str = "percentile"
    value: float = 90.0

    def __post_init__(self):
        if self.kind == "absolute":
            if not self.value >= 0:
                raise InvalidRuleError(f"absolute threshold must be nonnegative, got {self.value}")
        elif self.kind == "percentile":
            if not 0 < self.value < 100:
                raise InvalidRuleError(f"percentile must lie in (0, 100), got {self.value}")
        else:
            raise InvalidRuleError(f"unknown threshold rule {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "ThresholdRule":
        """Parse `p90` or `absolute:40`."""
        try:
            if text.startswith("absolute:"):
                return cls("absolute", float(text.split(":", 1)[1]))
            if text.startswith("p"):
                return cls("percentile", float(text[1:]))
        except ValueError:
            pass
        raise InvalidRuleError(f"cannot parse threshold {text!r}; use p<percentile> or absolute:<value>")

    def __str__(self):
        return f"absolute:{self.value:g}" if self.kind == "absolute" else f"p{self.value:g}"


def resolve_threshold(magnitude, rule: ThresholdRule) -> float:
    if rule.kind == "absolute":
        return float(rule.value)
    values = np.sort(np.asarray(magnitude, dtype=np.float64), axis=None)
    rank = max(1, math.ceil(rule.value / 100 * values.size))
    return float(values[rank - 1])


def threshold(magnitude, rule: ThresholdRule) -> np.ndarray:
    """Edge map of pixels strictly above the resolved threshold."""
    magnitude = np.asarray(magnitude, dtype=np.float64)
    return magnitude > resolve_threshold(magnitude, rule)


def round_to_gray(plane) -> np.ndarray:
    plane = np.asarray(plane, dtype=np.float64)
    rounded = np.sign(plane) * np.floor(np.abs(plane) + 0.5)
    return np.clip(rounded, 0, 255).astype(np.uint8)


def smooth(image, kernel: Kernel, border: str = "replicate", workers: int = 1) -> np.ndarray:
    if not isinstance(kernel, Kernel) or kernel.kind != "smoothing" or not kernel.normalized:
        raise KernelKindError("smooth() needs a normalized smoothing kernel")
    plane = as_gray(image).astype(np.float64)
    return round_to_gray(convolve(plane, kernel, border, workers))


def magnitude_to_image(magnitude) -> np.ndarray:
    """Rescale so the maximum maps to 255; an all-zero plane stays zero."""
    magnitude = np.asarray(magnitude, dtype=np.float64)
    peak = magnitude.max()
    if peak <= 0:
        return np.zeros(magnitude.shape, dtype=np.uint8)
    return round_to_gray(magnitude * (255.0 / peak))


@dataclass(frozen=True)
class Detector:
    name: str = "weibull"
    params: WeibullParams = field(default_factory=WeibullParams)
    half_width: int = 1
    spacing: object = DEFAULT_SPACING
    center: tuple = DEFAULT_CENTER
    sigma: float = 1.0

    def __post_init__(self):
        if self.name not in DETECTORS:
            raise WeibullEdgesError(f"unknown detector {self.name!r}; choose from {', '.join(DETECTORS)}")

    def masks(self):
        if self.name == "weibull":
            return weibull_gradient_pair(self.params, self.half_width, self.spacing, self.center)
        if self.name == "sobel":
            return sobel_masks()
        if self.name == "prewitt":
            return prewitt_masks()
        if self.name == "roberts":
            return roberts_masks()
        return gaussian_gradient_masks(GaussianSpec(self.sigma, self.half_width))


@dataclass(frozen=True)
class EdgeOptions:
    pre_smooth: Kernel | None = None
    border: str = "replicate"
    norm: str = "l2"
    rule: ThresholdRule = field(default_factory=ThresholdRule)
    workers: int = 1


def detect_edges(image, detector: Detector = Detector(), options: EdgeOptions = EdgeOptions()):
    """Optional smoothing, then gradient field, then threshold. Returns (edges, field)."""
    image = as_gray(image)
    if options.pre_smooth is not None:
        image = smooth(image, options.pre_smooth, options.border, options.workers)
    mx, my = detector.masks()
    grad = gradient_field(image, mx, my, options.border, options.norm, options.workers)
    return threshold(grad.magnitude, options.rule), grad
