"""Edge detection with masks built from the 2D Weibull density."""
from .classic import GaussianSpec, gaussian_gradient_masks, prewitt_masks, roberts_masks, sobel_masks
from .kernel import Kernel
from .masks import (
    SamplingGrid,
    build_grid,
    normalize_gradient,
    normalize_smoothing,
    sample_mask,
    weibull_gradient_pair,
    weibull_smoothing,
)
from .metrics import EdgeMetrics, compare_edge_maps
from .pipeline import (
    Detector,
    EdgeOptions,
    GradientField,
    ThresholdRule,
    convolve,
    convolve_separable,
    detect_edges,
    gradient_field,
    smooth,
    threshold,
)
from .weibull import WeibullParams, grad_x_2d, grad_y_2d, pdf_1d, pdf_2d, pdf_mode

__version__ = "0.1.0"
