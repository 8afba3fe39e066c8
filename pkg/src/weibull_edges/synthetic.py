"""Synthetic test images."""
import numpy as np


def step_image(height=64, width=64, column=32, low=0, high=255) -> np.ndarray:
    """Vertical step: columns < `column` are `low`, the rest `high`."""
    img = np.full((height, width), low, dtype=np.uint8)
    img[:, column:] = high
    return img


def add_gaussian_noise(image, sigma, seed=0) -> np.ndarray:
    rng = np.random.default_rng(seed)
    noisy = image.astype(np.float64) + rng.normal(0.0, sigma, image.shape)
    return np.clip(np.floor(noisy + 0.5), 0, 255).astype(np.uint8)


def boundary_map(height=64, width=64, column=32) -> np.ndarray:
    """Ideal edge map for step_image: the two columns straddling the step."""
    edges = np.zeros((height, width), dtype=bool)
    edges[:, column - 1 : column + 1] = True
    return edges


def off_boundary_density(edges, column=32, tolerance=1) -> float:
    """Fraction of all pixels flagged as edges farther than `tolerance` columns from `column`."""
    edges = np.asarray(edges, dtype=bool)
    cols = np.arange(edges.shape[1])
    far = np.abs(cols - column) > tolerance
    return float(edges[:, far].sum() / edges.size)
