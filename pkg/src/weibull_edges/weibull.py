"""2D Weibull density and its first partial derivatives.

All functions accept scalars or numpy arrays. Scalars in, Python floats out.
The density is zero for x <= 0 (the boundary belongs to the zero branch).
"""
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParamsError, NoInteriorModeError


@dataclass(frozen=True)
class WeibullParams:
    alpha: float = 1.0
    beta: float = 2.0

    def __post_init__(self):
        if not (self.alpha > 0 and np.isfinite(self.alpha)):
            raise InvalidParamsError(f"alpha must be positive, got {self.alpha}")
        if not (self.beta > 0 and np.isfinite(self.beta)):
            raise InvalidParamsError(f"beta must be positive, got {self.beta}")


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def _support(x):
    x = np.asarray(x, dtype=np.float64)
    pos = x > 0
    # placeholder 1.0 keeps negative powers finite off the support
    return pos, np.where(pos, x, 1.0)


def _pdf_1d(x, params):
    a, b = params.alpha, params.beta
    pos, xs = _support(x)
    return np.where(pos, a * b * xs ** (b - 1) * np.exp(-a * xs**b), 0.0)


def _dpdf_1d(x, params):
    # d/dx of the 1D density: ab x^(b-2) e^(-a x^b) (b - 1 - ab x^b)
    a, b = params.alpha, params.beta
    pos, xs = _support(x)
    xb = xs**b
    # x^(b-2) -> inf as x -> 0+ for b < 2, which is the true limit
    with np.errstate(over="ignore"):
        val = a * b * xs ** (b - 2) * np.exp(-a * xb) * (b - 1 - a * b * xb)
    return np.where(pos, val, 0.0)


def pdf_1d(x, params: WeibullParams):
    """Weibull density a*b*x^(b-1)*exp(-a*x^b) for x > 0, else 0."""
    return _out(_pdf_1d(x, params))


def pdf_2d(x, y, params: WeibullParams):
    """Product density pdf_1d(x) * pdf_1d(y)."""
    return _out(_pdf_1d(x, params) * _pdf_1d(y, params))


def grad_x_2d(x, y, params: WeibullParams):
    """Partial derivative of pdf_2d with respect to x.

    a^2 b^2 x^(b-2) y^(b-1) exp(-a(x^b + y^b)) (b - 1 - a b x^b) on x, y > 0.
    """
    return _out(_dpdf_1d(x, params) * _pdf_1d(y, params))


def grad_y_2d(x, y, params: WeibullParams):
    """Partial derivative of pdf_2d with respect to y (mirror of grad_x_2d)."""
    return grad_x_2d(y, x, params)


def pdf_mode(params: WeibullParams) -> float:
    """Maximizer ((b-1)/(a b))^(1/b) of the 1D density; requires b > 1."""
    a, b = params.alpha, params.beta
    if b <= 1:
        raise NoInteriorModeError(f"no interior mode for beta={b} <= 1")
    return ((b - 1) / (a * b)) ** (1 / b)
