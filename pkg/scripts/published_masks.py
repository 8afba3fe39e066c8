"""Print the alpha=1 Weibull gradient masks next to the published 4-decimal values."""
import numpy as np

from weibull_edges import WeibullParams, weibull_gradient_pair

PUBLISHED = {
    # third raw row printed with mixed signs; the normalized table implies all negative
    2.0: {
        "raw": [[0.6951, 1.5025, 0.9850], [0, 0, 0], [-0.3538, -0.7648, -0.5014]],
        "normalized": [[0.2184, 0.4721, 0.3095], [0, 0, 0], [-0.2184, -0.4721, -0.3095]],
    },
    3.0: {
        "raw": [[0.1550, 1.2799, 0.9149], [0.1785, 1.4738, 1.0535], [-0.2606, -2.1526, -1.5388]],
        "normalized": [[0.0307, 0.2532, 0.1810], [0.0353, 0.2915, 0.2084], [-0.0660, -0.5447, -0.3894]],
    },
}


def main():
    np.set_printoptions(precision=4, suppress=True, floatmode="fixed")
    for beta, tables in PUBLISHED.items():
        for label, raw in (("raw", True), ("normalized", False)):
            mx, _ = weibull_gradient_pair(WeibullParams(1.0, beta), raw=raw)
            dev = np.abs(mx.coefficients - np.array(tables[label])).max()
            print(f"beta={beta:g} Mx {label}  (max deviation {dev:.1e})")
            print(mx.coefficients)


if __name__ == "__main__":
    main()
