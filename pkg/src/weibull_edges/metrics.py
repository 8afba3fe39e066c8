"""Edge-map comparison metrics."""
from dataclasses import asdict, dataclass

import numpy as np

from .errors import SizeError


@dataclass(frozen=True)
class EdgeMetrics:
    density_candidate: float
    density_reference: float
    precision: float
    recall: float
    f1: float
    mean_run_length_candidate: float
    mean_run_length_reference: float

    def to_dict(self) -> dict:
        return asdict(self)


def mean_run_length(edges) -> float:
    """Mean length of maximal horizontal runs of edge pixels; 0 if there are none."""
    e = np.asarray(edges, dtype=bool).astype(np.int8)
    padded = np.pad(e, ((0, 0), (1, 1)))
    starts = np.count_nonzero(np.diff(padded, axis=1) == 1)
    if starts == 0:
        return 0.0
    return float(e.sum() / starts)


def compare_edge_maps(candidate, reference) -> EdgeMetrics:
    cand = np.asarray(candidate, dtype=bool)
    ref = np.asarray(reference, dtype=bool)
    if cand.shape != ref.shape:
        raise SizeError(f"edge maps differ in size: {cand.shape} vs {ref.shape}")
    tp = np.count_nonzero(cand & ref)
    n_cand, n_ref = np.count_nonzero(cand), np.count_nonzero(ref)
    precision = tp / n_cand if n_cand else 0.0
    recall = tp / n_ref if n_ref else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall > 0 else 0.0
    return EdgeMetrics(
        density_candidate=n_cand / cand.size,
        density_reference=n_ref / ref.size,
        precision=float(precision),
        recall=float(recall),
        f1=float(f1),
        mean_run_length_candidate=mean_run_length(cand),
        mean_run_length_reference=mean_run_length(ref),
    )
