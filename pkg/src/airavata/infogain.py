"""Entropy and mutual information over categorical data, in bits.

Mutual information uses plug-in (relative frequency) probabilities with
no smoothing; zero-count cells contribute nothing to the sum.
"""

from __future__ import annotations

from typing import Collection, Sequence

import numpy as np

from .errors import ContractError
from .learning import Dataset

NORMALIZATION_TOL = 1e-9


def entropy(dist: Sequence[float]) -> float:
    """Shannon entropy in bits; 0 * log2(0) counts as 0."""
    p = np.asarray(dist, dtype=float)
    if p.size == 0:
        raise ContractError("distribution is empty")
    if np.any(p < 0):
        raise ContractError("distribution has a negative entry")
    if abs(float(p.sum()) - 1.0) > NORMALIZATION_TOL:
        raise ContractError(f"distribution sums to {float(p.sum()):.12g}, expected 1")
    nz = p[p > 0]
    return float(-(nz * np.log2(nz)).sum())


def _crosstab(data: Dataset, x: str, y: str) -> np.ndarray:
    xv = data.variable(x)
    yv = data.variable(y)
    xi = data.column(x)
    yi = data.column(y)
    flat = np.bincount(xi * yv.cardinality + yi, minlength=xv.cardinality * yv.cardinality)
    return flat.reshape(xv.cardinality, yv.cardinality).astype(float)


def mutual_information(data: Dataset, x: str, y: str) -> float:
    """I(X;Y) from empirical joint frequencies, in bits."""
    if not data.rows:
        raise ContractError("mutual information needs at least one row")
    joint = _crosstab(data, x, y)
    n = joint.sum()
    pxy = joint / n
    px = pxy.sum(axis=1, keepdims=True)
    py = pxy.sum(axis=0, keepdims=True)
    mask = pxy > 0
    ratio = np.ones_like(pxy)
    np.divide(pxy, px * py, out=ratio, where=mask)
    bits = float((pxy[mask] * np.log2(ratio[mask])).sum())
    # the plug-in estimate is non-negative; rounding can leave -1e-17
    return max(bits, 0.0)


def infogain_report(
    data: Dataset, target: str, exclude: Collection[str] = ()
) -> list[tuple[str, float]]:
    """Mutual information of every other column against the target.

    Columns named in exclude are skipped. Sorted descending by bits,
    ties by ascending name.
    """
    data.variable(target)
    skip = set(exclude) | {target}
    pairs = [
        (v.name, mutual_information(data, v.name, target))
        for v in data.variables
        if v.name not in skip
    ]
    return sorted(pairs, key=lambda item: (-item[1], item[0]))
