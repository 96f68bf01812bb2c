"""Percentile bootstrap with optional stratified resampling.

Replicate r always uses a generator seeded from (seed, r), so results are
identical for any execution order or worker count.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional, Union

import numpy as np

from .data import ObservedDataset
from .errors import DataValidationError, SivwateError, UnstableBootstrapError

MAX_FAILURE_FRACTION = 0.2


@dataclass(frozen=True)
class BootstrapPlan:
    replicates: int = 1000
    seed: int = 0
    level: float = 0.95
    strata: Optional[Union[str, Callable]] = None
    workers: int = 1

    def __post_init__(self):
        if self.replicates < 2:
            raise DataValidationError("need at least 2 bootstrap replicates")
        if not 0 < self.level < 1:
            raise DataValidationError("confidence level must be in (0, 1)")


def quantile(values, q):
    """Empirical quantile with linear interpolation between order statistics."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise DataValidationError("quantile of an empty list")
    if not 0 <= q <= 1:
        raise DataValidationError(f"quantile fraction {q} outside [0, 1]")
    return float(np.quantile(values, q, method="linear"))


def _stratum_labels(dataset, strata):
    if strata is None:
        return np.zeros(dataset.n, dtype=int)
    if isinstance(strata, str):
        return dataset.covariate(strata)
    return np.array([strata(row) for row in dataset.x])


def _stratum_indices(dataset, strata):
    labels = _stratum_labels(dataset, strata)
    groups = []
    for level in dict.fromkeys(labels.tolist()):
        groups.append(np.nonzero(labels == level)[0])
    return groups


def bootstrap_replicates(statistics, dataset: ObservedDataset, plan: BootstrapPlan):
    """Evaluate each statistic on plan.replicates stratified resamples.

    Returns (values, failures): values has one row per successful replicate
    and one column per statistic; a replicate where any statistic raises a
    package error is dropped and counted.
    """
    groups = _stratum_indices(dataset, plan.strata)

    def one(r):
        rng = np.random.default_rng((plan.seed, r))
        idx = np.concatenate([rng.choice(g, size=len(g), replace=True) for g in groups])
        resample = dataset.take(idx)
        try:
            return [float(stat(resample)) for stat in statistics]
        except SivwateError:
            return None

    if plan.workers > 1:
        with ThreadPoolExecutor(max_workers=plan.workers) as pool:
            results = list(pool.map(one, range(plan.replicates)))
    else:
        results = [one(r) for r in range(plan.replicates)]

    values = [row for row in results if row is not None]
    failures = plan.replicates - len(values)
    if failures > MAX_FAILURE_FRACTION * plan.replicates:
        raise UnstableBootstrapError(
            f"{failures}/{plan.replicates} bootstrap replicates failed"
        )
    return np.asarray(values, dtype=float), failures


def percentile_ci(statistic, dataset: ObservedDataset, plan: BootstrapPlan):
    """Equal-tailed percentile interval of the replicate statistic distribution.

    Returns (lower, upper, failures).
    """
    values, failures = bootstrap_replicates([statistic], dataset, plan)
    alpha = 1 - plan.level
    return (quantile(values[:, 0], alpha / 2),
            quantile(values[:, 0], 1 - alpha / 2),
            failures)


def bootstrap_se(statistic, dataset: ObservedDataset, plan: BootstrapPlan):
    """Standard deviation of the replicate statistic distribution."""
    values, _ = bootstrap_replicates([statistic], dataset, plan)
    return float(np.std(values[:, 0], ddof=1))


def bonferroni_bounds_ci(lower_stat, upper_stat, dataset: ObservedDataset,
                         plan: BootstrapPlan):
    """Conservative interval for a bound pair: lower tail of the bootstrapped
    lower bound with the upper tail of the bootstrapped upper bound."""
    values, _ = bootstrap_replicates([lower_stat, upper_stat], dataset, plan)
    alpha = 1 - plan.level
    return (quantile(values[:, 0], alpha / 2),
            quantile(values[:, 1], 1 - alpha / 2))
