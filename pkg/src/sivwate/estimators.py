"""Sample-analogue estimators of the identified weighted treatment effects."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .data import ObservedDataset, OutcomeTransform
from .errors import PositivityError, WeakInstrumentError
from .nuisance import FittedNuisance, RegressionSpec, fit_arm_models

WEAK_IV_THRESHOLD = 1e-9


@dataclass
class EstimateReport:
    estimand: str
    point: float
    denominator: float
    n: int
    interval: Optional[tuple] = None  # (lower, upper, level)
    notes: dict = field(default_factory=dict)


def _check_denominator(mean_gap, threshold=WEAK_IV_THRESHOLD):
    if abs(mean_gap) < threshold:
        raise WeakInstrumentError(mean_gap, threshold)


def estimate_wald(dataset: ObservedDataset, weak_iv_threshold=WEAK_IV_THRESHOLD) -> EstimateReport:
    """Ratio of outcome-mean difference to treatment-rate difference across arms."""
    z1 = dataset.z == 1
    num = dataset.y[z1].mean() - dataset.y[~z1].mean()
    den = dataset.d[z1].mean() - dataset.d[~z1].mean()
    _check_denominator(den, weak_iv_threshold)
    return EstimateReport(estimand="wald", point=float(num / den),
                          denominator=float(den), n=dataset.n)


def _gap_sums(dataset, nuisance):
    gaps_y = nuisance.mu_y(1, dataset.x) - nuisance.mu_y(0, dataset.x)
    gaps_d = nuisance.mu_d(1, dataset.x) - nuisance.mu_d(0, dataset.x)
    return gaps_y, gaps_d


def estimate_sivwate_regression(dataset: ObservedDataset, nuisance: FittedNuisance,
                                weak_iv_threshold=WEAK_IV_THRESHOLD) -> EstimateReport:
    """Covariate-adjusted ratio of averaged fitted outcome gaps to treatment-rate gaps."""
    gaps_y, gaps_d = _gap_sums(dataset, nuisance)
    den = float(gaps_d.mean())
    _check_denominator(den, weak_iv_threshold)
    notes = {}
    if not nuisance.converged:
        notes["warning"] = "a nuisance fit did not converge"
    return EstimateReport(estimand="sivwate-regression",
                          point=float(gaps_y.sum() / gaps_d.sum()),
                          denominator=den, n=dataset.n, notes=notes)


def _internal_spec(spec_y: RegressionSpec, response) -> RegressionSpec:
    """Family rules for regressions on a transformed response."""
    if spec_y.design == "saturated":
        return spec_y
    if spec_y.family == "logistic" and np.all(np.isin(response, (0.0, 1.0))):
        return spec_y
    return RegressionSpec(family="linear", design=spec_y.design,
                          max_iterations=spec_y.max_iterations,
                          tolerance=spec_y.tolerance, ridge=spec_y.ridge)


def estimate_q_mean(dataset: ObservedDataset, nuisance: FittedNuisance,
                    g: OutcomeTransform, arm: str,
                    weak_iv_threshold=WEAK_IV_THRESHOLD) -> EstimateReport:
    """Weighted-population mean of g(Y(1)) or g(Y(0)) via arm-specific regressions
    of the treatment-masked transformed outcome."""
    if arm not in ("treated", "untreated"):
        raise ValueError(f"arm must be 'treated' or 'untreated', got {arm!r}")
    gy = g(dataset.y)
    response = dataset.d * gy if arm == "treated" else (1 - dataset.d) * gy
    spec = _internal_spec(nuisance.spec_y, response)
    m0, m1 = fit_arm_models(dataset, response, spec)
    num = float(np.mean(m1.predict(dataset.x) - m0.predict(dataset.x)))
    gaps_d = nuisance.mu_d(1, dataset.x) - nuisance.mu_d(0, dataset.x)
    den = float(gaps_d.mean())
    _check_denominator(den, weak_iv_threshold)
    sign = 1.0 if arm == "treated" else -1.0
    return EstimateReport(estimand=f"q-mean-{arm}", point=sign * num / den,
                          denominator=den, n=dataset.n)


def estimate_sivwate_weighting(dataset: ObservedDataset, propensity,
                               g: OutcomeTransform = None,
                               clamp=1e-6, max_clamp_fraction=0.01,
                               weak_iv_threshold=WEAK_IV_THRESHOLD) -> EstimateReport:
    """Signed instrument-propensity weighting estimator.

    propensity may be a FittedNuisance, a callable on the covariate matrix,
    or a precomputed array of P(Z=1|x) values.
    """
    if g is None:
        g = OutcomeTransform.identity()
    if isinstance(propensity, FittedNuisance):
        e_hat = propensity.e(dataset.x)
    elif callable(propensity):
        e_hat = np.asarray(propensity(dataset.x), dtype=float)
    else:
        e_hat = np.asarray(propensity, dtype=float)
    clamped = (e_hat < clamp) | (e_hat > 1 - clamp)
    frac = float(clamped.mean())
    if frac > max_clamp_fraction:
        raise PositivityError(
            f"propensity clamped on {frac:.1%} of rows (threshold {max_clamp_fraction:.1%})"
        )
    e_hat = np.clip(e_hat, clamp, 1 - clamp)
    kappa = (dataset.z - e_hat) / (e_hat * (1 - e_hat))
    den = float(np.mean(kappa * dataset.d))
    _check_denominator(den, weak_iv_threshold)
    point = float(np.sum(kappa * g(dataset.y)) / np.sum(kappa * dataset.d))
    notes = {"clamped_rows": int(clamped.sum())}
    return EstimateReport(estimand="sivwate-weighting", point=point,
                          denominator=den, n=dataset.n, notes=notes)


def _level_values(dataset, v):
    """Resolve a covariate name or a callable on covariate rows to per-row values."""
    if isinstance(v, str):
        return dataset.covariate(v)
    return np.array([v(row) for row in dataset.x])


def estimate_subgroup_sivwate(dataset: ObservedDataset, nuisance: FittedNuisance, v,
                              weak_iv_threshold=WEAK_IV_THRESHOLD):
    """Per-level covariate-adjusted ratio for a finite partition of the sample.

    Returns (reports, errors): levels whose denominator is degenerate land in
    errors and do not block the remaining levels.
    """
    gaps_y, gaps_d = _gap_sums(dataset, nuisance)
    levels = _level_values(dataset, v)
    reports, errors = {}, {}
    for level in dict.fromkeys(levels.tolist()):
        mask = levels == level
        den = float(gaps_d[mask].mean())
        if abs(den) < weak_iv_threshold:
            errors[level] = WeakInstrumentError(den, weak_iv_threshold)
            continue
        reports[level] = EstimateReport(
            estimand="subgroup-sivwate",
            point=float(gaps_y[mask].sum() / gaps_d[mask].sum()),
            denominator=den, n=int(mask.sum()),
            notes={"level": level},
        )
    return reports, errors


def weighted_covariate_profile(dataset: ObservedDataset, nuisance: FittedNuisance, v_list,
                               weak_iv_threshold=WEAK_IV_THRESHOLD):
    """Compare covariate means under the strength-weighted population vs unweighted.

    v_list entries are covariate names or (name, callable) pairs; returns one
    dict per entry with the weighted mean, plain mean and their ratio.
    """
    _, gaps_d = _gap_sums(dataset, nuisance)
    den = float(gaps_d.mean())
    _check_denominator(den, weak_iv_threshold)
    rows = []
    for item in v_list:
        if isinstance(item, tuple):
            name, v = item
        else:
            name, v = item, item
        values = _level_values(dataset, v)
        weighted = float(np.sum(values * gaps_d) / gaps_d.sum())
        unweighted = float(values.mean())
        ratio = weighted / unweighted if unweighted != 0 else float("nan")
        rows.append({"name": name, "weighted_mean": weighted,
                     "unweighted_mean": unweighted, "ratio": ratio})
    return rows
