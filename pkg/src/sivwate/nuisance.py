"""Fitting of the conditional-mean and instrument-propensity functions.

Three predictors back the estimators: the outcome mean per instrument arm,
the treatment rate per instrument arm, and the instrument propensity. Each
is fit by plain least squares, Newton logistic regression, or saturated
cell means, selected by a RegressionSpec.
"""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .data import CovariateSchema, ObservedDataset
from .errors import DataValidationError, EmptyCellError

FAMILIES = ("linear", "logistic")
DESIGNS = ("intercept", "main-effects", "saturated")


@dataclass(frozen=True)
class RegressionSpec:
    family: str = "linear"
    design: str = "main-effects"
    max_iterations: int = 100
    tolerance: float = 1e-8
    ridge: float = 0.0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise DataValidationError(f"unknown family {self.family!r}")
        if self.design not in DESIGNS:
            raise DataValidationError(f"unknown design {self.design!r}")
        if self.tolerance <= 0 or self.max_iterations < 1 or self.ridge < 0:
            raise DataValidationError("invalid fit controls")


@dataclass
class FitDiagnostics:
    iterations: int = 0
    converged: bool = True
    separation: bool = False
    cells: Optional[int] = None


def design_matrix(x, schema: CovariateSchema, design: str) -> np.ndarray:
    """Intercept plus expanded covariates; categoricals are one-hot with the
    first schema level dropped."""
    x = np.asarray(x, dtype=float)
    n = x.shape[0]
    cols = [np.ones(n)]
    if design == "main-effects":
        for j, name in enumerate(schema.names):
            kind = schema.kinds[name]
            if kind == "continuous":
                cols.append(x[:, j])
            else:
                for level in kind[1:]:
                    cols.append((x[:, j] == level).astype(float))
    return np.column_stack(cols)


def _sigmoid(eta):
    return 1.0 / (1.0 + np.exp(-np.clip(eta, -500, 500)))


def _logistic_loglik(design, y, beta, ridge):
    eta = design @ beta
    return float(np.sum(y * eta - np.logaddexp(0.0, eta)) - 0.5 * ridge * beta @ beta)


def _fit_logistic(design, y, spec: RegressionSpec):
    """Newton iterations with step-halving; ridge escalates on separation."""
    ridge = spec.ridge
    for attempt in range(2):
        beta = np.zeros(design.shape[1])
        diag = FitDiagnostics(converged=False)
        ll = _logistic_loglik(design, y, beta, ridge)
        for it in range(spec.max_iterations):
            mu = _sigmoid(design @ beta)
            grad = design.T @ (y - mu) - ridge * beta
            wdiag = np.maximum(mu * (1 - mu), 1e-12)
            hess = design.T @ (wdiag[:, None] * design) + ridge * np.eye(design.shape[1])
            step = np.linalg.solve(hess, grad)
            scale = 1.0
            for _ in range(30):
                cand = beta + scale * step
                cand_ll = _logistic_loglik(design, y, cand, ridge)
                if cand_ll >= ll - 1e-14:
                    break
                scale /= 2.0
            beta = beta + scale * step
            ll = _logistic_loglik(design, y, beta, ridge)
            diag.iterations = it + 1
            if np.max(np.abs(scale * step)) < spec.tolerance:
                diag.converged = True
                break
        diverged = not diag.converged and np.max(np.abs(beta)) > 15
        if diverged and ridge == 0.0:
            ridge = 1e-6
            continue
        diag.separation = diverged or (attempt == 1)
        return beta, diag
    raise AssertionError("unreachable")


def fit_regression(design, response, spec: RegressionSpec):
    """Fit one model on an explicit design matrix; returns (coefficients, diagnostics)."""
    design = np.asarray(design, dtype=float)
    response = np.asarray(response, dtype=float)
    if design.shape[0] < 1:
        raise DataValidationError("need at least one row to fit")
    if spec.family == "logistic":
        if not np.all(np.isin(response, (0.0, 1.0))):
            raise DataValidationError("logistic family requires a 0/1 response")
        return _fit_logistic(design, response, spec)
    if spec.ridge > 0:
        p = design.shape[1]
        coef = np.linalg.solve(design.T @ design + spec.ridge * np.eye(p),
                               design.T @ response)
    else:
        coef, *_ = np.linalg.lstsq(design, response, rcond=None)
    return coef, FitDiagnostics()


class _DesignPredictor:
    """Parametric predictor: builds its design from raw covariates and applies the link."""

    def __init__(self, coef, family, design, schema, diagnostics):
        self.coef = coef
        self.family = family
        self.design = design
        self.schema = schema
        self.diagnostics = diagnostics

    def predict(self, x):
        eta = design_matrix(x, self.schema, self.design) @ self.coef
        return _sigmoid(eta) if self.family == "logistic" else eta


class _CellPredictor:
    """Saturated predictor keyed on exact covariate rows."""

    def __init__(self, means, diagnostics):
        self.means = means
        self.diagnostics = diagnostics

    def predict(self, x):
        x = np.asarray(x, dtype=float)
        uniq, inverse = np.unique(x.reshape(x.shape[0], -1), axis=0, return_inverse=True)
        values = np.empty(len(uniq))
        for i, row in enumerate(uniq):
            key = tuple(row)
            if key not in self.means:
                raise EmptyCellError(f"no training rows in cell {key}")
            values[i] = self.means[key]
        return values[inverse]


def fit_cell_means(x_rows, response) -> _CellPredictor:
    """Within-cell sample means over the distinct covariate rows."""
    x_rows = np.asarray(x_rows, dtype=float)
    response = np.asarray(response, dtype=float)
    if x_rows.shape[0] < 1:
        raise DataValidationError("need at least one row to fit")
    uniq, inverse = np.unique(x_rows.reshape(x_rows.shape[0], -1), axis=0,
                              return_inverse=True)
    sums = np.bincount(inverse, weights=response, minlength=len(uniq))
    counts = np.bincount(inverse, minlength=len(uniq))
    means = dict(zip(map(tuple, uniq), sums / counts))
    return _CellPredictor(means, FitDiagnostics(cells=len(means)))


def fit_predictor(x, response, spec: RegressionSpec, schema: CovariateSchema):
    if spec.design == "saturated":
        return fit_cell_means(x, response)
    design = design_matrix(x, schema, spec.design)
    coef, diag = fit_regression(design, response, spec)
    return _DesignPredictor(coef, spec.family, spec.design, schema, diag)


@dataclass
class FittedNuisance:
    """The three fitted functions the estimators evaluate through.

    Outcome and treatment models are fit separately on each instrument arm;
    the propensity model is fit on all rows.
    """

    y_models: tuple
    d_models: tuple
    e_model: object
    schema: CovariateSchema
    spec_y: RegressionSpec
    spec_d: RegressionSpec
    diagnostics: dict = field(default_factory=dict)

    def mu_y(self, z, x):
        return self.y_models[int(z)].predict(x)

    def mu_d(self, z, x):
        return np.clip(self.d_models[int(z)].predict(x), 0.0, 1.0)

    def e(self, x):
        return np.clip(self.e_model.predict(x), 0.0, 1.0)

    @property
    def converged(self):
        return all(d.converged for d in self.diagnostics.values())


def fit_arm_models(dataset: ObservedDataset, response, spec: RegressionSpec):
    """Fit one model per instrument arm of the given response; returns (z=0, z=1)."""
    response = np.asarray(response, dtype=float)
    models = []
    for z in (0, 1):
        mask = dataset.z == z
        models.append(fit_predictor(dataset.x[mask], response[mask], spec, dataset.schema))
    return tuple(models)


def fit_nuisance(dataset: ObservedDataset,
                 spec_y: RegressionSpec,
                 spec_d: RegressionSpec,
                 spec_z: RegressionSpec) -> FittedNuisance:
    y_models = fit_arm_models(dataset, dataset.y, spec_y)
    d_models = fit_arm_models(dataset, dataset.d, spec_d)
    e_model = fit_predictor(dataset.x, dataset.z, spec_z, dataset.schema)
    diagnostics = {
        "y_z0": y_models[0].diagnostics,
        "y_z1": y_models[1].diagnostics,
        "d_z0": d_models[0].diagnostics,
        "d_z1": d_models[1].diagnostics,
        "e": e_model.diagnostics,
    }
    return FittedNuisance(
        y_models=y_models,
        d_models=d_models,
        e_model=e_model,
        schema=dataset.schema,
        spec_y=spec_y,
        spec_d=spec_d,
        diagnostics=diagnostics,
    )
