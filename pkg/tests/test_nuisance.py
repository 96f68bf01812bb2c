import numpy as np
import pytest

from sivwate import (
    CovariateSchema,
    EmptyCellError,
    RegressionSpec,
    fit_cell_means,
    fit_nuisance,
    fit_regression,
    random_dgp,
    sample_dataset,
)
from sivwate.nuisance import design_matrix, fit_predictor


def test_intercept_only_logistic_recovers_sample_mean():
    design = np.ones((4, 1))
    y = np.array([1.0, 1.0, 0.0, 0.0])
    coef, diag = fit_regression(design, y, RegressionSpec(family="logistic"))
    p = 1.0 / (1.0 + np.exp(-coef[0]))
    assert abs(p - 0.5) < 1e-10
    assert diag.converged


def test_linear_fit_is_exact_on_a_line():
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = 2.0 * x[:, 0] - 1.0
    schema = CovariateSchema(names=("a",))
    design = design_matrix(x, schema, "main-effects")
    coef, _ = fit_regression(design, y, RegressionSpec(family="linear"))
    np.testing.assert_allclose(coef, [-1.0, 2.0], atol=1e-12)


def test_logistic_recovers_coefficients_within_sampling_error():
    rng = np.random.default_rng(7)
    n = 5000
    x = rng.normal(size=(n, 1))
    beta = np.array([-0.3, 0.8])
    eta = beta[0] + beta[1] * x[:, 0]
    y = (rng.random(n) < 1.0 / (1.0 + np.exp(-eta))).astype(float)
    schema = CovariateSchema(names=("a",))
    design = design_matrix(x, schema, "main-effects")
    coef, diag = fit_regression(design, y, RegressionSpec(family="logistic"))
    assert diag.converged and not diag.separation
    # standard errors from the observed information at the fit
    mu = 1.0 / (1.0 + np.exp(-(design @ coef)))
    info = design.T @ (design * (mu * (1 - mu))[:, None])
    se = np.sqrt(np.diag(np.linalg.inv(info)))
    assert np.all(np.abs(coef - beta) < 3 * se)


def test_separation_escalates_ridge_instead_of_diverging():
    # perfectly separated data: plain Newton would push the slope to infinity
    x = np.array([[0.0], [1.0], [2.0], [3.0]])
    y = np.array([0.0, 0.0, 1.0, 1.0])
    schema = CovariateSchema(names=("a",))
    design = design_matrix(x, schema, "main-effects")
    coef, diag = fit_regression(design, y, RegressionSpec(family="logistic"))
    assert np.all(np.isfinite(coef))
    assert diag.separation


def test_cell_means_reproduce_empirical_averages():
    x = np.array([[0.0], [0.0], [1.0], [1.0], [1.0]])
    y = np.array([1.0, 3.0, 0.0, 1.0, 2.0])
    model = fit_cell_means(x, y)
    preds = model.predict(np.array([[0.0], [1.0]]))
    np.testing.assert_allclose(preds, [2.0, 1.0], atol=1e-15)
    assert model.diagnostics.cells == 2


def test_cell_means_raise_on_unseen_cell():
    model = fit_cell_means(np.array([[0.0], [1.0]]), np.array([1.0, 2.0]))
    with pytest.raises(EmptyCellError):
        model.predict(np.array([[2.0]]))


def test_fit_is_deterministic():
    dgp = random_dgp((3, 2, 3), seed=5)
    ds = sample_dataset(dgp, 400, seed=9)
    spec = RegressionSpec(family="logistic", design="main-effects")
    lin = RegressionSpec(family="linear", design="main-effects")
    a = fit_nuisance(ds, lin, spec, spec)
    b = fit_nuisance(ds, lin, spec, spec)
    np.testing.assert_array_equal(a.mu_y(1, ds.x), b.mu_y(1, ds.x))
    np.testing.assert_array_equal(a.mu_d(0, ds.x), b.mu_d(0, ds.x))
    np.testing.assert_array_equal(a.e(ds.x), b.e(ds.x))


def test_binary_outcome_predictions_stay_in_unit_interval():
    rng = np.random.default_rng(3)
    n = 300
    x = rng.normal(size=(n, 2))
    y = (rng.random(n) < 0.3).astype(float)
    schema = CovariateSchema(names=("a", "b"))
    model = fit_predictor(x, y, RegressionSpec(family="logistic"), schema)
    preds = model.predict(x)
    assert np.all((preds >= 0) & (preds <= 1))


def test_categorical_covariates_are_one_hot_encoded():
    schema = CovariateSchema(names=("g",), kinds={"g": (0.0, 1.0, 2.0)})
    x = np.array([[0.0], [1.0], [2.0]])
    design = design_matrix(x, schema, "main-effects")
    np.testing.assert_array_equal(design,
                                  [[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [1.0, 0.0, 1.0]])
