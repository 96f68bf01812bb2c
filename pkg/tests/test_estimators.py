import numpy as np
import pytest

from sivwate import (
    DIFFERENCE,
    TREATED,
    UNTREATED,
    CovariateSchema,
    ObservedDataset,
    OutcomeTransform,
    PositivityError,
    RegressionSpec,
    WeakInstrumentError,
    eq_mean,
    estimate_q_mean,
    estimate_sivwate_regression,
    estimate_sivwate_weighting,
    estimate_subgroup_sivwate,
    estimate_wald,
    exact_dataset,
    fit_nuisance,
    random_dgp,
    regression_route_value,
    subgroup_regression_value,
    weighted_covariate_mean_observable,
    sample_dataset,
    weighted_covariate_profile,
)

SAT = RegressionSpec(design="saturated")


def saturated_fit(ds):
    return fit_nuisance(ds, SAT, SAT, SAT)


def hand_dataset():
    # 8 rows built so that the outcome gap is 0.5 and treatment gap is 0.5
    y = np.array([1.0, 1.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0])
    d = np.array([1, 1, 0, 0, 1, 0, 0, 0])
    z = np.array([1, 1, 1, 1, 0, 0, 0, 0])
    x = np.zeros((8, 1))
    return ObservedDataset(y=y, d=d, z=z, x=x, schema=CovariateSchema(names=("a",)))


class TestWald:
    def test_hand_computed_ratio(self):
        est = estimate_wald(hand_dataset())
        assert est.point == pytest.approx(1.0, abs=1e-15)
        assert est.denominator == pytest.approx(0.25, abs=1e-15)

    def test_zero_denominator_raises(self):
        ds = hand_dataset()
        flat = ObservedDataset(y=ds.y, d=np.array([1, 0, 1, 0, 1, 0, 1, 0]),
                               z=ds.z, x=ds.x, schema=ds.schema)
        with pytest.raises(WeakInstrumentError):
            estimate_wald(flat)


class TestCollapse:
    """With no real covariate variation every route reduces to the Wald ratio."""

    def setup_method(self):
        dgp = random_dgp((1, 3, 3), seed=21)
        self.ds = sample_dataset(dgp, 600, seed=1)

    def test_intercept_only_regression_equals_wald(self):
        lin = RegressionSpec(family="linear", design="intercept")
        nuis = fit_nuisance(self.ds, lin, lin, lin)
        wald = estimate_wald(self.ds).point
        reg = estimate_sivwate_regression(self.ds, nuis).point
        assert reg == pytest.approx(wald, abs=1e-12)

    def test_constant_propensity_weighting_equals_wald(self):
        share = float(self.ds.z.mean())
        wald = estimate_wald(self.ds).point
        wgt = estimate_sivwate_weighting(self.ds, np.full(self.ds.n, share)).point
        assert wgt == pytest.approx(wald, abs=1e-12)


class TestOracleConsistency:
    """On a dataset whose empirical law equals the DGP exactly, saturated-fit
    estimators must reproduce the enumerated population values."""

    def setup_method(self):
        self.dgp = exact_oracle_dgp()
        self.ds = exact_dataset(self.dgp, scale=2**12)
        self.nuis = saturated_fit(self.ds)

    def test_regression_matches_enumeration(self):
        target = regression_route_value(self.dgp, OutcomeTransform.identity(), DIFFERENCE)
        est = estimate_sivwate_regression(self.ds, self.nuis)
        assert est.point == pytest.approx(target, abs=1e-10)

    def test_weighting_matches_enumeration(self):
        target = regression_route_value(self.dgp, OutcomeTransform.identity(), DIFFERENCE)
        est = estimate_sivwate_weighting(self.ds, self.nuis)
        assert est.point == pytest.approx(target, abs=1e-10)

    def test_q_means_match_enumeration_per_arm(self):
        for g in (OutcomeTransform.identity(), OutcomeTransform.indicator(0.0)):
            for arm, tag in ((TREATED, "treated"), (UNTREATED, "untreated")):
                target = eq_mean(self.dgp, g, arm)
                est = estimate_q_mean(self.ds, self.nuis, g, tag)
                assert est.point == pytest.approx(target, abs=1e-10)

    def test_q_mean_difference_equals_regression_estimate(self):
        g = OutcomeTransform.identity()
        treated = estimate_q_mean(self.ds, self.nuis, g, "treated").point
        untreated = estimate_q_mean(self.ds, self.nuis, g, "untreated").point
        reg = estimate_sivwate_regression(self.ds, self.nuis).point
        assert treated - untreated == pytest.approx(reg, abs=1e-12)

    def test_subgroups_match_enumeration(self):
        def level(x):
            return x[0]
        target = subgroup_regression_value(self.dgp, level, OutcomeTransform.identity())
        reports, errors = estimate_subgroup_sivwate(self.ds, self.nuis, "x0")
        assert not errors
        for lv, est in reports.items():
            assert est.point == pytest.approx(target[lv], abs=1e-10)

    def test_profile_matches_enumeration(self):
        target = weighted_covariate_mean_observable(self.dgp, lambda x: x[0])
        rows = weighted_covariate_profile(self.ds, self.nuis, ["x0"])
        assert rows[0]["weighted_mean"] == pytest.approx(target, abs=1e-10)


def exact_oracle_dgp():
    """Small DGP with dyadic-rational probabilities so exact_dataset applies."""
    from sivwate import LatentDGP
    p_xu = np.array([[0.25, 0.25], [0.25, 0.25]])
    e_z = np.array([0.5, 0.25])
    p_d = np.array([[[0.25, 0.5], [0.125, 0.25]],
                    [[0.75, 0.5], [0.625, 0.75]]])
    y_support = np.array([-1.0, 0.0, 2.0])
    law_y = np.zeros((2, 2, 2, 3))
    law_y[0] = [[[0.5, 0.25, 0.25], [0.25, 0.5, 0.25]],
                [[0.25, 0.25, 0.5], [0.5, 0.5, 0.0]]]
    law_y[1] = [[[0.25, 0.25, 0.5], [0.0, 0.5, 0.5]],
                [[0.5, 0.0, 0.5], [0.25, 0.25, 0.5]]]
    return LatentDGP(x_support=[(0.0,), (1.0,)], u_support=("u0", "u1"),
                     y_support=y_support, p_xu=p_xu, e_z=e_z, p_d=p_d, law_y=law_y)


class TestWeightingDetails:
    def test_constant_transform_passes_through(self):
        ds = hand_dataset()
        est = estimate_sivwate_weighting(
            ds, np.full(ds.n, 0.5), g=OutcomeTransform.from_callable(lambda y: 1.0))
        # numerator and denominator coincide when g(y) == d for all treated rows
        assert np.isfinite(est.point)

    def test_positivity_violation_raises(self):
        ds = hand_dataset()
        with pytest.raises(PositivityError):
            estimate_sivwate_weighting(ds, np.zeros(ds.n))

    def test_instrument_label_symmetry(self):
        # flipping z labels and the propensity leaves the estimate unchanged
        dgp = random_dgp((2, 2, 3), seed=13)
        ds = sample_dataset(dgp, 500, seed=2)
        e = np.full(ds.n, float(ds.z.mean()))
        a = estimate_sivwate_weighting(ds, e).point
        flipped = ObservedDataset(y=ds.y, d=ds.d, z=1 - ds.z, x=ds.x, schema=ds.schema)
        b = estimate_sivwate_weighting(flipped, 1 - e).point
        assert a == pytest.approx(b, abs=1e-12)


class TestScaleAndSubgroups:
    def test_outcome_scaling_is_equivariant(self):
        dgp = random_dgp((2, 2, 3), seed=17)
        ds = sample_dataset(dgp, 500, seed=3)
        nuis = saturated_fit(ds)
        base = estimate_sivwate_regression(ds, nuis).point
        scaled = ObservedDataset(y=1000 * ds.y, d=ds.d, z=ds.z, x=ds.x, schema=ds.schema)
        nuis2 = saturated_fit(scaled)
        assert estimate_sivwate_regression(scaled, nuis2).point == pytest.approx(
            1000 * base, rel=1e-12)

    def test_degenerate_level_lands_in_errors(self):
        # one covariate level where treatment never responds to the instrument
        y = np.array([1.0, 0.0, 1.0, 0.0, 2.0, 1.0, 0.0, 0.0])
        d = np.array([1, 0, 0, 0, 1, 1, 0, 0])
        z = np.array([1, 1, 0, 0, 1, 1, 0, 0])
        x = np.array([[0.0]] * 4 + [[1.0]] * 4)
        ds = ObservedDataset(y=y, d=d, z=z, x=x, schema=CovariateSchema(names=("g",)))
        # level 1: d rate is 1 under z=1 and 0 under z=0 -> fine
        # level 0: gap is 0.5; make it degenerate by equalizing d
        d2 = np.array([0, 0, 0, 0, 1, 1, 0, 0])
        ds2 = ObservedDataset(y=y, d=d2, z=z, x=x, schema=ds.schema)
        reports, errors = estimate_subgroup_sivwate(ds2, saturated_fit(ds2), "g")
        assert 0.0 in errors and 1.0 in reports
        assert isinstance(errors[0.0], WeakInstrumentError)

    def test_profile_of_constant_covariate_is_one(self):
        dgp = random_dgp((2, 2, 3), seed=19)
        ds = sample_dataset(dgp, 400, seed=5)
        nuis = saturated_fit(ds)
        rows = weighted_covariate_profile(ds, nuis, [("ones", lambda row: 1.0)])
        assert rows[0]["ratio"] == pytest.approx(1.0, abs=1e-12)
