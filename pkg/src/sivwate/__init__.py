"""Instrumental-variable causal estimation under stochastic monotonicity."""

from .data import (
    CovariateSchema,
    ObservedDataset,
    OutcomeTransform,
    apply_transform,
    load_csv,
    save_csv,
)
from .dgp import (
    DIFFERENCE,
    TREATED,
    UNTREATED,
    AssumptionReport,
    LatentDGP,
    PopulationTruth,
    complier_average_effect,
    conditional_ate,
    eq_mean,
    exact_dataset,
    global_ate,
    iv_strength,
    load_dgp,
    make_bound_attaining_dgp,
    make_dcc_dgp,
    population_truth,
    random_dgp,
    regression_route_value,
    sample_dataset,
    save_dgp,
    subgroup_eq_effect,
    subgroup_regression_value,
    validate_dgp,
    weight_table,
    weighted_covariate_mean,
    weighted_covariate_mean_observable,
    weighting_route_value,
)
from .errors import (
    DataValidationError,
    EmptyCellError,
    GenerationError,
    ParseError,
    PositivityError,
    SchemaError,
    SivwateError,
    UndefinedEstimandError,
    UnstableBootstrapError,
    WeakInstrumentError,
)
from .estimators import (
    EstimateReport,
    estimate_q_mean,
    estimate_sivwate_regression,
    estimate_sivwate_weighting,
    estimate_subgroup_sivwate,
    estimate_wald,
    weighted_covariate_profile,
)
from .bounds import (
    BoundsConfig,
    bounds_grid,
    conditional_bounds,
    global_bounds,
    global_bounds_multiplier,
)
from .nuisance import (
    FittedNuisance,
    RegressionSpec,
    fit_cell_means,
    fit_nuisance,
    fit_regression,
)
from .resampling import (
    BootstrapPlan,
    bonferroni_bounds_ci,
    bootstrap_replicates,
    bootstrap_se,
    percentile_ci,
    quantile,
)
from .sensitivity import (
    SensitivityInputs,
    bias_factor,
    population_bias_check,
    psivwate_interval,
)

__version__ = "0.1.0"
