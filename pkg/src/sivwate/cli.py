"""Command-line entry points: analyze a dataset, simulate from a DGP spec,
and validate the enumeration identities."""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import dgp as dgp_mod
from .bounds import BoundsConfig, global_bounds
from .data import CovariateSchema, OutcomeTransform, load_csv, save_csv
from .errors import SivwateError
from .estimators import (
    estimate_sivwate_regression,
    estimate_sivwate_weighting,
    estimate_subgroup_sivwate,
    estimate_wald,
    weighted_covariate_profile,
)
from .nuisance import RegressionSpec, fit_nuisance
from .report import estimate_block, to_json, to_markdown
from .resampling import BootstrapPlan, bonferroni_bounds_ci, percentile_ci
from .sensitivity import SensitivityInputs, bias_factor, psivwate_interval

IDENTITY_TOLERANCE = 1e-10


def _spec_from_config(cfg, default_family):
    cfg = cfg or {}
    return RegressionSpec(
        family=cfg.get("family", default_family),
        design=cfg.get("design", "main-effects"),
        max_iterations=cfg.get("max_iterations", 100),
        tolerance=cfg.get("tolerance", 1e-8),
        ridge=cfg.get("ridge", 0.0),
    )


def _schema_from_config(config):
    covariates = config["columns"].get("covariates", [])
    kinds = {}
    for name, kind in (config.get("covariate_kinds") or {}).items():
        kinds[name] = kind if kind == "continuous" else tuple(kind)
    return CovariateSchema(names=tuple(covariates), kinds=kinds)


def _fit(dataset, specs):
    return fit_nuisance(dataset, specs["y"], specs["d"], specs["z"])


def _clean(value):
    """Replace NaN with None for JSON output."""
    if isinstance(value, float) and math.isnan(value):
        return None
    return value


def run_analyze(config, workers=1):
    methods = config.get("methods", ["wald", "regression", "weighting"])
    if not methods:
        raise SivwateError("at least one method must be selected")
    schema = _schema_from_config(config)
    dataset = load_csv(config["input"], schema, config["columns"])

    y_binary = bool(np.all(np.isin(dataset.y, (0.0, 1.0))))
    nuisance_cfg = config.get("nuisance", {})
    specs = {
        "y": _spec_from_config(nuisance_cfg.get("y"),
                               "logistic" if y_binary else "linear"),
        "d": _spec_from_config(nuisance_cfg.get("d"), "logistic"),
        "z": _spec_from_config(nuisance_cfg.get("z"), "logistic"),
    }
    nuisance = _fit(dataset, specs)

    boot_cfg = config.get("bootstrap")
    plan = None
    if boot_cfg:
        plan = BootstrapPlan(
            replicates=boot_cfg.get("replicates", 1000),
            seed=boot_cfg.get("seed", 0),
            level=boot_cfg.get("level", 0.95),
            strata=boot_cfg.get("strata"),
            workers=workers,
        )

    def method_statistic(method):
        if method == "wald":
            return lambda ds: estimate_wald(ds).point
        if method == "regression":
            return lambda ds: estimate_sivwate_regression(ds, _fit(ds, specs)).point
        if method == "weighting":
            return lambda ds: estimate_sivwate_weighting(ds, _fit(ds, specs)).point
        raise SivwateError(f"unknown method {method!r}")

    scale = float(config.get("scale", 1.0))
    diagnostics = {"nuisance_converged": nuisance.converged}
    estimates = {}
    for method in methods:
        if method == "wald":
            est = estimate_wald(dataset)
        elif method == "regression":
            est = estimate_sivwate_regression(dataset, nuisance)
        elif method == "weighting":
            est = estimate_sivwate_weighting(dataset, nuisance)
        else:
            raise SivwateError(f"unknown method {method!r}")
        if plan:
            lo, hi, failures = percentile_ci(method_statistic(method), dataset, plan)
            est.interval = (lo, hi, plan.level)
            diagnostics[f"bootstrap_failures_{method}"] = failures
        estimates[method] = estimate_block(est, scale)
    diagnostics["iv_strength_denominator"] = float(
        (nuisance.mu_d(1, dataset.x) - nuisance.mu_d(0, dataset.x)).mean()
    )

    report = {
        "n": dataset.n,
        "scale": scale,
        "estimates": estimates,
        "diagnostics": diagnostics,
    }

    subgroup = config.get("subgroup")
    if subgroup:
        reports, errors = estimate_subgroup_sivwate(dataset, nuisance, subgroup)
        block = {}
        for level, est in reports.items():
            if plan:
                def level_stat(ds, _level=level):
                    reps, errs = estimate_subgroup_sivwate(ds, _fit(ds, specs), subgroup)
                    if _level not in reps:
                        raise errs[_level]
                    return reps[_level].point
                lo, hi, _ = percentile_ci(level_stat, dataset, plan)
                est.interval = (lo, hi, plan.level)
            block[str(level)] = estimate_block(est, scale)
        for level, err in errors.items():
            block[str(level)] = {"error": str(err)}
        report["subgroups"] = block

    profile_cols = config.get("profile")
    if profile_cols is None:
        profile_cols = list(schema.names)
    if profile_cols:
        report["profile"] = weighted_covariate_profile(dataset, nuisance, profile_cols)

    bounds_cfg = config.get("bounds")
    if bounds_cfg:
        rows = []
        if "m_grid" in bounds_cfg:
            configs = [("m", m, BoundsConfig("multiplier", m)) for m in bounds_cfg["m_grid"]]
        else:
            configs = [("r", bounds_cfg["r"], BoundsConfig("absolute", bounds_cfg["r"]))]
        for key, value, bc in configs:
            lower, upper, bdiag = global_bounds(dataset, nuisance, bc)
            row = {key: float(value), "lower": lower * scale, "upper": upper * scale}
            row["excluded_units"] = bdiag["excluded_units"]
            if plan:
                def lb_stat(ds, _bc=bc):
                    return global_bounds(ds, _fit(ds, specs), _bc)[0]
                def ub_stat(ds, _bc=bc):
                    return global_bounds(ds, _fit(ds, specs), _bc)[1]
                ci_lo, ci_hi = bonferroni_bounds_ci(lb_stat, ub_stat, dataset, plan)
                row["ci_lower"] = ci_lo * scale
                row["ci_upper"] = ci_hi * scale
            rows.append(row)
        report["bounds"] = rows

    sens_cfg = config.get("sensitivity")
    if sens_cfg:
        naive = sens_cfg.get("naive_estimate")
        if naive is None:
            naive = estimate_sivwate_regression(dataset, nuisance).point
        denominator = sens_cfg.get("iv_strength_denominator")
        if denominator is None:
            denominator = diagnostics["iv_strength_denominator"]
        inputs = SensitivityInputs(
            naive_estimate=naive,
            defier_weight_numerator=sens_cfg["defier_weight_numerator"],
            iv_strength_denominator=denominator,
            effect_gap_bound=sens_cfg["effect_gap_bound"],
        )
        lo, hi = psivwate_interval(inputs)
        report["sensitivity"] = {
            "bias_factor": bias_factor(inputs.defier_weight_numerator,
                                       inputs.iv_strength_denominator),
            "naive_estimate": naive * scale,
            "interval": {"lower": lo * scale, "upper": hi * scale},
            "assumptions": {
                "defier_weight_numerator": inputs.defier_weight_numerator,
                "iv_strength_denominator": inputs.iv_strength_denominator,
                "effect_gap_bound": inputs.effect_gap_bound,
            },
        }
    return report


def cmd_analyze(args):
    with open(args.config, "r", encoding="utf-8") as fh:
        config = json.load(fh)
    output = args.output or config.get("output", "report")
    try:
        report = run_analyze(config, workers=args.workers)
    except SivwateError as err:
        block = {"error": {"type": type(err).__name__, "message": str(err)}}
        if hasattr(err, "denominator"):
            block["error"]["denominator"] = err.denominator
        sys.stderr.write(to_json(block))
        with open(output + ".error.json", "w", encoding="utf-8") as fh:
            fh.write(to_json(block))
        return 2
    with open(output + ".json", "w", encoding="utf-8") as fh:
        fh.write(to_json(report))
    with open(output + ".md", "w", encoding="utf-8") as fh:
        fh.write(to_markdown(report))
    return 0


def truth_sidecar(dgp):
    truth = dgp_mod.population_truth(dgp)
    assumptions = dgp_mod.validate_dgp(dgp)
    return {
        "population_truth": {
            "sivwate": truth.sivwate,
            "psivwate": truth.psivwate,
            "nsivwate": _clean(truth.nsivwate),
            "negative_weight_share": truth.negative_weight_share,
            "iv_strength": truth.iv_strength,
            "naive_estimand": truth.naive_estimand,
            "weights": truth.weights.tolist(),
        },
        "assumptions": {
            "relevance": assumptions.relevance,
            "monotonicity": assumptions.monotonicity,
            "violations": [[list(x), u] for x, u in assumptions.violations],
        },
    }


def cmd_simulate(args):
    try:
        dgp = dgp_mod.load_dgp(args.dgp)
        dataset = dgp_mod.sample_dataset(dgp, args.n, args.seed)
        save_csv(dataset, args.out)
        truth_path = args.truth or args.out + ".truth.json"
        with open(truth_path, "w", encoding="utf-8") as fh:
            fh.write(to_json(truth_sidecar(dgp)))
    except SivwateError as err:
        sys.stderr.write(to_json({"error": {"type": type(err).__name__,
                                            "message": str(err)}}))
        return 2
    return 0


def identity_residuals(dgp):
    """Max absolute residual per enumeration identity on one DGP."""
    transforms = [
        ("identity", OutcomeTransform.identity()),
        ("indicator", OutcomeTransform.indicator(float(np.median(dgp.y_support)))),
    ]
    arms = (dgp_mod.TREATED, dgp_mod.UNTREATED, dgp_mod.DIFFERENCE)
    out = {}

    regression = 0.0
    weighting = 0.0
    for _, g in transforms:
        for arm in arms:
            latent = dgp_mod.eq_mean(dgp, g, arm)
            reg = dgp_mod.regression_route_value(dgp, g, arm)
            regression = max(regression, abs(reg - latent))
            wgt = dgp_mod.weighting_route_value(dgp, g, arm)
            weighting = max(weighting, abs(wgt - reg))
    out["regression_route"] = regression
    out["weighting_route"] = weighting

    w = dgp_mod.weight_table(dgp)
    lhs = float(np.sum(w * dgp.p_xu))
    _, px = dgp_mod._p_u_given_x(dgp)
    rhs = float(np.sum(dgp_mod.treatment_gap_by_x(dgp) * px))
    out["strength"] = abs(lhs - rhs)

    def first_cov(x):
        return x[0]
    out["covariate_mean"] = abs(
        dgp_mod.weighted_covariate_mean(dgp, first_cov)
        - dgp_mod.weighted_covariate_mean_observable(dgp, first_cov)
    )

    from .sensitivity import population_bias_check
    out["bias_identity"] = abs(population_bias_check(dgp))
    return out


def builtin_suite():
    """Named DGPs exercising every identity, including violating ones."""
    cases = []
    x_law = np.array([0.5, 0.5])
    mix = np.array([[0.3, 0.3, 0.4, 0.0], [0.2, 0.2, 0.6, 0.0]])
    base = np.zeros((2, 4))
    effect = np.array([[1.0, 2.0, 1.5, 0.0], [0.5, 1.0, 2.5, 0.0]])
    cases.append(("dcc", dgp_mod.make_dcc_dgp(x_law, mix, base, effect)))
    cases.append(("bound-lower", dgp_mod.make_bound_attaining_dgp(
        [0.4, 0.6], [2.0, -1.0], [0.5, 0.25], r=1.5, side="lower")))
    cases.append(("bound-upper", dgp_mod.make_bound_attaining_dgp(
        [0.4, 0.6], [2.0, -1.0], [0.5, 0.25], r=1.5, side="upper")))
    for seed in range(5):
        cases.append((f"monotone-{seed}",
                      dgp_mod.random_dgp((3, 3, 3), seed, enforce_monotonicity=True)))
    for seed in range(5):
        cases.append((f"violating-{seed}",
                      dgp_mod.random_dgp((3, 3, 3), 100 + seed,
                                         enforce_monotonicity=False,
                                         require_violation=True)))
    return cases


def cmd_validate(args):
    try:
        if args.dgp:
            cases = [(os.path.basename(args.dgp), dgp_mod.load_dgp(args.dgp))]
        else:
            cases = builtin_suite()
    except SivwateError as err:
        sys.stderr.write(f"spec error: {err}\n")
        return 2
    worst = 0.0
    for name, dgp in cases:
        residuals = identity_residuals(dgp)
        truth = dgp_mod.population_truth(dgp)
        case_max = max(residuals.values())
        worst = max(worst, case_max)
        status = "ok" if case_max <= IDENTITY_TOLERANCE else "FAIL"
        detail = ", ".join(f"{k}={v:.2e}" for k, v in sorted(residuals.items()))
        print(f"{status} {name}: bias_factor={truth.negative_weight_share:.4f} {detail}")
    print(f"max residual: {worst:.2e}")
    return 0 if worst <= IDENTITY_TOLERANCE else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sivwate",
        description="IV causal estimation under stochastic monotonicity",
    )
    default_workers = int(os.environ.get("SIVWATE_WORKERS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)

    p_analyze = sub.add_parser("analyze", help="run the full analysis pipeline on a CSV")
    p_analyze.add_argument("--config", required=True, help="JSON analysis config")
    p_analyze.add_argument("--output", default=None, help="output path prefix")
    p_analyze.add_argument("--workers", type=int, default=default_workers)
    p_analyze.set_defaults(func=cmd_analyze)

    p_sim = sub.add_parser("simulate", help="sample a dataset from a DGP spec")
    p_sim.add_argument("--dgp", required=True, help="JSON DGP spec")
    p_sim.add_argument("--n", type=int, required=True)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--out", required=True, help="output CSV path")
    p_sim.add_argument("--truth", default=None, help="truth sidecar path")
    p_sim.set_defaults(func=cmd_simulate)

    p_val = sub.add_parser("validate", help="run the enumeration identity suite")
    p_val.add_argument("--dgp", default=None, help="JSON DGP spec (default: built-in suite)")
    p_val.set_defaults(func=cmd_validate)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
