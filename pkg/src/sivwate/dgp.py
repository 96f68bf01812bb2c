"""Fully-known finite data-generating processes with an explicit unmeasured confounder.

Every population quantity the estimators target is computed here by exact
enumeration over the finite (x, u, z, d, y) support, so identities can be
checked to machine precision. Sampling produces ObservedDataset draws with
the confounder column discarded.
"""

from dataclasses import dataclass, field
import json

import numpy as np

from .data import CovariateSchema, ObservedDataset, OutcomeTransform
from .errors import (
    DataValidationError,
    GenerationError,
    PositivityError,
    UndefinedEstimandError,
    WeakInstrumentError,
)

TREATED = "treated"
UNTREATED = "untreated"
DIFFERENCE = "difference"

WEAK_IV_THRESHOLD = 1e-9
PROB_TOL = 1e-12


@dataclass(frozen=True)
class LatentDGP:
    """Discrete joint law over (X, U, Z, D, Y(0), Y(1)).

    Shapes: p_xu (nx, nu), e_z (nx,), p_d (2, nx, nu) indexed by instrument
    level, law_y (2, nx, nu, ny) indexed by treatment level over a shared
    outcome support y_support. The instrument law depends on x only, which
    makes instrument independence hold by construction.
    """

    x_support: tuple
    u_support: tuple
    y_support: np.ndarray
    p_xu: np.ndarray
    e_z: np.ndarray
    p_d: np.ndarray
    law_y: np.ndarray

    def __post_init__(self):
        x_support = tuple(tuple(np.atleast_1d(np.asarray(x, dtype=float))) for x in self.x_support)
        u_support = tuple(self.u_support)
        y_support = np.asarray(self.y_support, dtype=float)
        p_xu = np.asarray(self.p_xu, dtype=float)
        e_z = np.asarray(self.e_z, dtype=float)
        p_d = np.asarray(self.p_d, dtype=float)
        law_y = np.asarray(self.law_y, dtype=float)

        nx, nu, ny = len(x_support), len(u_support), len(y_support)
        if len({len(x) for x in x_support}) > 1:
            raise DataValidationError("x_support entries must share a common length")
        if p_xu.shape != (nx, nu):
            raise DataValidationError(f"p_xu shape {p_xu.shape} != {(nx, nu)}")
        if e_z.shape != (nx,):
            raise DataValidationError(f"e_z shape {e_z.shape} != {(nx,)}")
        if p_d.shape != (2, nx, nu):
            raise DataValidationError(f"p_d shape {p_d.shape} != {(2, nx, nu)}")
        if law_y.shape != (2, nx, nu, ny):
            raise DataValidationError(f"law_y shape {law_y.shape} != {(2, nx, nu, ny)}")
        for name, table in (("p_xu", p_xu), ("e_z", e_z), ("p_d", p_d), ("law_y", law_y)):
            if np.any(table < -PROB_TOL) or np.any(table > 1 + PROB_TOL):
                raise DataValidationError(f"{name} has entries outside [0, 1]")
        if abs(p_xu.sum() - 1.0) > PROB_TOL:
            raise DataValidationError(f"p_xu sums to {p_xu.sum()!r}, not 1")
        if np.any(np.abs(law_y.sum(axis=-1) - 1.0) > PROB_TOL):
            raise DataValidationError("each law_y distribution must sum to 1")

        object.__setattr__(self, "x_support", x_support)
        object.__setattr__(self, "u_support", u_support)
        object.__setattr__(self, "y_support", y_support)
        object.__setattr__(self, "p_xu", p_xu)
        object.__setattr__(self, "e_z", e_z)
        object.__setattr__(self, "p_d", p_d)
        object.__setattr__(self, "law_y", law_y)
        for arr in (self.y_support, self.p_xu, self.e_z, self.p_d, self.law_y):
            arr.setflags(write=False)

    @property
    def nx(self):
        return len(self.x_support)

    @property
    def nu(self):
        return len(self.u_support)

    def x_matrix(self):
        return np.asarray(self.x_support, dtype=float)


@dataclass(frozen=True)
class AssumptionReport:
    """Checks on the identification assumptions that are testable on a known DGP."""

    relevance: bool
    monotonicity: bool
    violations: tuple


@dataclass(frozen=True)
class PopulationTruth:
    """Exact population quantities enumerated from a LatentDGP."""

    weights: np.ndarray
    sivwate: float
    psivwate: float
    nsivwate: float
    negative_weight_share: float
    iv_strength: float
    naive_estimand: float
    positive_mask: np.ndarray


def weight_table(dgp: LatentDGP) -> np.ndarray:
    """Per-(x, u) difference in treatment probability across instrument arms."""
    return dgp.p_d[1] - dgp.p_d[0]


def iv_strength(dgp: LatentDGP) -> float:
    return float(np.sum(weight_table(dgp) * dgp.p_xu))


def _p_u_given_x(dgp):
    px = dgp.p_xu.sum(axis=1)
    if np.any(px <= 0):
        raise DataValidationError("every x value must have positive probability")
    return dgp.p_xu / px[:, None], px


def _transformed_means(dgp, g: OutcomeTransform):
    """E[g(Y(d)) | x, u] for d = 0, 1; shape (2, nx, nu)."""
    gy = g(dgp.y_support)
    return dgp.law_y @ gy


def treatment_gap_by_x(dgp: LatentDGP) -> np.ndarray:
    """P(D=1|Z=1, x) - P(D=1|Z=0, x) for each x."""
    p_ugx, _ = _p_u_given_x(dgp)
    return np.sum((dgp.p_d[1] - dgp.p_d[0]) * p_ugx, axis=1)


def conditional_ate(dgp: LatentDGP) -> np.ndarray:
    """E[Y(1) - Y(0) | x] for each x."""
    means = _transformed_means(dgp, OutcomeTransform.identity())
    p_ugx, _ = _p_u_given_x(dgp)
    return np.sum((means[1] - means[0]) * p_ugx, axis=1)


def global_ate(dgp: LatentDGP) -> float:
    _, px = _p_u_given_x(dgp)
    return float(np.sum(conditional_ate(dgp) * px))


def validate_dgp(dgp: LatentDGP) -> AssumptionReport:
    """Check instrument relevance and stochastic monotonicity of the weight table."""
    w = weight_table(dgp)
    gap_x = treatment_gap_by_x(dgp)
    relevance = bool(np.any(gap_x > 0))
    bad = np.argwhere((w < 0) & (dgp.p_xu > 0))  # zero-mass strata cannot violate
    violations = tuple((dgp.x_support[i], dgp.u_support[j]) for i, j in bad)
    return AssumptionReport(
        relevance=relevance,
        monotonicity=len(violations) == 0,
        violations=violations,
    )


def eq_mean(dgp: LatentDGP, g: OutcomeTransform, arm: str) -> float:
    """Mean of g under the weighted population, enumerated from the latent law."""
    w = weight_table(dgp)
    den = float(np.sum(w * dgp.p_xu))
    if den <= WEAK_IV_THRESHOLD:
        raise WeakInstrumentError(den)
    means = _transformed_means(dgp, g)
    if arm == TREATED:
        num = means[1]
    elif arm == UNTREATED:
        num = means[0]
    elif arm == DIFFERENCE:
        num = means[1] - means[0]
    else:
        raise ValueError(f"unknown arm {arm!r}")
    return float(np.sum(num * w * dgp.p_xu) / den)


def regression_route_value(dgp: LatentDGP, g: OutcomeTransform, arm: str) -> float:
    """Identified value through conditional means of the observable law.

    Uses only E(Dg(Y)|Z, x), E((1-D)g(Y)|Z, x) and P(D=1|Z, x), i.e. what a
    regression-based estimator targets.
    """
    p_ugx, px = _p_u_given_x(dgp)
    means = _transformed_means(dgp, g)
    den = float(np.sum(treatment_gap_by_x(dgp) * px))
    if den <= WEAK_IV_THRESHOLD:
        raise WeakInstrumentError(den)
    # E[Dg(Y) | z, x] and E[(1-D)g(Y) | z, x], each shape (2, nx)
    e_dg = np.sum(dgp.p_d * means[1][None] * p_ugx[None], axis=2)
    e_cg = np.sum((1 - dgp.p_d) * means[0][None] * p_ugx[None], axis=2)
    if arm == TREATED:
        num = e_dg[1] - e_dg[0]
    elif arm == UNTREATED:
        num = -(e_cg[1] - e_cg[0])
    elif arm == DIFFERENCE:
        e_g = e_dg + e_cg
        num = e_g[1] - e_g[0]
    else:
        raise ValueError(f"unknown arm {arm!r}")
    return float(np.sum(num * px) / den)


def weighting_route_value(dgp: LatentDGP, g: OutcomeTransform, arm: str) -> float:
    """Identified value through the instrument propensity, enumerated exactly.

    The signed weight (z - e(x)) / (e(x)(1 - e(x))) requires 0 < e(x) < 1.
    """
    if np.any(dgp.e_z <= 0) or np.any(dgp.e_z >= 1):
        raise PositivityError("instrument propensity must be strictly inside (0, 1)")
    p_ugx, px = _p_u_given_x(dgp)
    means = _transformed_means(dgp, g)
    kappa = np.empty((2, dgp.nx))
    kappa[1] = (1 - dgp.e_z) / (dgp.e_z * (1 - dgp.e_z))
    kappa[0] = (0 - dgp.e_z) / (dgp.e_z * (1 - dgp.e_z))
    pz = np.stack([1 - dgp.e_z, dgp.e_z])  # P(Z=z | x)

    def joint_sum(factor):
        # factor has shape (2, nx, nu) over (z, x, u)
        return float(np.sum(factor * (pz * kappa)[:, :, None] * (px[:, None] * p_ugx)[None]))

    e_kd = joint_sum(dgp.p_d)
    if abs(e_kd) <= WEAK_IV_THRESHOLD:
        raise WeakInstrumentError(e_kd)
    if arm == TREATED:
        return joint_sum(dgp.p_d * means[1][None]) / e_kd
    if arm == UNTREATED:
        return -joint_sum((1 - dgp.p_d) * means[0][None]) / e_kd
    if arm == DIFFERENCE:
        num = joint_sum(dgp.p_d * means[1][None]) + joint_sum((1 - dgp.p_d) * means[0][None])
        return num / e_kd
    raise ValueError(f"unknown arm {arm!r}")


def population_truth(dgp: LatentDGP) -> PopulationTruth:
    """Enumerate the weighted-average effect, its positive/negative-weight parts,
    the bias factor from negative weights and the observable-law value."""
    w = weight_table(dgp)
    strength = float(np.sum(w * dgp.p_xu))
    if strength <= WEAK_IV_THRESHOLD:
        raise WeakInstrumentError(strength)
    means = _transformed_means(dgp, OutcomeTransform.identity())
    tau = means[1] - means[0]
    sivwate = float(np.sum(tau * w * dgp.p_xu) / strength)

    positive = w >= 0
    pos_mass = float(np.sum(w * dgp.p_xu * positive))
    neg_mass = float(np.sum(w * dgp.p_xu * ~positive))
    if pos_mass <= PROB_TOL:
        raise UndefinedEstimandError("no positive-weight mass; positive-part effect undefined")
    psivwate = float(np.sum(tau * w * dgp.p_xu * positive) / pos_mass)
    if neg_mass < -PROB_TOL:
        nsivwate = float(np.sum(tau * w * dgp.p_xu * ~positive) / neg_mass)
    else:
        nsivwate = float("nan")
    share = -neg_mass / strength
    naive = regression_route_value(dgp, OutcomeTransform.identity(), DIFFERENCE)
    return PopulationTruth(
        weights=w,
        sivwate=sivwate,
        psivwate=psivwate,
        nsivwate=nsivwate,
        negative_weight_share=share,
        iv_strength=strength,
        naive_estimand=naive,
        positive_mask=positive,
    )


def subgroup_eq_effect(dgp: LatentDGP, level_of_x, g: OutcomeTransform) -> dict:
    """Latent-law conditional weighted effect per level of a covariate partition.

    level_of_x maps an x_support entry (tuple) to a hashable level.
    """
    w = weight_table(dgp)
    means = _transformed_means(dgp, g)
    diff = means[1] - means[0]
    out = {}
    levels = [level_of_x(x) for x in dgp.x_support]
    for level in dict.fromkeys(levels):
        mask = np.array([lv == level for lv in levels])
        den = float(np.sum((w * dgp.p_xu)[mask]))
        if den <= WEAK_IV_THRESHOLD:
            raise WeakInstrumentError(den)
        out[level] = float(np.sum((diff * w * dgp.p_xu)[mask]) / den)
    return out


def subgroup_regression_value(dgp: LatentDGP, level_of_x, g: OutcomeTransform) -> dict:
    """Observable-law conditional ratio per level (what the estimator targets)."""
    p_ugx, px = _p_u_given_x(dgp)
    means = _transformed_means(dgp, g)
    e_g = np.sum(
        (dgp.p_d * means[1][None] + (1 - dgp.p_d) * means[0][None]) * p_ugx[None], axis=2
    )
    gap_x = treatment_gap_by_x(dgp)
    out = {}
    levels = [level_of_x(x) for x in dgp.x_support]
    for level in dict.fromkeys(levels):
        mask = np.array([lv == level for lv in levels])
        den = float(np.sum((gap_x * px)[mask]))
        if den <= WEAK_IV_THRESHOLD:
            raise WeakInstrumentError(den)
        out[level] = float(np.sum(((e_g[1] - e_g[0]) * px)[mask]) / den)
    return out


def weighted_covariate_mean(dgp: LatentDGP, v_of_x) -> float:
    """Mean of v(x) under the weighted population, from the latent law."""
    w = weight_table(dgp)
    den = float(np.sum(w * dgp.p_xu))
    if den <= WEAK_IV_THRESHOLD:
        raise WeakInstrumentError(den)
    v = np.array([v_of_x(x) for x in dgp.x_support], dtype=float)
    return float(np.sum(v[:, None] * w * dgp.p_xu) / den)


def weighted_covariate_mean_observable(dgp: LatentDGP, v_of_x) -> float:
    """Same target computed from P(D=1|Z, x) only."""
    _, px = _p_u_given_x(dgp)
    gap_x = treatment_gap_by_x(dgp)
    den = float(np.sum(gap_x * px))
    if den <= WEAK_IV_THRESHOLD:
        raise WeakInstrumentError(den)
    v = np.array([v_of_x(x) for x in dgp.x_support], dtype=float)
    return float(np.sum(v * gap_x * px) / den)


def sample_dataset(dgp: LatentDGP, n: int, seed: int) -> ObservedDataset:
    """Draw n i.i.d. subjects; the confounder column is discarded from the output."""
    if n < 1:
        raise DataValidationError(f"sample size must be >= 1, got {n}")
    rng = np.random.default_rng(seed)
    flat = rng.choice(dgp.nx * dgp.nu, size=n, p=dgp.p_xu.ravel())
    xi, ui = np.divmod(flat, dgp.nu)
    z = (rng.random(n) < dgp.e_z[xi]).astype(int)
    d = (rng.random(n) < dgp.p_d[z, xi, ui]).astype(int)
    cum = np.cumsum(dgp.law_y, axis=-1)
    yi = np.sum(rng.random(n)[:, None] > cum[d, xi, ui], axis=1)
    y = dgp.y_support[yi]
    x = dgp.x_matrix()[xi]
    k = x.shape[1]
    schema = CovariateSchema(names=tuple(f"x{j}" for j in range(k)))
    return ObservedDataset(y=y, d=d, z=z, x=x, schema=schema)


def exact_dataset(dgp: LatentDGP, scale: int) -> ObservedDataset:
    """Dataset whose empirical joint distribution equals the DGP law exactly.

    Every joint (x, u, z, d, y) probability must be an integer multiple of
    1/scale; rows are replicated accordingly. Useful for checking that
    saturated-fit estimators reproduce enumerated population values.
    """
    pz = np.stack([1 - dgp.e_z, dgp.e_z])  # (z, x)
    ny = len(dgp.y_support)
    joint = np.empty((2, dgp.nx, dgp.nu, 2, ny))  # axes (z, x, u, d, y)
    for z in (0, 1):
        for d in (0, 1):
            p_arm = dgp.p_d[z] if d == 1 else 1 - dgp.p_d[z]
            joint[z, :, :, d, :] = (dgp.p_xu * pz[z][:, None] * p_arm)[:, :, None] * dgp.law_y[d]
    counts = joint * scale
    rounded = np.rint(counts)
    if np.max(np.abs(counts - rounded)) > 1e-6:
        raise DataValidationError("joint probabilities are not integer multiples of 1/scale")
    x_mat = dgp.x_matrix()
    ys, ds, zs, xs = [], [], [], []
    for z in (0, 1):
        for i in range(dgp.nx):
            for j in range(dgp.nu):
                for d in (0, 1):
                    for iy, yval in enumerate(dgp.y_support):
                        c = int(rounded[z, i, j, d, iy])
                        if c == 0:
                            continue
                        ys.extend([yval] * c)
                        ds.extend([d] * c)
                        zs.extend([z] * c)
                        xs.extend([x_mat[i]] * c)
    k = x_mat.shape[1]
    schema = CovariateSchema(names=tuple(f"x{j}" for j in range(k)))
    return ObservedDataset(y=np.array(ys), d=np.array(ds), z=np.array(zs),
                           x=np.array(xs).reshape(len(ys), k), schema=schema)


DCC_CLASSES = ("never_taker", "always_taker", "complier", "defier")


def make_dcc_dgp(x_law, compliance_mix, baseline_outcome, effect, e_z=0.5) -> LatentDGP:
    """Deterministic-compliance DGP: the confounder is the compliance class.

    compliance_mix[x] gives (never, always, complier, defier) proportions;
    baseline_outcome[x, class] is the point-mass value of Y(0) and
    effect[x, class] the per-stratum treatment effect.
    """
    x_law = np.asarray(x_law, dtype=float)
    mix = np.asarray(compliance_mix, dtype=float)
    base = np.asarray(baseline_outcome, dtype=float)
    eff = np.asarray(effect, dtype=float)
    nx = len(x_law)
    if mix.shape != (nx, 4) or base.shape != (nx, 4) or eff.shape != (nx, 4):
        raise DataValidationError("compliance tables must have shape (nx, 4)")
    if np.any(mix < 0):
        raise DataValidationError("compliance proportions must be non-negative")
    if np.any(np.abs(mix.sum(axis=1) - 1.0) > 1e-9):
        raise DataValidationError("compliance proportions must sum to 1 per x")

    p_d = np.zeros((2, nx, 4))
    p_d[0, :, 1] = 1.0  # always takers under z=0
    p_d[0, :, 3] = 1.0  # defiers take treatment only without encouragement
    p_d[1, :, 1] = 1.0
    p_d[1, :, 2] = 1.0  # compliers take treatment under encouragement
    p_xu = x_law[:, None] * mix

    y_support = np.unique(np.concatenate([base.ravel(), (base + eff).ravel()]))
    law_y = np.zeros((2, nx, 4, len(y_support)))
    for i in range(nx):
        for j in range(4):
            law_y[0, i, j, np.searchsorted(y_support, base[i, j])] = 1.0
            law_y[1, i, j, np.searchsorted(y_support, base[i, j] + eff[i, j])] = 1.0

    e = np.full(nx, float(e_z)) if np.ndim(e_z) == 0 else np.asarray(e_z, dtype=float)
    return LatentDGP(
        x_support=[(float(i),) for i in range(nx)],
        u_support=DCC_CLASSES,
        y_support=y_support,
        p_xu=p_xu,
        e_z=e,
        p_d=p_d,
        law_y=law_y,
    )


def complier_average_effect(dgp: LatentDGP) -> float:
    """Average effect over the complier stratum of a deterministic-compliance DGP."""
    if dgp.u_support != DCC_CLASSES:
        raise DataValidationError("complier averaging requires a deterministic-compliance DGP")
    j = DCC_CLASSES.index("complier")
    mass = dgp.p_xu[:, j]
    if mass.sum() <= 0:
        raise UndefinedEstimandError("no compliers in this DGP")
    means = _transformed_means(dgp, OutcomeTransform.identity())
    tau = means[1][:, j] - means[0][:, j]
    return float(np.sum(tau * mass) / mass.sum())


def make_bound_attaining_dgp(x_law, sivwate_x, compliance_share_x, r, side="lower",
                             e_z=0.5) -> LatentDGP:
    """Two-point-confounder DGP whose conditional effect sits exactly on an
    endpoint of the heterogeneity-r bound.

    Per x: the confounder is 1 (perfect complier, weight 1) with probability
    compliance_share_x and 0 (never taker, weight 0) otherwise; the stratum
    effects are sivwate_x and sivwate_x -/+ r.
    """
    if side not in ("lower", "upper"):
        raise DataValidationError(f"side must be 'lower' or 'upper', got {side!r}")
    if r < 0:
        raise DataValidationError("effect range r must be >= 0")
    x_law = np.asarray(x_law, dtype=float)
    eq = np.asarray(sivwate_x, dtype=float)
    share = np.asarray(compliance_share_x, dtype=float)
    nx = len(x_law)
    if np.any(share <= 0) or np.any(share > 1):
        raise DataValidationError("compliance shares must lie in (0, 1]")

    other = eq - r if side == "lower" else eq + r
    p_xu = np.column_stack([x_law * (1 - share), x_law * share])
    p_d = np.zeros((2, nx, 2))
    p_d[1, :, 1] = 1.0  # weight 1 stratum; the weight 0 stratum never takes treatment

    y_support = np.unique(np.concatenate([[0.0], eq, other]))
    law_y = np.zeros((2, nx, 2, len(y_support)))
    zero = np.searchsorted(y_support, 0.0)
    for i in range(nx):
        law_y[0, i, :, zero] = 1.0
        law_y[1, i, 0, np.searchsorted(y_support, other[i])] = 1.0
        law_y[1, i, 1, np.searchsorted(y_support, eq[i])] = 1.0

    e = np.full(nx, float(e_z)) if np.ndim(e_z) == 0 else np.asarray(e_z, dtype=float)
    return LatentDGP(
        x_support=[(float(i),) for i in range(nx)],
        u_support=("noncomplier", "complier"),
        y_support=y_support,
        p_xu=p_xu,
        e_z=e,
        p_d=p_d,
        law_y=law_y,
    )


def random_dgp(sizes, seed, enforce_monotonicity=True, require_violation=False,
               min_strength=0.05, max_tries=1000) -> LatentDGP:
    """Random valid DGP for property sweeps; deterministic given the seed.

    With enforce_monotonicity the weight table is made non-negative by
    construction; with require_violation at least one weight is forced
    negative while keeping overall strength above min_strength.
    """
    nx, nu, ny = sizes
    if min(nx, nu, ny) < 1:
        raise DataValidationError("support sizes must be >= 1")
    if enforce_monotonicity and require_violation:
        raise DataValidationError("cannot both enforce and violate monotonicity")
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        p_xu = rng.dirichlet(np.ones(nx * nu)).reshape(nx, nu)
        e_z = rng.uniform(0.2, 0.8, nx)
        p_d = rng.uniform(0.02, 0.98, (2, nx, nu))
        if enforce_monotonicity:
            p_d = np.sort(p_d, axis=0)
        y_support = np.sort(rng.uniform(-1.0, 1.0, ny))
        law_y = rng.dirichlet(np.ones(ny), size=(2, nx, nu))
        dgp = LatentDGP(
            x_support=[(float(i),) for i in range(nx)],
            u_support=tuple(f"u{j}" for j in range(nu)),
            y_support=y_support,
            p_xu=p_xu,
            e_z=e_z,
            p_d=p_d,
            law_y=law_y,
        )
        w = weight_table(dgp)
        if iv_strength(dgp) < min_strength:
            continue
        if require_violation and not np.any(w < -0.01):
            continue
        if require_violation and np.sum(w * p_xu * (w >= 0)) <= 0.01:
            continue
        return dgp
    raise GenerationError(f"no valid DGP found in {max_tries} draws (seed {seed})")


def dgp_to_dict(dgp: LatentDGP) -> dict:
    return {
        "x_support": [list(x) for x in dgp.x_support],
        "u_support": list(dgp.u_support),
        "y_support": dgp.y_support.tolist(),
        "p_xu": dgp.p_xu.tolist(),
        "e_z": dgp.e_z.tolist(),
        "p_d": dgp.p_d.tolist(),
        "law_y": dgp.law_y.tolist(),
    }


def dgp_from_dict(spec: dict) -> LatentDGP:
    required = ("x_support", "u_support", "y_support", "p_xu", "e_z", "p_d", "law_y")
    missing = [k for k in required if k not in spec]
    if missing:
        raise DataValidationError(f"DGP spec is missing fields: {missing}")
    return LatentDGP(
        x_support=spec["x_support"],
        u_support=tuple(spec["u_support"]),
        y_support=spec["y_support"],
        p_xu=spec["p_xu"],
        e_z=spec["e_z"],
        p_d=spec["p_d"],
        law_y=spec["law_y"],
    )


def load_dgp(path) -> LatentDGP:
    with open(path, "r", encoding="utf-8") as fh:
        return dgp_from_dict(json.load(fh))


def save_dgp(dgp: LatentDGP, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(dgp_to_dict(dgp), fh, indent=2)
