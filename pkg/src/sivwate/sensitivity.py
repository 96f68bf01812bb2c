"""Sensitivity of the estimated weighted effect to monotonicity violations.

The observable ratio differs from the positive-weight effect by a bias
factor (the normalized negative-weight mass) times the gap between the
negative- and positive-weight effects; these functions turn an assumed
factor and gap into a range, and verify the identity exactly on known DGPs.
"""

from dataclasses import dataclass

import numpy as np

from .dgp import LatentDGP, population_truth
from .errors import DataValidationError, WeakInstrumentError


@dataclass(frozen=True)
class SensitivityInputs:
    naive_estimate: float
    defier_weight_numerator: float
    iv_strength_denominator: float
    effect_gap_bound: float

    def __post_init__(self):
        if not all(np.isfinite([self.naive_estimate, self.defier_weight_numerator,
                                self.iv_strength_denominator, self.effect_gap_bound])):
            raise DataValidationError("sensitivity inputs must be finite")
        if self.defier_weight_numerator < 0:
            raise DataValidationError("negative-weight mass must be >= 0")
        if self.effect_gap_bound < 0:
            raise DataValidationError("effect gap bound must be >= 0")


def bias_factor(numerator, denominator):
    """Normalized negative-weight mass, reported as a non-negative magnitude."""
    if denominator <= 0:
        raise WeakInstrumentError(denominator)
    return abs(numerator) / denominator


def psivwate_interval(inputs: SensitivityInputs):
    """Range of the positive-weight effect consistent with the assumed
    negative-weight mass and effect gap."""
    factor = bias_factor(inputs.defier_weight_numerator, inputs.iv_strength_denominator)
    shift = factor * inputs.effect_gap_bound
    return (inputs.naive_estimate - shift, inputs.naive_estimate + shift)


def population_bias_check(dgp: LatentDGP) -> float:
    """Residual of the exact bias identity on an enumerable DGP; should be ~0."""
    truth = population_truth(dgp)
    factor = truth.negative_weight_share
    term = 0.0 if factor == 0.0 else factor * (truth.nsivwate - truth.psivwate)
    return float((truth.naive_estimand - truth.psivwate) + term)
