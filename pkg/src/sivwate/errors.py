"""Exception hierarchy shared across the package."""


class SivwateError(Exception):
    """Base class for all package errors."""


class SchemaError(SivwateError):
    """A required column or covariate declaration is missing or malformed."""


class DataValidationError(SivwateError):
    """A dataset or probability table violates an invariant."""


class ParseError(SivwateError):
    """A value in an input file could not be parsed."""


class WeakInstrumentError(SivwateError):
    """The estimated IV-strength denominator is too close to zero."""

    def __init__(self, denominator, threshold=1e-9):
        self.denominator = denominator
        self.threshold = threshold
        super().__init__(
            f"IV strength denominator {denominator!r} is below threshold {threshold!r}"
        )


class UndefinedEstimandError(SivwateError):
    """The requested estimand has no definition on this population (zero weight mass)."""


class PositivityError(SivwateError):
    """The instrument propensity hits 0 or 1 where the weighting route needs it inside (0,1)."""


class EmptyCellError(SivwateError):
    """A saturated predictor was queried at a cell with no training rows."""


class UnstableBootstrapError(SivwateError):
    """Too many bootstrap replicates failed to produce a statistic."""


class GenerationError(SivwateError):
    """Random DGP generation failed to satisfy its constraints within the retry cap."""
