"""Dataset representation, CSV ingestion and the pointwise outcome transform."""

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np
import pandas as pd

from .errors import DataValidationError, ParseError, SchemaError


@dataclass(frozen=True)
class CovariateSchema:
    """Names and kinds of the covariate columns.

    kinds maps each name to either "continuous" or a tuple of categorical
    levels (non-empty).
    """

    names: tuple
    kinds: dict = field(default_factory=dict)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(set(names)) != len(names):
            raise SchemaError(f"duplicate covariate names in {names}")
        kinds = dict(self.kinds)
        for name in names:
            kinds.setdefault(name, "continuous")
        for name, kind in kinds.items():
            if name not in names:
                raise SchemaError(f"kind declared for unknown covariate {name!r}")
            if kind != "continuous":
                levels = tuple(kind)
                if not levels:
                    raise SchemaError(f"categorical covariate {name!r} has no levels")
                kinds[name] = levels
        object.__setattr__(self, "kinds", kinds)

    @property
    def k(self):
        return len(self.names)

    def is_categorical(self, name):
        return self.kinds[name] != "continuous"


@dataclass(frozen=True)
class ObservedDataset:
    """Immutable per-subject data: outcome y, treatment d, instrument z, covariates x.

    d and z must be exactly 0/1 and both instrument arms must be present.
    """

    y: np.ndarray
    d: np.ndarray
    z: np.ndarray
    x: np.ndarray
    schema: CovariateSchema

    def __post_init__(self):
        y = np.asarray(self.y, dtype=float)
        d = np.asarray(self.d)
        z = np.asarray(self.z)
        x = np.asarray(self.x, dtype=float)
        if x.ndim == 1:
            x = x.reshape(len(y), -1)
        n = len(y)
        if not (len(d) == len(z) == x.shape[0] == n):
            raise DataValidationError("y, d, z, x must have the same number of rows")
        for name, col in (("d", d), ("z", z)):
            bad = np.nonzero(~np.isin(col, (0, 1)))[0]
            if bad.size:
                raise DataValidationError(
                    f"column {name} must be 0/1; offending row {int(bad[0])}"
                )
        if x.shape[1] != self.schema.k:
            raise DataValidationError(
                f"covariate width {x.shape[1]} does not match schema ({self.schema.k})"
            )
        if not np.all(np.isfinite(y)) or not np.all(np.isfinite(x)):
            raise DataValidationError("y and x must be finite (missing values rejected)")
        if n == 0 or not (np.any(z == 1) and np.any(z == 0)):
            raise DataValidationError("dataset needs at least one row in each instrument arm")
        object.__setattr__(self, "y", y)
        object.__setattr__(self, "d", d.astype(np.int8))
        object.__setattr__(self, "z", z.astype(np.int8))
        object.__setattr__(self, "x", x)
        for arr in (self.y, self.d, self.z, self.x):
            arr.setflags(write=False)

    @property
    def n(self):
        return len(self.y)

    def take(self, indices):
        """Row subset / resample; validation is re-run on the result."""
        idx = np.asarray(indices)
        return ObservedDataset(self.y[idx], self.d[idx], self.z[idx], self.x[idx], self.schema)

    def covariate(self, name):
        return self.x[:, self.schema.names.index(name)]

    def __eq__(self, other):
        if not isinstance(other, ObservedDataset):
            return NotImplemented
        return (
            self.schema == other.schema
            and np.array_equal(self.y, other.y)
            and np.array_equal(self.d, other.d)
            and np.array_equal(self.z, other.z)
            and np.array_equal(self.x, other.x)
        )


@dataclass(frozen=True)
class OutcomeTransform:
    """Deterministic pointwise map applied to the outcome before averaging."""

    tag: str
    threshold: Optional[float] = None
    fn: Optional[Callable] = None

    @classmethod
    def identity(cls):
        return cls(tag="identity")

    @classmethod
    def indicator(cls, threshold):
        """1{y > threshold}."""
        return cls(tag="indicator", threshold=float(threshold))

    @classmethod
    def from_callable(cls, fn, name="custom"):
        return cls(tag=name, fn=fn)

    def __call__(self, y):
        y = np.asarray(y, dtype=float)
        if self.tag == "identity":
            return y
        if self.tag == "indicator":
            return (y > self.threshold).astype(float)
        return np.vectorize(self.fn, otypes=[float])(y)


def apply_transform(g: OutcomeTransform, y):
    """Apply the outcome transform to a scalar or array."""
    out = g(y)
    if np.isscalar(y) or np.ndim(y) == 0:
        return float(out)
    return out


def load_csv(path, schema: CovariateSchema, column_map: dict) -> ObservedDataset:
    """Read a comma-separated UTF-8 file into an ObservedDataset.

    column_map assigns roles: keys "outcome", "treatment", "instrument" map to
    single column names, "covariates" to a list of column names aligned with
    the schema.
    """
    for role in ("outcome", "treatment", "instrument", "covariates"):
        if role not in column_map:
            raise SchemaError(f"column_map is missing role {role!r}")
    cov_cols = list(column_map["covariates"])
    if len(cov_cols) != schema.k:
        raise SchemaError(
            f"{len(cov_cols)} covariate columns mapped but schema declares {schema.k}"
        )
    frame = pd.read_csv(path, dtype=str)
    needed = [column_map["outcome"], column_map["treatment"], column_map["instrument"]] + cov_cols
    missing = [c for c in needed if c not in frame.columns]
    if missing:
        raise SchemaError(f"columns missing from {path}: {missing}")

    def parse_numeric(col_name):
        raw = frame[col_name]
        if raw.isna().any():
            row = int(raw.index[raw.isna()][0])
            raise ParseError(f"missing value in column {col_name!r} at row {row}")
        values = raw.to_numpy()
        try:
            # correctly-rounded parse so save/load round-trips bit-exactly
            return values.astype(float)
        except ValueError:
            for row, value in enumerate(values):
                try:
                    float(value)
                except ValueError:
                    raise ParseError(
                        f"unparseable value {value!r} in column {col_name!r} at row {row}"
                    ) from None
            raise

    y = parse_numeric(column_map["outcome"])
    d = parse_numeric(column_map["treatment"])
    z = parse_numeric(column_map["instrument"])
    for name, col in (("treatment", d), ("instrument", z)):
        bad = np.nonzero(~np.isin(col, (0.0, 1.0)))[0]
        if bad.size:
            raise DataValidationError(
                f"{name} column has non-binary value {col[bad[0]]!r} at row {int(bad[0])}"
            )
    x = np.column_stack([parse_numeric(c) for c in cov_cols]) if cov_cols else np.empty((len(y), 0))
    return ObservedDataset(y=y, d=d.astype(int), z=z.astype(int), x=x, schema=schema)


def save_csv(dataset: ObservedDataset, path, column_map=None):
    """Write a dataset back out in the format load_csv reads.

    Uses repr-precision floats so load(save(ds)) round-trips exactly.
    """
    if column_map is None:
        column_map = default_column_map(dataset.schema)
    cols = {column_map["outcome"]: dataset.y,
            column_map["treatment"]: dataset.d,
            column_map["instrument"]: dataset.z}
    for j, name in enumerate(column_map["covariates"]):
        cols[name] = dataset.x[:, j]
    frame = pd.DataFrame({k: [repr(float(v)) for v in col] for k, col in cols.items()})
    frame.to_csv(path, index=False)


def default_column_map(schema: CovariateSchema):
    return {
        "outcome": "y",
        "treatment": "d",
        "instrument": "z",
        "covariates": list(schema.names),
    }
