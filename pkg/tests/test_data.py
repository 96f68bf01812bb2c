import numpy as np
import pytest

from sivwate import (
    CovariateSchema,
    DataValidationError,
    ObservedDataset,
    OutcomeTransform,
    ParseError,
    SchemaError,
    apply_transform,
    load_csv,
    random_dgp,
    sample_dataset,
    save_csv,
)
from sivwate.data import default_column_map

SCHEMA = CovariateSchema(names=("age", "group"))
COLMAP = {"outcome": "y", "treatment": "d", "instrument": "z",
          "covariates": ["age", "group"]}


def write(tmp_path, text):
    path = tmp_path / "data.csv"
    path.write_text(text)
    return path


WELL_FORMED = """y,d,z,age,group
1.5,1,1,30,0
0.5,0,0,40,1
2.0,1,0,35,0
0.0,0,1,20,1
"""


def test_load_well_formed(tmp_path):
    ds = load_csv(write(tmp_path, WELL_FORMED), SCHEMA, COLMAP)
    assert ds.n == 4
    assert list(ds.y) == [1.5, 0.5, 2.0, 0.0]
    assert list(ds.d) == [1, 0, 1, 0]
    assert ds.x.shape == (4, 2)


def test_load_is_deterministic(tmp_path):
    path = write(tmp_path, WELL_FORMED)
    assert load_csv(path, SCHEMA, COLMAP) == load_csv(path, SCHEMA, COLMAP)


def test_non_binary_treatment_names_row(tmp_path):
    bad = WELL_FORMED.replace("0.0,0,1,20,1", "0.0,2,1,20,1")
    with pytest.raises(DataValidationError, match="row 3"):
        load_csv(write(tmp_path, bad), SCHEMA, COLMAP)


def test_missing_column(tmp_path):
    with pytest.raises(SchemaError, match="missing"):
        load_csv(write(tmp_path, WELL_FORMED), SCHEMA,
                 {**COLMAP, "instrument": "nonexistent"})


def test_unparseable_numeric_names_row(tmp_path):
    bad = WELL_FORMED.replace("2.0,1,0,35,0", "oops,1,0,35,0")
    with pytest.raises(ParseError, match="row 2"):
        load_csv(write(tmp_path, bad), SCHEMA, COLMAP)


def test_missing_value_rejected(tmp_path):
    bad = WELL_FORMED.replace("0.5,0,0,40,1", "0.5,0,0,,1")
    with pytest.raises(ParseError):
        load_csv(write(tmp_path, bad), SCHEMA, COLMAP)


def test_round_trip_of_sampled_dataset(tmp_path):
    dgp = random_dgp((3, 2, 3), seed=11)
    ds = sample_dataset(dgp, 500, seed=4)
    path = tmp_path / "sim.csv"
    save_csv(ds, path)
    loaded = load_csv(path, ds.schema, default_column_map(ds.schema))
    assert loaded == ds


def test_dataset_invariants():
    with pytest.raises(DataValidationError):
        ObservedDataset(y=[1.0], d=[2], z=[1], x=[[0.0]],
                        schema=CovariateSchema(names=("a",)))
    # both instrument arms must be present
    with pytest.raises(DataValidationError):
        ObservedDataset(y=[1.0, 2.0], d=[0, 1], z=[1, 1], x=[[0.0], [1.0]],
                        schema=CovariateSchema(names=("a",)))
    with pytest.raises(DataValidationError):
        ObservedDataset(y=[1.0, 2.0], d=[0, 1], z=[1, 0], x=[[0.0], [1.0]],
                        schema=CovariateSchema(names=("a", "b")))


def test_dataset_is_immutable():
    ds = ObservedDataset(y=[1.0, 2.0], d=[0, 1], z=[1, 0], x=[[0.0], [1.0]],
                         schema=CovariateSchema(names=("a",)))
    with pytest.raises(ValueError):
        ds.y[0] = 5.0


def test_schema_rejects_duplicates_and_empty_levels():
    with pytest.raises(SchemaError):
        CovariateSchema(names=("a", "a"))
    with pytest.raises(SchemaError):
        CovariateSchema(names=("a",), kinds={"a": ()})


def test_apply_transform():
    assert apply_transform(OutcomeTransform.identity(), 3.5) == 3.5
    assert apply_transform(OutcomeTransform.indicator(0.5), 1.0) == 1.0
    assert apply_transform(OutcomeTransform.indicator(0.5), 0.0) == 0.0
    custom = OutcomeTransform.from_callable(lambda y: y * y)
    np.testing.assert_allclose(custom(np.array([1.0, -2.0])), [1.0, 4.0])
