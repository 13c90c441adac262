import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError
from sklearn.pipeline import make_pipeline
from sklearn.preprocessing import StandardScaler

from curvewigner import DiscreteWignerTransform
from curvewigner._validation import random_pure_state
from curvewigner.exceptions import DimensionMismatch


def test_params_round_trip():
    est = DiscreteWignerTransform(n=2, preset="standard")
    assert est.get_params()["n"] == 2
    other = clone(est).set_params(kernel="transformed")
    assert other.kernel == "transformed" and est.kernel == "bundle"


def test_transform_shapes(rng):
    est = DiscreteWignerTransform(n=3, preset="set090").fit()
    X = np.stack([random_pure_state(8, rng) for _ in range(4)])
    W = est.transform(X)
    assert W.shape == (4, 64)
    assert np.allclose(W.sum(axis=1), 8)
    assert len(est.get_feature_names_out()) == 64
    rhos = est.inverse_transform(W)
    assert np.allclose(rhos[0], np.outer(X[0], X[0].conj()))


def test_density_matrix_batch(rng):
    est = DiscreteWignerTransform(n=2).fit()
    rho = np.eye(4)[None] / 4
    assert np.allclose(est.transform(rho), 0.25)


def test_custom_generators_match_preset():
    a = DiscreteWignerTransform(n=3, f=[1, 1, 1]).fit()
    b = DiscreteWignerTransform(n=3, preset="set162").fit()
    assert np.allclose(a.kernel_.operators, b.kernel_.operators)


def test_errors():
    with pytest.raises(NotFittedError):
        DiscreteWignerTransform().transform(np.eye(8)[0])
    with pytest.raises(ValueError):
        DiscreteWignerTransform(kernel="bogus").fit()
    est = DiscreteWignerTransform(n=2).fit()
    with pytest.raises(DimensionMismatch):
        est.transform(np.eye(8)[0])
    with pytest.raises(ValueError):
        est.transform(np.ones(4))


def test_pipeline(rng):
    X = np.stack([random_pure_state(4, rng) for _ in range(6)])
    pipe = make_pipeline(DiscreteWignerTransform(n=2), StandardScaler())
    assert pipe.fit_transform(X).shape == (6, 16)


def test_kernel_report_exposed():
    assert DiscreteWignerTransform(n=2).fit().kernel_report().ok()
