import math

import numpy as np
import pytest

from graphenergy.predict import (
    CLOSED_FORM,
    GENERAL,
    argmax_p,
    has_closed_form,
    predict_energy,
    stationary_p,
)
from graphenergy.semicircle import SemicircleLaw
from graphenergy.weights import CATALOG_IDS, WeightDomainError, catalog, center_value, get_spec

K = 8 / (3 * math.pi)
LOG_IDS = {"mzagreb1", "mzagreb1_star", "mzagreb2"}


def test_unit_general_equals_formula():
    for n, p in [(10, 0.5), (500, 0.2), (2000, 0.9)]:
        got = predict_energy(get_spec("unit"), n, p).predicted_energy
        assert got == pytest.approx(K * math.sqrt(p * (1 - p)) * n**1.5, rel=1e-14)


def test_zagreb_m1_example():
    n, p = 100, 0.75
    got = predict_energy(get_spec("zagreb_m1"), n, p, CLOSED_FORM)
    assert got.predicted_energy == pytest.approx(0.75 * (16 / (3 * math.pi)) * math.sqrt(0.1875) * n**2.5,
                                                 rel=1e-14)
    assert got.leading_exponent == 2.5
    assert got.source == CLOSED_FORM


@pytest.mark.parametrize("n", [100, 10_000, 10**6])
def test_randic_half(n):
    got = predict_energy(get_spec("randic"), n, 0.5, CLOSED_FORM).predicted_energy
    assert got == pytest.approx(K * math.sqrt(n), rel=1e-14)


@pytest.mark.parametrize("n", [7, 100, 12345])
@pytest.mark.parametrize("p", [0.1, 0.5, 0.77])
def test_ag1_general_equals_closed(n, p):
    spec = get_spec("ag1")
    a = predict_energy(spec, n, p, GENERAL).predicted_energy
    b = predict_energy(spec, n, p, CLOSED_FORM).predicted_energy
    assert a == pytest.approx(b, rel=1e-14)


@pytest.mark.parametrize("spec", catalog(alpha=0.8), ids=lambda s: s.label)
def test_general_source_consistency(spec):
    for n in (50, 300, 5000):
        for p in (0.1, 0.4, 0.6, 0.95):
            pred = predict_energy(spec, n, p)
            expected = center_value(spec, n, p) * SemicircleLaw.from_p(p).abs_first_moment() * n**1.5
            assert pred.predicted_energy == pytest.approx(expected, rel=1e-14)
            assert pred.leading_exponent == 1.5 + spec.center_exponent


@pytest.mark.parametrize("spec", catalog(alpha=-1.3), ids=lambda s: s.label)
@pytest.mark.parametrize("p", [0.1, 0.5, 0.9])
def test_closed_form_cross_check(spec, p):
    # the log forms converge like 1/ln n, so they need an astronomically large n
    n = 1e100 if spec.id in LOG_IDS else 10**6
    a = predict_energy(spec, n, p, GENERAL).predicted_energy
    b = predict_energy(spec, n, p, CLOSED_FORM).predicted_energy
    assert a == pytest.approx(b, rel=0.01)


def test_sci_displayed_constant_is_half():
    pred = predict_energy(get_spec("sci"), 4000, 0.5, CLOSED_FORM)
    assert pred.paper_displayed == pytest.approx(0.5 * pred.predicted_energy, rel=1e-14)
    assert pred.predicted_energy == pytest.approx(4 * math.sqrt(2) / (3 * math.pi) * math.sqrt(0.5) * 4000,
                                                  rel=1e-14)
    assert predict_energy(get_spec("randic"), 4000, 0.5, CLOSED_FORM).paper_displayed is None


def test_every_catalog_weight_has_closed_form():
    assert all(has_closed_form(s) for s in catalog())


def test_prediction_errors():
    spec = get_spec("unit")
    for p in (0.0, 1.0, -0.5, 2.0):
        with pytest.raises(ValueError):
            predict_energy(spec, 100, p)
    with pytest.raises(ValueError):
        predict_energy(spec, 1, 0.5)
    with pytest.raises(ValueError):
        predict_energy(spec, 100, 0.5, source="nope")
    with pytest.raises(WeightDomainError):
        predict_energy(get_spec("azi"), 2, 0.5)


@pytest.mark.parametrize("index, expected", [
    ("unit", 0.5), ("ag1", 0.5), ("zagreb_m1", 0.75), ("zagreb_m2", 5 / 6), ("azi", 0.875),
    ("mzagreb1_star", 0.5), ("mzagreb2", 0.5), ("lanzhou", 0.5), ("general_randic:1", 5 / 6),
    ("general_randic:0.5", 0.75),
])
def test_argmax_interior(index, expected):
    res = argmax_p(get_spec(index))
    assert res.trend == "interior"
    assert res.p_star == pytest.approx(expected, abs=1e-6)
    assert res.closed_form == pytest.approx(expected)


@pytest.mark.parametrize("index", ["randic", "harmonic", "abc", "sci", "mzagreb1", "general_randic:-0.4"])
def test_argmax_decreasing(index):
    res = argmax_p(get_spec(index))
    assert res.trend == "decreasing"
    assert res.p_star is None


def test_general_randic_flags():
    res = argmax_p(get_spec("general_randic", -1.0))
    assert res.trend == "decreasing"
    assert res.closed_form == pytest.approx(1.5)
    assert stationary_p(get_spec("general_randic", -0.4)) is None
    assert stationary_p(get_spec("general_randic", -0.25)) == pytest.approx(0.0)
    assert stationary_p(get_spec("randic")) is None


def test_argmax_general_source():
    res = argmax_p(get_spec("unit"), n=1000, source=GENERAL)
    assert res.source == GENERAL
    assert res.p_star == pytest.approx(0.5, abs=1e-6)
    # the exact center value of the Lanzhou weight shifts the finite-n maximizer only slightly
    res = argmax_p(get_spec("lanzhou"), n=10**5, source=GENERAL)
    assert abs(res.p_star - 0.5) < 1e-3


def test_catalog_ids_cover_predictions():
    seen = {s.id for s in catalog()}
    assert seen == set(CATALOG_IDS)
    preds = np.array([predict_energy(s, 1000, 0.5).predicted_energy for s in catalog()])
    assert np.all(np.isfinite(preds)) and np.all(preds > 0)
