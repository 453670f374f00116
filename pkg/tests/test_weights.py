import math

import numpy as np
import pytest

from graphenergy.graph import Graph, make_named, sample_gnp, Seed
from graphenergy.weights import (
    CATALOG_IDS,
    WeightDomainError,
    build_weighted_adjacency,
    catalog,
    center_scale,
    center_value,
    custom_weight,
    eval_weight,
    get_spec,
    uncenter,
)


@pytest.mark.parametrize("index, di, dj, n, expected", [
    ("zagreb_m1", 3, 4, 0, 7.0),
    ("zagreb_m2", 3, 4, 0, 12.0),
    ("randic", 2, 2, 0, 0.5),
    ("abc", 1, 1, 0, 0.0),
    ("abc", 2, 3, 0, math.sqrt(3 / 6)),
    ("azi", 2, 2, 0, 8.0),
    ("ag1", 1, 4, 0, 0.8),
    ("harmonic", 1, 3, 0, 0.5),
    ("sci", 2, 2, 0, 0.5),
    ("mzagreb1", 1, 1, 0, 0.0),
    ("mzagreb1_star", 1, 2, 0, math.log(3)),
    ("mzagreb2", 2, 3, 0, math.log(6)),
    ("lanzhou", 2, 2, 4, 4.0),
    ("unit", 5, 9, 0, 1.0),
])
def test_eval_weight_values(index, di, dj, n, expected):
    assert eval_weight(get_spec(index), di, dj, n) == pytest.approx(expected, rel=1e-15, abs=0)


def test_general_randic_value():
    assert eval_weight(get_spec("general_randic", 0.5), 4, 9) == pytest.approx(6.0)


@pytest.mark.parametrize("index, di, dj", [
    ("azi", 1, 1), ("randic", 0, 3), ("general_randic:-1", 0, 2), ("mzagreb1", 0, 2),
])
def test_eval_weight_domain_errors(index, di, dj):
    with pytest.raises(WeightDomainError):
        eval_weight(get_spec(index), di, dj, 10)


def test_eval_weight_rejects_negative_degree():
    with pytest.raises(ValueError):
        eval_weight(get_spec("unit"), -1, 2)


@pytest.mark.parametrize("spec", catalog(alpha=0.7), ids=lambda s: s.label)
def test_symmetry_exhaustive(spec):
    d = np.arange(1, 51, dtype=float)
    x, y = np.meshgrid(d, d)
    fx = spec(x, y, 60)
    fy = spec(y, x, 60)
    mask = np.isfinite(fx)
    assert np.array_equal(mask, np.isfinite(fy))
    assert np.array_equal(fx[mask], fy[mask])


def test_general_randic_specializations():
    d = np.arange(1, 51, dtype=float)
    x, y = np.meshgrid(d, d)
    np.testing.assert_allclose(get_spec("general_randic", 1.0)(x, y), get_spec("zagreb_m2")(x, y),
                               rtol=1e-15)
    np.testing.assert_allclose(get_spec("general_randic", -0.5)(x, y), get_spec("randic")(x, y),
                               rtol=1e-15)


@pytest.mark.parametrize("spec", catalog(alpha=-1.5), ids=lambda s: s.label)
@pytest.mark.parametrize("n", [50, 100, 1000, 10_000])
@pytest.mark.parametrize("p", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_growth_bounds(spec, n, p):
    c, m = spec.growth
    d = math.ceil(n * p)
    f = abs(float(spec(d, d, n)))
    assert math.isfinite(f) and f > 0
    assert f <= c * n**m
    assert 1.0 / f <= c * n**m


@pytest.mark.parametrize("index, n, p, expected", [
    ("randic", 100, 0.5, 0.02),
    ("zagreb_m1", 100, 0.5, 100.0),
    ("sci", 200, 0.5, 0.07071067811865475),
    ("ag1", 37, 0.3, 1.0),
    ("lanzhou", 100, 0.5, 2 * 99 * 50 - 2 * 50**2),
])
def test_center_values(index, n, p, expected):
    assert center_value(get_spec(index), n, p) == pytest.approx(expected, rel=1e-14)


def test_lanzhou_center_leading_form():
    n, p = 10**6, 0.3
    assert center_value(get_spec("lanzhou"), n, p) / (2 * n**2 * p * (1 - p)) == pytest.approx(1, abs=1e-5)


def test_center_value_zero_rejected():
    with pytest.raises(WeightDomainError):
        center_value(get_spec("mzagreb2"), 2, 0.5)  # 2 ln(1) = 0
    with pytest.raises(WeightDomainError):
        center_value(get_spec("azi"), 2, 0.5)  # 2np - 2 = 0


def test_build_path_randic():
    a = build_weighted_adjacency(make_named("path", 3), get_spec("randic"))
    r = 1 / math.sqrt(2)
    np.testing.assert_allclose(a, [[0, r, 0], [r, 0, r], [0, r, 0]], rtol=1e-15)


def test_build_complete_unit():
    g = make_named("complete", 4)
    np.testing.assert_array_equal(build_weighted_adjacency(g, get_spec("unit")), np.ones((4, 4)) - np.eye(4))


@pytest.mark.parametrize("index", CATALOG_IDS)
def test_build_empty_is_zero(index):
    a = build_weighted_adjacency(make_named("empty", 5), get_spec(index, 0.5))
    assert not a.any()


def test_build_reports_offending_edge():
    g = Graph(5, [(0, 1), (2, 3), (3, 4)])
    with pytest.raises(WeightDomainError) as info:
        build_weighted_adjacency(g, get_spec("azi"))
    assert info.value.edge == (0, 1)
    assert info.value.degrees == (1, 1)
    assert "(0, 1)" in str(info.value)


def test_build_symmetric_zero_diagonal():
    g = sample_gnp(60, 0.4, Seed(8))
    for spec in catalog():
        a = build_weighted_adjacency(g, spec)
        assert np.array_equal(a, a.T)
        assert not np.diag(a).any()


def test_center_scale_examples():
    out = center_scale(np.zeros((4, 4)), 1.0, 0.3)
    expected = np.full((4, 4), -0.3)
    np.fill_diagonal(expected, 0.0)
    np.testing.assert_array_equal(out, expected)

    k = np.ones((5, 5)) - np.eye(5)
    out = center_scale(k, 1.0, 0.25)
    assert np.allclose(out[~np.eye(5, dtype=bool)], 0.75)

    a = build_weighted_adjacency(make_named("path", 3), get_spec("randic"))
    fc = 0.4
    out = center_scale(a, fc, 0.2)
    assert out[0, 1] == pytest.approx(a[0, 1] / fc - 0.2)
    assert out[0, 2] == pytest.approx(-0.2)

    with pytest.raises(ValueError):
        center_scale(a, 0.0, 0.5)


@pytest.mark.parametrize("spec", catalog(), ids=lambda s: s.label)
def test_center_scale_inverse(spec):
    n, p = 80, 0.45
    a = build_weighted_adjacency(sample_gnp(n, p, Seed(21)), spec)
    fc = center_value(spec, n, p)
    back = uncenter(center_scale(a, fc, p), fc, p)
    scale = np.max(np.abs(a))
    assert np.max(np.abs(back - a)) <= 1e-12 * scale


def test_get_spec_parsing():
    assert get_spec("general_randic:0.5").alpha == 0.5
    assert get_spec("general_randic", -1).label == "general_randic:-1"
    with pytest.raises(ValueError):
        get_spec("general_randic")
    with pytest.raises(ValueError):
        get_spec("general_randic", 10.0)
    with pytest.raises(ValueError):
        get_spec("general_randic", float("nan"))
    with pytest.raises(ValueError):
        get_spec("randic:2")
    with pytest.raises(ValueError):
        get_spec("nope")


def test_custom_weight_hook():
    spec = custom_weight("max_degree", lambda x, y, n: np.maximum(x, y))
    a = build_weighted_adjacency(make_named("path", 3), spec)
    assert a[0, 1] == 2.0
    with pytest.raises(ValueError):
        custom_weight("randic", lambda x, y, n: x)
