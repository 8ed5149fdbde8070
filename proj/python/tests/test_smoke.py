import math

import numpy as np
import pytest

import lieball


def test_version():
    assert lieball.__version__.count(".") == 2


def test_izero_evaluation():
    f = lieball.catalog_eval("Izero:n=3", [0.3, 0.0, 0.4])
    assert np.allclose(f, [0.3, 0.0, 1 - math.sqrt(0.75), 0.4], atol=1e-15)


def test_pole_raises_with_code():
    with pytest.raises(lieball.LieballError) as info:
        lieball.catalog_eval("RIV:n=2", [0.0, 1.0])
    assert info.value.code == "Pole"


def test_takagi_matches_singular_values():
    rng = np.random.default_rng(1)
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    s = (a + a.T) / 2
    v, lam = lieball.takagi(s)
    assert np.allclose(lam, np.linalg.svd(s, compute_uv=False), atol=1e-9)
    assert np.allclose(v.T @ s @ v, np.diag(lam), atol=1e-9)


def test_isometry_and_properness():
    assert lieball.isometry_check("RIV:n=3", 1.0, samples=50)["pass"]
    assert not lieball.isometry_check("whitneyIV:n=3", 1.5, samples=50)["pass"]
    assert lieball.proper_check("whitneyIV:n=3", samples=50)["pass"]
    assert lieball.expected_lambda(1, 2) == [1.0, 2.0]


def test_metric_at_origin():
    g = lieball.metric_matrix(lieball.Domain.type_iv(3), [0, 0, 0])
    assert np.allclose(g, 3 * np.eye(3))


def test_apply_isotropy():
    rng = np.random.default_rng(2)
    a, _ = np.linalg.qr(rng.normal(size=(3, 3)))
    t = np.eye(5, dtype=complex)
    t[:3, :3] = a
    z = np.array([0.1 + 0.2j, -0.3, 0.05j])
    img = lieball.apply(lieball.Domain.type_iv(3), t, z)
    assert np.allclose(img, z @ a, atol=1e-14)
    assert not lieball.is_member(lieball.Domain.type_iv(3), 2 * t)


def test_signatures():
    assert lieball.power_signature(2, 2) == (4, 2, 0)
    assert lieball.kernel_signature("exhp0:n=2")[1] >= 1


def test_classification():
    report = lieball.classify("Itheta:n=2,theta=0.2618")
    assert report["case"] == "irrational"
    assert report["beta"] == pytest.approx(0.2618, abs=1e-8)
    assert lieball.classify("RIV:n=3")["case"] == "rational"
    b, t = lieball.equivalence_witness(2, math.pi / 6)
    assert b.shape == (3, 3) and t.shape == (5, 5)


def test_jets():
    assert lieball.mapping_residual("heis-cayley:n=3,N=5")["vanishes"]
    report = lieball.normal_form("heis-psi:n=3,N=5,psi=z1^2")
    assert report["mapping_vanishes"]
