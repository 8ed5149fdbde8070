"""Holomorphic isometries from the unit ball into type IV domains."""

import json

from ._core import (
    Domain,
    LieballError,
    __version__,
    apply,
    ball_aut_to_origin,
    canonical_unitary,
    catalog_eval,
    catalog_families,
    cayley,
    classify_point,
    defining_values,
    domain,
    equivalence_witness,
    expected_lambda,
    is_member,
    jacobian,
    kernel_identity_residual,
    kernel_signature,
    lift,
    metric_matrix,
    power_signature,
    pullback_metric,
    run_acceptance,
    takagi,
    typeiv_aut_to_origin,
)
from . import _core


def isometry_check(key, lam, samples=200, seed=0, tol=1e-9, radius=0.9):
    return json.loads(_core._isometry_check(key, float(lam), samples, seed, tol, radius))


def proper_check(key, samples=200, seed=0, tol=1e-9):
    return json.loads(_core._proper_check(key, samples, seed, tol))


def classify(key):
    return json.loads(_core._classify(key))


def normalize_unitary(u):
    return json.loads(_core._normalize_unitary(u))


def mapping_residual(key, order=8):
    return json.loads(_core._mapping_residual(key, order))


def normal_form(key, order=8):
    return json.loads(_core._normal_form(key, order))
