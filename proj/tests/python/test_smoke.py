"""Smoke tests for the python bindings: the three holonomy regimes, the toy
datum through the JSON schema, and a round trip."""

import json

import numpy as np
import pytest

import homcart


def test_einstein_holonomy():
    params = homcart.SphereParams(2, 2, 1.0, 1.0)
    rep = homcart.holonomy_report(homcart.normal_connection(params))
    assert rep.dim == 10
    assert tuple(rep.killing_signature) == (0, 10, 0)
    assert rep.is_subalgebra and not rep.equals_g


def test_flat_model():
    params = homcart.SphereParams(2, 3, 1.0, -1.0)
    c = homcart.normal_connection(params)
    assert homcart.curvature(c).max_abs() < 1e-10
    assert homcart.wang_holonomy(c).dim == 0
    inf = homcart.infinitesimal_automorphisms(c)
    assert inf.algebra.dim == 21


def test_generic_holonomy_and_oracle():
    params = homcart.SphereParams(2, 2, 1.0, 3.0)
    rep = homcart.holonomy_report(homcart.normal_connection(params))
    assert rep.dim == 15 and rep.equals_g

    closed = homcart.kappa_closed_form(params)
    bracket = homcart.curvature(homcart.normal_connection(params))
    for i in range(closed.size):
        for j in range(i + 1, closed.size):
            assert np.abs(closed.value(i, j) - bracket.value(i, j)).max() < 1e-8


def test_einstein_ratio_and_rho():
    assert homcart.einstein_ratio(homcart.SphereParams(3, 2, 1.0, 1.0)) == pytest.approx(2.0)
    model = homcart.build_sphere_model(homcart.SphereParams(2, 2, 1.0, 1.0))
    assert np.abs(model.rho + np.eye(4) / 6.0).max() < 1e-14


def test_toy_datum_via_json():
    geometry = {
        "kind": "principal",
        "h": {"dim": 3, "structure": [[0, 1, 2, 1.0], [1, 2, 0, 1.0], [0, 2, 1, -1.0]]},
        "g": {"dim": 1, "structure": []},
        "k_basis": [[0.0, 0.0, 1.0]],
        "p_basis": [[1.0]],
        "alpha": [[0.0], [0.0], [1.0]],
    }
    c = homcart.connection_from_json(json.dumps(geometry))
    assert homcart.validate(c).ok
    form = homcart.curvature(c)
    assert form.value(0, 1)[0] == pytest.approx(-1.0)
    assert homcart.wang_holonomy(c).dim == 1

    reloaded = homcart.connection_from_json(homcart.connection_to_json(c))
    assert homcart.wang_holonomy(reloaded).dim == 1


def test_loader_rejects_lower_triangle():
    bad = {
        "kind": "principal",
        "h": {"dim": 3, "structure": [[1, 0, 2, 1.0]]},
        "g": {"dim": 1, "structure": []},
        "k_basis": [[0.0, 0.0, 1.0]],
        "p_basis": [[1.0]],
        "alpha": [[0.0], [0.0], [1.0]],
    }
    with pytest.raises(ValueError):
        homcart.connection_from_json(json.dumps(bad))
