import json

import pytest

import ginvspec


def test_pair_is_isospectral():
    h1 = ginvspec.harmonic_spectrum("h1", 12)
    h2 = ginvspec.harmonic_spectrum("h2", 12)
    assert h1["sphere_dim"] == 11
    assert h1["rows"] == h2["rows"]
    assert [r["m"] for r in h1["rows"]][:5] == [1, 0, 3, 0, 6]


def test_spec_dict_round_trip():
    h1, _ = ginvspec.isospectral_pair(3)
    assert ginvspec.molien_series(h1, 6) == ginvspec.molien_series("h1", 6)


def test_custom_spec():
    spec = {"factors": [{"family": "U", "rank": 1}], "ambient_weights": [[1], [-1]]}
    assert ginvspec.molien_series(spec, 4) == [1, 0, 1, 0, 1]


def test_irrep_invariants():
    assert ginvspec.invariant_dim_in_irrep([2, 2], "h1") == 2
    assert ginvspec.invariant_dim_in_irrep([2, 2], "h2") == 2


def test_hemisphere():
    rows = ginvspec.neumann_spectrum(2)
    assert rows[1] == {"j": 1, "lambda": 12, "mult": 3, "dirichlet": 1}


def test_quotient_coords_at_vertex():
    assert ginvspec.quotient_coords([1, 0, 0, 0, 0, 0, 0, 0]) == (1.0, 0.0, -1.0)


def test_cli_polar_vertex():
    code, out, _ = ginvspec.run(["polar", "--space", "o2", "--row", "D"])
    assert code == 0
    assert json.loads(out)["verdict"] == "non-polar"


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        ginvspec.isospectral_pair(4)
    with pytest.raises(ValueError):
        ginvspec.molien_series({"factors": []}, 2)
