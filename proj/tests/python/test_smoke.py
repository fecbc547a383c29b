import json
from fractions import Fraction

import pytest

import hessianlab as hl


def test_dimensions():
    assert hl.curvature_space_dim(4) == 20
    assert hl.sym3_dim(4) == 20
    assert hl.jet_dim_metric(3, 0) == 6
    assert hl.jet_dim_hessian_data(2, 0) == 18


def test_rho_round_trip_and_identities():
    a = hl.random_sym3(4, 1)
    assert a["packing"] == "sym3"
    r = hl.rho(a)
    assert r["n"] == 4 and r["order"] == 4
    assert hl.validate(r) == {"valid": True}
    assert hl.identity("quad", r)["entries"] == []
    assert hl.identity("cubic", r)["entries"] == []
    assert hl.pontryagin_vanishes(r, 2)
    assert not hl.pontryagin_vanishes(hl.random_curvature(4, 3), 2)


def test_entries_helper():
    r = hl.random_curvature(3, 2)
    values = hl.entries(r)
    assert all(isinstance(v, Fraction) for v in values.values())
    for (i, j, k, l), v in values.items():
        assert values.get((j, i, k, l), 0) == -v


def test_census_and_miner():
    report = hl.image_rank_census(4, 5, 1)
    assert report["max_rank"] == 18
    basis = hl.mine(4, 2)
    assert len(basis["quotient"]) >= 1


def test_ricci3d():
    a = hl.solve_from_eigenvalues(1, 2, 3)
    ric = hl.rho2(a)
    assert hl.entries(ric) == {(0, 0): 1, (1, 1): 2, (2, 2): 3}
    iso = hl.rho2(hl.solve_from_eigenvalues(Fraction(-7, 3), Fraction(-7, 3), Fraction(-7, 3)))
    assert set(hl.entries(iso).values()) == {Fraction(-7, 3)}
    sol = hl.solve_from_ricci({"n": 3, "order": 2, "packing": "dense",
                               "entries": [["0 0", "2"], ["0 1", "1"], ["1 0", "1"], ["1 1", "2"], ["2 2", "5"]]})
    assert sol["verified"] is True


def test_jets_and_cartan():
    assert hl.jet_report(3, 30)["crossover"] == 12
    assert hl.jet_report(2, 50)["crossover"] == "none"
    rep = hl.cartan_test("1/2", -3, 0)
    assert rep["rank_sigma"] == 3 and rep["rank_sigma1"] == 6 and rep["involutive"] is True


def test_errors():
    with pytest.raises(ValueError):
        hl.rho({"n": 1, "order": 3, "packing": "sym3", "entries": []})
    with pytest.raises(ValueError):
        hl.cartan_test("one half")


def test_cli_in_process():
    code, out, _ = hl.run_cli(["--no-meta", "jets", "--dim", "2", "--cap", "20"])
    assert code == 0
    assert json.loads(out)["crossover"] == "none"
    code, _, err = hl.run_cli(["rho", "--in", "missing.json"])
    assert code == 2 and "missing.json" in err
