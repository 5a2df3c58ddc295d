import numpy as np
import pytest

import liesym


def test_classify():
    c = liesym.classify("3/4")
    assert c["schema"] == 1
    assert c["case"] == "KHIGH"
    assert c["alpha"] == "-1/3"
    assert liesym.classify("0")["case"] == "K0"


def test_bracket():
    assert liesym.bracket("v2", "v4", k="1/2") == "-1/2 * v2"
    assert liesym.bracket("v2", "v4") == "-k * v2"


def test_reduce():
    r = liesym.reduce("3/4", [2, 3, 5, 0], basis="e")
    assert r["label"] == "{e3 + a e4}"
    assert r["params"]["a"] == "0"
    assert r["certificate"] == "exact"
    two = liesym.reduce("0", ["1,0,0,0", "0,1,0,0"], basis="e")
    assert two["dim"] == 2


def test_tables_and_jacobi():
    t = liesym.tables(case="generic")
    assert len(t["entries"]) == 20
    assert liesym.jacobi()["ok"]


def test_verify_is_deterministic():
    a = liesym.verify("0", samples=30, seed=3)
    assert a["pass"]
    assert a == liesym.verify("0", samples=30, seed=3)


def test_errors():
    with pytest.raises(liesym.LiesymError):
        liesym.classify("abc")
    with pytest.raises(liesym.LiesymError):
        liesym.reduce("3/4", [1, 2])


def test_subspace_distance():
    a = np.array([[1.0, 0, 0, 0]])
    assert liesym.subspace_distance(a, 2 * a) == pytest.approx(0.0)
    assert liesym.subspace_distance(a, np.array([[0.0, 1, 0, 0]])) == pytest.approx(np.sqrt(2))
