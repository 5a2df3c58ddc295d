"""Optimal systems of subalgebras for the algebras L(k).

Rationals are passed and returned as strings such as "3/4".
"""

import json

from ._core import run as _run
from ._core import subspace_distance

__all__ = ["LiesymError", "classify", "bracket", "reduce", "tables", "verify", "jacobi", "subspace_distance"]


class LiesymError(ValueError):
    pass


def _call(args, allow_failure=False):
    code, out, err = _run([str(a) for a in args] + ["--format", "json"])
    if code == 2 or (code != 0 and not allow_failure) or not out:
        raise LiesymError(err.strip() or f"exit status {code}")
    return json.loads(out)


def _opt(flag, value):
    return [] if value is None else [flag, value]


def classify(k, data_dir=None):
    return _call(["classify", "--k", k] + _opt("--data-dir", data_dir))


def bracket(x, y, k=None, basis="v", data_dir=None):
    args = ["bracket", "--x", x, "--y", y, "--basis", basis] + _opt("--k", k) + _opt("--data-dir", data_dir)
    return _call(args)["result"]


def reduce(k, vectors, basis="v", data_dir=None):
    """Reduce the subalgebra spanned by the vectors, given as lists or "2,3,5,0" strings."""
    if vectors and not isinstance(vectors[0], (list, tuple, str)):
        vectors = [vectors]
    args = ["reduce", "--k", k, "--basis", basis] + _opt("--data-dir", data_dir)
    for v in vectors:
        args += ["--vector", v if isinstance(v, str) else ",".join(str(x) for x in v)]
    return _call(args)


def tables(case=None, k=None, basis=None, dim=None, data_dir=None):
    args = ["tables"] + _opt("--case", case) + _opt("--k", k) + _opt("--basis", basis) + _opt("--dim", dim)
    return _call(args + _opt("--data-dir", data_dir))


def verify(k, samples=1000, tol=1e-8, seed=0, data_dir=None):
    args = ["verify", "--k", k, "--samples", samples, "--tol", repr(tol), "--seed", seed]
    return _call(args + _opt("--data-dir", data_dir), allow_failure=True)


def jacobi(k=None, basis="v", data_dir=None):
    return _call(["jacobi", "--basis", basis] + _opt("--k", k) + _opt("--data-dir", data_dir), allow_failure=True)
