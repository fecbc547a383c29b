"""Exact tensor laboratory for the curvature obstructions of Hessian metrics.

Tensors and reports are plain dicts in the tensor JSON layout
({"n", "order", "packing", "entries": [["i j k", "p/q"], ...]}).
"""

import json
from fractions import Fraction

from . import _core
from ._core import FormatError, InvariantError, VerificationError, curvature_space_dim, sym3_dim

__all__ = [
    "FormatError",
    "InvariantError",
    "VerificationError",
    "cartan_test",
    "curvature_space_dim",
    "entries",
    "identity",
    "image_rank_census",
    "jet_dim_hessian_data",
    "jet_dim_metric",
    "jet_report",
    "mine",
    "pontryagin_vanishes",
    "random_curvature",
    "random_sym3",
    "rho",
    "rho2",
    "run_cli",
    "solve_from_eigenvalues",
    "solve_from_ricci",
    "sym3_dim",
    "validate",
]


def _load(text):
    return json.loads(text)


def _dump(doc):
    return json.dumps(doc)


def entries(doc):
    """Nonzero entries of a tensor document as {(i, j, ...): Fraction}."""
    return {tuple(int(x) for x in key.split()): Fraction(value) for key, value in doc["entries"]}


def random_sym3(n, seed, bound=10):
    return _load(_core.random_sym3(n, seed, bound))


def random_curvature(n, seed, bound=10):
    return _load(_core.random_curvature(n, seed, bound))


def rho(sym3):
    return _load(_core.rho(_dump(sym3)))


def rho2(sym3):
    return _load(_core.rho2(_dump(sym3)))


def identity(which, tensor):
    """'quad' or 'cubic' 4-form of a curvature tensor."""
    return _load(_core.identity(which, _dump(tensor)))


def pontryagin_vanishes(tensor, p):
    return _core.pontryagin_vanishes(_dump(tensor), p)


def validate(tensor):
    return _load(_core.validate(_dump(tensor)))


def image_rank_census(n, samples, seed, bound=10):
    return _load(_core.image_rank_census(n, samples, seed, bound))


def mine(n, degree, seed=1, max_samples=0):
    return _load(_core.mine(n, degree, seed, max_samples))


def solve_from_eigenvalues(l1, l2, l3):
    return _load(_core.solve_from_eigenvalues(str(Fraction(l1)), str(Fraction(l2)), str(Fraction(l3))))


def solve_from_ricci(tensor):
    return _load(_core.solve_from_ricci(_dump(tensor)))


def jet_report(n, cap):
    return _load(_core.jet_report(n, cap))


def jet_dim_metric(n, k):
    return int(_core.jet_dim_metric(n, k))


def jet_dim_hessian_data(n, k):
    return int(_core.jet_dim_hessian_data(n, k))


def cartan_test(alpha=0, beta=0, gamma=0):
    return _load(_core.cartan_test(str(Fraction(alpha)), str(Fraction(beta)), str(Fraction(gamma))))


def run_cli(args):
    """Runs the command-line front end in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli(list(args))
