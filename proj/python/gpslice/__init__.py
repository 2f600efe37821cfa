"""Exact slice-function computations over rational Clifford polynomials.

Stems, polynomials and multivectors use the same JSON layout as the
``gpslice`` command line tool; here they are plain dicts.
"""

import json

from . import _core
from ._core import PreconditionError

__all__ = [
    "PreconditionError",
    "almansi_ab",
    "classical_almansi",
    "evaluate",
    "gcr_residual",
    "gsr_basis",
    "induce",
    "polymonogenic_almansi",
    "product",
    "run_cli",
    "vekua_jet_basis",
]


def _dumps(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def gsr_basis(p, q, degree, omit_x0=False):
    return json.loads(_core.gsr_basis(p, q, degree, omit_x0))


def gcr_residual(stem):
    return json.loads(_core.gcr_residual(_dumps(stem)))


def induce(stem):
    return json.loads(_core.induce(_dumps(stem)))


def almansi_ab(stem):
    return json.loads(_core.almansi_ab(_dumps(stem)))


def classical_almansi(polynomial, N):
    return json.loads(_core.classical_almansi(_dumps(polynomial), N))


def polymonogenic_almansi(polynomial, N):
    return json.loads(_core.polymonogenic_almansi(_dumps(polynomial), N))


def vekua_jet_basis(p, q, lam, order):
    return json.loads(_core.vekua_jet_basis(p, q, str(lam), order))


def product(a, b):
    return json.loads(_core.product(_dumps(a), _dumps(b)))


def evaluate(polynomial, point):
    return json.loads(_core.evaluate(_dumps(polynomial), [str(c) for c in point]))


def run_cli(args):
    """Runs the command line tool in-process; returns (exit code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
