"""Multitangent and analytic-invariant computations for identity-tangent diffeos."""
import json as _json

from . import _mouldinv
from ._mouldinv import MouldinvError, multitangent, multizeta, run_cli, tan_in_te, tan_in_te_count

__all__ = [
    "MouldinvError",
    "borel_oracle",
    "collector",
    "fourier_oracle",
    "invariants",
    "multitangent",
    "multizeta",
    "reduce",
    "run_cli",
    "stuffle",
    "tan_in_te",
    "tan_in_te_count",
]


def _doc(source):
    return source if isinstance(source, str) else _json.dumps(source)


def stuffle(u, v):
    return _json.loads(_mouldinv.stuffle(list(u), list(v)))


def reduce(family, seq, normalized=False, tan_convention="full"):
    return _json.loads(_mouldinv.reduce(family, list(seq), normalized, tan_convention))


def collector(source, weight, scheme="symmetric", reduced=True):
    """source: dict like {"kind": "gstar", "symbolic": [2, 3]} or its JSON text."""
    return _json.loads(_mouldinv.collector(_doc(source), weight, scheme, reduced))


def invariants(source, weight, omegas=(-1, 1), tol=1e-6):
    return _json.loads(_mouldinv.invariants(_doc(source), weight, list(omegas), tol))


def fourier_oracle(source, omega=-1, k=200, nodes=128):
    """Returns (estimate, change between k and 2k)."""
    return _mouldinv.fourier_oracle(_doc(source), omega, k, nodes)


def borel_oracle(source, N=300, window=12):
    return _mouldinv.borel_oracle(_doc(source), N, window)
