"""Singularities of Calabi-Yau hypersurfaces in weighted projective 4-space
and of quotients of abelian surfaces, computed exactly.

Reports are plain dicts with the same layout as the ``cytk --json`` output.
Rationals are "num/den" strings; ``fraction`` converts them.
"""

import json
from fractions import Fraction

from . import _core
from ._core import TorusError, is_partitionable, is_quasismooth

__all__ = [
    "TorusError",
    "analyze",
    "builtin_actions",
    "census",
    "enumerate_zero_c2",
    "fraction",
    "is_partitionable",
    "is_quasismooth",
    "orbifold_c2",
    "surface",
    "torus_quotient",
]


def fraction(text):
    return Fraction(text)


def analyze(degree, weights):
    return json.loads(_core.analyze(degree, list(weights)))


def census(text, jobs=1):
    return json.loads(_core.census(text, jobs))


def orbifold_c2(multiset):
    return Fraction(_core.orbifold_c2(multiset))


def surface(multiset):
    return json.loads(_core.surface(multiset))


def enumerate_zero_c2():
    return json.loads(_core.enumerate_zero_c2())


def builtin_actions():
    return json.loads(_core.builtin_actions())


def torus_quotient(builtin=None, action=None, cap=48):
    """Either the name of a built-in action or an action dict
    {"label": ..., "generators": [{"linear": ..., "translation": [...]}]}."""
    if (builtin is None) == (action is None):
        raise ValueError("pass exactly one of builtin= or action=")
    if builtin is not None:
        return json.loads(_core.torus_quotient_builtin(builtin, cap))
    return json.loads(_core.torus_quotient_json(json.dumps(action), cap))
