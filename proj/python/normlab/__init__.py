"""Finite permutation groups and checks of maximal-normalizer results."""

import json

from ._normlab import (
    Group,
    NormlabError,
    __version__,
    analyze,
    build,
    set_enumeration_bound,
    theorem_names,
)
from ._normlab import scan as _scan
from ._normlab import verify as _verify

__all__ = [
    "Group",
    "NormlabError",
    "__version__",
    "analyze",
    "build",
    "scan",
    "set_enumeration_bound",
    "theorem_names",
    "verify",
]


def verify(theorem, group, subgroup="", kernel="", mode="fit-normal"):
    """Reports as dicts, one per mode for the pair theorems."""
    return [json.loads(r) for r in _verify(theorem, group, subgroup, kernel, mode)]


def scan(groups=(), sweep="", max_order=2500, theorems="", mode="both", jobs=1):
    if isinstance(theorems, (list, tuple, set)):
        theorems = ",".join(theorems)
    return json.loads(_scan(list(groups), sweep, max_order, theorems, mode, jobs))
