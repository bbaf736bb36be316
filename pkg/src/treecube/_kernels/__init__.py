"""Kernel backend selection.

Hot kernels (all-pairs BFS, canonical labeling, maximal cliques) exist twice:
a compiled Cython module ``_ckern`` restricted to graphs on at most 64
vertices, and the pure-Python ``pykern`` that handles any order. The compiled
module is preferred when it imported cleanly; set ``TREECUBE_PURE_PYTHON=1``
to force the fallback. Both backends are required to produce byte-identical
results, which ``tests/test_kernels.py`` enforces.
"""

from __future__ import annotations

import importlib
import os

from . import pykern

_ckern = None
if os.environ.get("TREECUBE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        _ckern = importlib.import_module("._ckern", __name__)
    except ImportError:
        _ckern = None

COMPILED_AVAILABLE = _ckern is not None
_CKERN_MAX_P = 64


def backend_name(p: int = 0) -> str:
    """Name of the backend that would serve a graph on ``p`` vertices."""
    if _ckern is not None and p <= _CKERN_MAX_P:
        return _ckern.BACKEND
    return pykern.BACKEND


def all_pairs_distances(p: int, adj: list[int]) -> list[list[int]]:
    if _ckern is not None and p <= _CKERN_MAX_P:
        return _ckern.all_pairs_distances(p, adj)
    return pykern.all_pairs_distances(p, adj)


def canonical_labeling(p: int, adj: list[int]) -> tuple[bytes, list[int]]:
    if _ckern is not None and p <= _CKERN_MAX_P:
        return _ckern.canonical_labeling(p, adj)
    return pykern.canonical_labeling(p, adj)


def maximal_cliques(p: int, adj: list[int]) -> list[int]:
    if _ckern is not None and p <= _CKERN_MAX_P:
        return _ckern.maximal_cliques(p, adj)
    return pykern.maximal_cliques(p, adj)
