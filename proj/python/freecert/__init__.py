"""Free group words, Whitehead graphs, axes and non-simplicity certificates."""

import json

from . import _core
from ._core import (
    BudgetExceeded,
    InputError,
    WindowExhausted,
    cut_vertices,
    cyclic_reduce,
    is_simple,
    minimize,
    reduce,
    run,
    whitehead_edges,
)


def axis_overlap(g, h, rank=None):
    """Common vertex count of the two axes, or "infinite"."""
    return json.loads(_core.axis_overlap_json(g, h, rank))["overlap"]


def certify(word, pivot=None, rank=None):
    return json.loads(_core.certify_json(word, pivot, rank))


def verify_paper(rank=2, seed=1):
    return json.loads(_core.verify_paper_json(rank, seed))


def corpus(rank, length, count=1000, seed=1, jobs=1):
    """count=None enumerates every cyclically reduced word of the length."""
    return json.loads(_core.corpus_json(rank, length, count, seed, jobs))


__all__ = [
    "BudgetExceeded",
    "InputError",
    "WindowExhausted",
    "axis_overlap",
    "certify",
    "corpus",
    "cut_vertices",
    "cyclic_reduce",
    "is_simple",
    "minimize",
    "reduce",
    "run",
    "verify_paper",
    "whitehead_edges",
]
