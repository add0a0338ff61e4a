"""Hansen polytopes of split graphs: face counts, classes, and p_G.

Graphs are passed as (n, edges) with 0-based node labels. The heavy lifting
happens in the C++ core; structured reports come back as plain dicts.
"""

import json as _json

from ._core import (
    build_threshold,
    count_faces,
    f_vector,
    hanner_f_vector,
    is_split,
    p_g,
    random_split,
    random_threshold_sequence,
    split_cert,
    threshold_sequence,
)
from . import _core as _c

__all__ = [
    "build_threshold",
    "classify",
    "count_faces",
    "f_vector",
    "hanner_f_vector",
    "is_split",
    "p_g",
    "random_split",
    "random_threshold_sequence",
    "split_cert",
    "threshold_sequence",
    "verify",
]


def verify(n, edges, budget=None, f_vector=False):
    """Run the full face/partition verification; returns the report dict."""
    kwargs = {"f_vector": f_vector}
    if budget is not None:
        kwargs["budget"] = budget
    return _json.loads(_c.verify_json(n, edges, **kwargs))


def classify(n, edges, budget=None):
    """Face census with the four class counts; returns a dict."""
    kwargs = {}
    if budget is not None:
        kwargs["budget"] = budget
    return _json.loads(_c.classes_json(n, edges, **kwargs))
