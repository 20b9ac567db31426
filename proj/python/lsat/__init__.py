"""Exact certifier for satellite L-space knots.

Descriptions are dicts (or shortcut strings such as "trefoil" or "T(2,5)"),
integers may be ints or decimal strings, slopes and slope sets are strings
like "7/2", "inf" or "[1/2, 1/7]".
"""

import csv
import io
import json

from . import _core
from ._core import LsatError

__all__ = [
    "LsatError",
    "certify",
    "replay",
    "cable",
    "sweep",
    "lemma_params",
    "set_union",
    "interior",
    "covers",
    "uncovered",
    "contains",
    "gap_witness",
]


def _arg(description):
    return description if isinstance(description, str) else json.dumps(description)


def certify(pattern, companion, mirror=False):
    """Runs the certification pipeline and returns the certificate as a dict."""
    return json.loads(_core.certify(_arg(pattern), _arg(companion), mirror))


def replay(certificate):
    """Re-decides every recorded check of a certificate dict."""
    return json.loads(_core.replay(_arg(certificate)))


def cable(companion, p, q):
    """Compares the sufficient test with the exact cabling criterion."""
    return json.loads(_core.cable(_arg(companion), str(p), str(q)))


def sweep(companions, p_max, q_max, threads=1):
    """Returns the cable sweep as a list of row dicts."""
    text = _core.sweep([_arg(c) for c in companions], p_max, q_max, threads)
    return list(csv.DictReader(io.StringIO(text)))


def lemma_params(pattern, g_k):
    """Minimal (a, b, r) for a pattern and companion genus, as ints."""
    d = json.loads(_core.lemma_params(_arg(pattern), str(g_k)))
    return {k: int(v) for k, v in d.items()}


def set_union(*sets):
    return _core.set_union(list(sets))


def interior(s):
    return _core.interior(s)


def uncovered(a, b):
    """A slope in neither set, or None when the two sets cover the circle."""
    return _core.uncovered(a, b)


def covers(a, b):
    return _core.uncovered(a, b) is None


def contains(s, slope):
    return _core.contains(s, str(slope))


def gap_witness(u, v):
    return _core.gap_witness(str(u), str(v))
