"""Python bindings for the mpfkit multi-product formula toolkit."""

import json as _json

from ._core import *  # noqa: F401,F403
from ._core import _bound_report_json, _load_spec_json, _table1_json


def load_spec(doc):
    """Builds a HamiltonianSpec from a dict in the Hamiltonian document format."""
    return _load_spec_json(_json.dumps(doc))


def bound_report(n, k, g, t, eps, p=2, J=2, k_list=None, gamma_count=2):
    """Trotter number, step-condition checks and query cost as a dict."""
    return _json.loads(_bound_report_json(n, k, g, t, eps, p, J, list(k_list or []), gamma_count))


def table1(n, g, t, eps, k=2, p=2, nu=0.0, d=1.0, range="finite"):
    """Query-cost comparison rows as a list of dicts."""
    return _json.loads(_table1_json(n, g, t, eps, k, p, nu, d, range))
