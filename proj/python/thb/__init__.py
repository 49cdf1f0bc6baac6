"""Python interface to the Turing-Hopf bifurcation toolkit.

The heavy lifting lives in the compiled extension ``_thb``; this package adds
thin conveniences that parse the JSON reports into dictionaries.
"""

import json as _json

from _thb import (  # noqa: F401
    PreconditionError,
    analyze_json,
    equilibrium,
    eps_star,
    first_turing_curve,
    hopf_json,
    normal_form_json,
    region_of,
    simulate_json,
    turing_hopf_point,
    turing_thresholds_json,
)


def analyze(a, b, d):
    """Full analysis report as a dictionary (schema ``thb/1``)."""
    return _json.loads(analyze_json(a, b, d))


def turing_thresholds(a, b, d):
    return _json.loads(turing_thresholds_json(a, b, d))


def hopf(a, b, d, eps):
    return _json.loads(hopf_json(a, b, d, eps))


def normal_form(a, b, d):
    return _json.loads(normal_form_json(a, b, d))


def simulate(config):
    """Run one simulation from a config dictionary; returns a dictionary."""
    return _json.loads(simulate_json(_json.dumps(config)))
