"""Exact S_n-equivariant Euler characteristics of moduli spaces of pointed curves.

Rationals are returned as fractions.Fraction, polynomials in the power sums
p_j as dicts keyed by cycle type, e.g. {(2,): 1/2, (1, 1): 1/2}.
"""

import json

from ._core import (
    BudgetError,
    DomainError,
    Error,
    InvariantError,
    SchemaError,
    UnstableError,
    __version__,
    bernoulli,
    c_sum,
    coefficient_table,
    config_series_json,
    count_connected_monodromies,
    count_residue_tuples,
    divisors,
    euler_phi,
    mgn_series,
    mn_character,
    mobius,
    orb_chi,
    p_to_schur,
    printed_form_names,
    selftest,
    signatures,
)


def config_series(document, max_points):
    """Series for a group-action or strata document given as a dict or JSON string."""
    if not isinstance(document, str):
        document = json.dumps(document)
    return config_series_json(document, max_points)


def schur_series(genus, max_points):
    """Schur multiplicities of each t^n coefficient of mgn_series."""
    return [p_to_schur(terms, n) for n, terms in enumerate(mgn_series(genus, max_points))]
