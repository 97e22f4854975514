"""Exact models of a family of cyclic-cover surfaces.

Thin wrappers over the compiled extension: report builders return plain
dicts decoded from the extension's JSON output, scalar helpers pass
through unchanged.
"""

import json as _json

from ._supell import (
    area_term,
    classify_json,
    conformal_json,
    equiv_json,
    family_genus,
    family_json,
    harvey_json,
    harvey_xi,
    riemann_hurwitz_genus,
)

__all__ = [
    "area_term",
    "classify",
    "conformal",
    "equiv",
    "family",
    "family_genus",
    "harvey",
    "harvey_xi",
    "riemann_hurwitz_genus",
]


def family(n, a, lam="", lam_quad=""):
    """Full report on the family member (n, a).

    The parameter stays symbolic unless pinned: ``lam`` takes "p" or
    "p/q", ``lam_quad`` takes "p,q,d" meaning p + q*sqrt(d).
    """
    return _json.loads(family_json(n, a, lam, lam_quad))


def classify(n, signature, moves="scalar"):
    """Orbit classification of genus-0 generating vectors for Z/nZ."""
    return _json.loads(classify_json(n, signature, moves))


def equiv(n, v1, v2, moves="scalar"):
    """Move-set equivalence test for two generating vectors mod n."""
    return _json.loads(equiv_json(n, list(v1), list(v2), moves))


def conformal(n, a):
    """Moebius obstruction search and the exceptional parameter values."""
    return _json.loads(conformal_json(n, a))


def harvey(m, eta):
    """Rotation exponent eta at a fixed point of period m, and xi."""
    return _json.loads(harvey_json(m, eta))
