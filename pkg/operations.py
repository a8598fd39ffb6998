"""
JSON-shaped results for every user-facing operation.

The CLI and the API both call these, so the two surfaces always emit the
same documents.
"""
import logging
from typing import Any, Dict, List

import numpy as np

from catalog import build_catalog
from certificates import (
    Certificate,
    RelatorFamily,
    RelatorInstance,
    convert_relator,
    gamma_certificate,
    verify_certificate,
)
from homology import basis_labels, correction_twists, is_identity, push_action
from presentations import (
    free_pi_presentation,
    parity_coset_table,
    pi_presentation,
    plus_namer,
    reidemeister_schreier,
    verify_mod_square_identities,
)
from quotient import nf
from surface import SurfaceParams, in_gamma, p_length, position_counts
from words import format_word, parse_word

logger = logging.getLogger("torelli-operations")


def matrix_json(m: np.ndarray) -> List[List[int]]:
    return [[int(value) for value in row] for row in m]


def gamma_report(text: str, params: SurfaceParams) -> Dict[str, Any]:
    """Membership plus the O/E profile; the profile is null when the p-length is odd."""
    w = parse_word(text, params)
    length = p_length(w, params)
    profile = None
    if length % 2 == 0:
        counts = position_counts(w, params)
        profile = {"O": list(counts.odd), "E": list(counts.even)}
    return {"member": in_gamma(w, params), "profile": profile, "p_length": length}


def normal_form_report(text: str, params: SurfaceParams) -> Dict[str, Any]:
    return nf(parse_word(text, params), params).to_json()


def action_report(text: str, params: SurfaceParams) -> Dict[str, Any]:
    m = push_action(parse_word(text, params), params)
    return {"basis": basis_labels(params), "matrix": matrix_json(m), "identity": is_identity(m)}


def certify_report(text: str, params: SurfaceParams) -> List[Dict[str, Any]]:
    w = parse_word(text, params)
    certificate = gamma_certificate(w, params)
    return certificate.to_json()


def verify_report(entries: List[Dict[str, Any]], text: str, params: SurfaceParams) -> Dict[str, Any]:
    certificate = Certificate.from_json(entries, params)
    return {"valid": verify_certificate(certificate, parse_word(text, params))}


def rs_report(params: SurfaceParams, with_relators: bool = False) -> Dict[str, Any]:
    """Parity-subgroup presentation of the free group, or of pi when ``with_relators``."""
    pres = pi_presentation(params) if with_relators else free_pi_presentation(params)
    sub = reidemeister_schreier(pres, parity_coset_table(pres, params), plus_namer(params))
    data = sub.to_json()
    data["expansions"] = {str(gen): format_word(word) for gen, word in sub.expansions.items()}
    return data


def catalog_report(g: int, b: int) -> Dict[str, Any]:
    return build_catalog(g, b).to_json()


def convert_report(family: str, indices: List[int], target: str) -> Dict[str, Any]:
    relator = RelatorInstance(RelatorFamily(family), tuple(indices))
    certificate = convert_relator(relator, target)
    return {"relator": str(relator), "target": RelatorFamily(target).value, "entries": certificate.to_json()}


def correction_report(n: List[int], params: SurfaceParams) -> Dict[str, Any]:
    correction = correction_twists(n, params)
    return {
        "twists": [list(twist) for twist in correction.twists],
        "matrix": matrix_json(correction.matrix),
        "verified": correction.verified,
    }


def identities_report(g: int) -> Dict[str, Any]:
    report = verify_mod_square_identities(g)
    return {"g": report.g, "checked": report.checked, "passed": report.passed, "failures": report.failures}
