"""Stable JSON rendering (schema 1) of profiles, classifications and verification reports."""
from __future__ import annotations

import json

from .closed_forms import SrgParameters
from .geodesics import StressProfile
from .graph import UNREACHABLE
from .structure import ClassificationReport
from .verify import VerificationReport

SCHEMA_VERSION = 1


def _srg(p: SrgParameters | None):
    if p is None:
        return None
    return {"v": p.v, "k": p.k, "lambda": p.lam, "mu": p.mu}


def to_json_dict(report, *, include_timing: bool = True) -> dict:
    if isinstance(report, StressProfile):
        return {"schema": SCHEMA_VERSION, "n": report.n, "stress": list(report.stress), "total": report.total}
    if isinstance(report, ClassificationReport):
        return {
            "schema": SCHEMA_VERSION,
            "n": report.n,
            "is_connected": report.is_connected,
            "diameter": None if report.diameter is UNREACHABLE else report.diameter,
            "stress_regular_k": report.stress_regular_k,
            "simplicial": sorted(report.simplicial),
            "srg": _srg(report.srg),
            "one_stress_center": report.one_stress_center,
            "recognized_family": report.recognized_family.value,
            "findings": list(report.findings),
        }
    if isinstance(report, VerificationReport):
        out = {
            "schema": SCHEMA_VERSION,
            "theorem": report.theorem,
            "max_n": report.max_n,
            "scope": report.scope,
            "graphs_scanned": report.graphs_scanned,
            "counts_by_n": {str(n): c for n, c in sorted(report.counts_by_n.items())},
            "witnesses": list(report.witnesses),
            "counterexamples": list(report.counterexamples),
            "verified": report.verified,
            "notes": list(report.notes),
        }
        if include_timing:
            out["elapsed"] = round(report.elapsed, 3)
        return out
    raise TypeError(f"cannot serialise {type(report).__name__}")


def emit_json(report, *, include_timing: bool = True) -> str:
    return json.dumps(to_json_dict(report, include_timing=include_timing), separators=(",", ":"))
