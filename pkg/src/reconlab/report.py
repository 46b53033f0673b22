"""Versioned JSON report documents for claim verdicts."""

from __future__ import annotations

import json
from typing import Any

from . import __version__
from .claims import ClaimId, ClaimReport, QuantifiedReport, Witness
from .hypo import Matching

SCHEMA = "reconlab-report"
VERSION = 1


def witness_to_dict(w: Witness | None) -> dict | None:
    if w is None:
        return None
    return {
        "quantity": w.quantity,
        "vertices": list(w.vertices),
        "mapped": list(w.mapped),
        "length": w.length,
        "left": w.left,
        "right": w.right,
    }


def witness_from_dict(d: dict | None) -> Witness | None:
    if d is None:
        return None
    return Witness(
        d["quantity"],
        tuple(d.get("vertices", ())),
        tuple(d.get("mapped", ())),
        d.get("length"),
        d.get("left"),
        d.get("right"),
    )


def claim_to_dict(r: ClaimReport) -> dict:
    return {
        "claim": r.claim.value,
        "mode": r.mode,
        "verdict": r.verdict,
        "vacuous": r.vacuous,
        "matching": list(r.matching.sigma) if r.matching is not None else None,
        "witness": witness_to_dict(r.witness),
    }


def claim_from_dict(d: dict) -> ClaimReport:
    m = d.get("matching")
    return ClaimReport(
        ClaimId(d["claim"]),
        d["verdict"] == "pass",
        Matching(tuple(m)) if m is not None else None,
        witness_from_dict(d.get("witness")),
        d.get("mode", "default"),
        bool(d.get("vacuous", False)),
    )


def quantified_to_dict(q: QuantifiedReport) -> dict:
    return {
        "matchings_examined": q.examined,
        "truncated": q.truncated,
        "claims": [
            {
                "claim": cid.value,
                "mode": mode,
                "holds_for_all": t.holds_for_all,
                "holds_for_some": t.holds_for_some,
                "passing": t.passing,
                "examined": t.examined,
                "first_failure": claim_to_dict(t.first_failure) if t.first_failure else None,
            }
            for (cid, mode), t in q.tallies.items()
        ],
    }


def build_document(
    inputs: dict[str, str],
    pair_reports: list[list[ClaimReport]] | None = None,
    quantified: QuantifiedReport | None = None,
    single_graph: dict[str, list[ClaimReport]] | None = None,
    seconds: float = 0.0,
) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "schema": SCHEMA,
        "version": VERSION,
        "tool_version": __version__,
        "inputs": dict(inputs),
    }
    if pair_reports is not None:
        doc["pair_claims"] = [
            {
                "matching": list(reps[0].matching.sigma) if reps and reps[0].matching else None,
                "reports": [claim_to_dict(r) for r in reps],
            }
            for reps in pair_reports
        ]
    if quantified is not None:
        doc["quantified"] = quantified_to_dict(quantified)
    if single_graph is not None:
        doc["single_graph"] = {
            k: [claim_to_dict(r) for r in v] for k, v in single_graph.items()
        }
    doc["timing"] = {"seconds": seconds}
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)


def parse_document(text: str) -> dict[str, Any]:
    """Parse a report; claim entries come back as ClaimReport objects.

    Fields this version does not know about are ignored.
    """
    raw = json.loads(text)
    if raw.get("schema") != SCHEMA:
        raise ValueError(f"not a {SCHEMA} document")
    if int(raw.get("version", 0)) < 1:
        raise ValueError("unsupported report version")
    out: dict[str, Any] = {
        "version": raw["version"],
        "tool_version": raw.get("tool_version"),
        "inputs": raw.get("inputs", {}),
        "pair_claims": [
            [claim_from_dict(r) for r in block.get("reports", [])]
            for block in raw.get("pair_claims", [])
        ],
        "single_graph": {
            k: [claim_from_dict(r) for r in v]
            for k, v in raw.get("single_graph", {}).items()
        },
        "quantified": raw.get("quantified"),
        "timing": raw.get("timing"),
    }
    return out


def any_failure(doc: dict) -> bool:
    """True when any claim in a built document failed."""
    for block in doc.get("pair_claims", []):
        if any(r["verdict"] == "fail" for r in block["reports"]):
            return True
    for reps in doc.get("single_graph", {}).values():
        if any(r["verdict"] == "fail" for r in reps):
            return True
    q = doc.get("quantified")
    if q and any(not c["holds_for_all"] for c in q["claims"]):
        return True
    return False
