"""Regenerate the published reference tables and diff them against the embedded data."""
from __future__ import annotations

import json
from importlib import resources

from .core import Weights, chi_cyclo, chi_factored, chi_poly
from .recovery import recover


def load() -> dict:
    with resources.files("coxeterkit").joinpath("data/reference_tables.json").open() as fh:
        return json.load(fh)


def _keyed(table) -> dict[str, int]:
    return {str(k): int(v) for k, v in table.items()}


def regenerate(entry: dict) -> dict:
    """Recompute every field present in ``entry`` (other than ``weights``)."""
    w = Weights(entry["weights"])
    out: dict = {"weights": entry["weights"]}
    if "factored" in entry:
        out["factored"] = _keyed(chi_factored(w).table)
    if "poly" in entry:
        out["poly"] = list(chi_poly(w).coeffs)
    if "degree" in entry:
        out["degree"] = chi_poly(w).degree
    if "cyclo" in entry:
        cyclo = _keyed(chi_cyclo(w).table)
        # published rows may list zero multiplicities explicitly
        for k, v in entry["cyclo"].items():
            if v == 0:
                cyclo.setdefault(k, 0)
        out["cyclo"] = cyclo
    if {"modulus", "signed_k", "counts"} & entry.keys():
        r = recover(chi_poly(w))
        out["modulus"] = r.n
        out["signed_k"] = _keyed(r.signed_k)
        out["counts"] = _keyed(r.counts)
        out["s_parity"] = r.s_parity
        out["two_parity"] = r.two_parity
    return {k: out[k] for k in entry}


def _normalise(entry: dict) -> dict:
    return {k: (_keyed(v) if isinstance(v, dict) else v) for k, v in entry.items()}


def diff_all(data: dict | None = None) -> list[dict]:
    """One record per table entry: ``{"section", "weights", "ok", "mismatches"}``."""
    data = load() if data is None else data
    report = []
    for section, body in data.items():
        if section.startswith("_"):
            continue
        for entry in body["entries"]:
            expected = _normalise(entry)
            got = regenerate(entry)
            bad = {k: {"expected": expected[k], "got": got[k]}
                   for k in expected if expected[k] != got[k]}
            report.append({"section": section, "weights": entry["weights"],
                           "ok": not bad, "mismatches": bad})
    return report
