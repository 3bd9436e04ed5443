"""Machine-readable catalogs: JSON and CSV serialization of results.

Catalog bytes are deterministic for a given computation: keys are sorted,
separators fixed, and no timestamps or timings are written.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Any

import numpy as np

from .enumeration import EnumerationReport
from .fourier import SignFunction
from .lifting import LiftedInequality
from .polytope import BellInequality, TightnessCertificate
from .quantum import QuantumValueReport


def settings_labels(parties: int) -> list[str]:
    """Column names for the row-major flattened coefficient tensor."""
    labels = []
    for flat in range(3 ** parties):
        digits = []
        rem = flat
        for _ in range(parties):
            rem, d = divmod(rem, 3)
            digits.append(d)
        labels.append("E_" + "".join(str(d) for d in reversed(digits)))
    return labels


def inequality_entry(
    ineq: BellInequality, certificate: TightnessCertificate, canonical: bool
) -> dict[str, Any]:
    if ineq.provenance is None:
        raise ValueError("catalog entries need a generating sign function")
    return {
        "parties": ineq.parties,
        "bound": ineq.bound,
        "coeffs": [int(c) for c in ineq.coeffs.ravel()],
        "sign_function": ineq.provenance.to_text(),
        "canonical": canonical,
        "tight": certificate.tight,
        "saturating_count": certificate.saturating_count,
        "rank": certificate.rank,
    }


def entry_inequality(entry: dict[str, Any]) -> BellInequality:
    """Rebuild the inequality exactly as stored (coefficients not recomputed)."""
    parties = int(entry["parties"])
    coeffs = np.array(entry["coeffs"], dtype=np.int64).reshape((3,) * parties)
    coeffs.setflags(write=False)
    return BellInequality(
        parties=parties,
        coeffs=coeffs,
        bound=int(entry["bound"]),
        provenance=SignFunction.from_text(entry["sign_function"]),
    )


def quantum_block(report: QuantumValueReport, seed: int, restarts: int) -> dict[str, Any]:
    return {
        "max": float(report.quantum_max),
        "ratio": float(report.violation_ratio),
        "directions": [
            [[float(c) for c in setting] for setting in party]
            for party in report.directions.directions
        ],
        "state_re": [float(x) for x in np.real(report.state)],
        "state_im": [float(x) for x in np.imag(report.state)],
        "seed": seed,
        "restarts": restarts,
    }


def lifted_block(lifted: LiftedInequality) -> dict[str, Any]:
    return {
        "constant": lifted.constant,
        "marginal_coeffs": [list(pair) for pair in lifted.marginal_coeffs],
        "bounds": [lifted.bounds[0], lifted.bounds[1]],
        "degenerate": lifted.degenerate,
    }


def classification_dict(report: EnumerationReport) -> dict[str, Any]:
    """Census as a plain dict; wall time is omitted so bytes stay reproducible."""
    return {
        "parties": report.parties,
        "total_admissible": report.total_admissible,
        "factorable_count": report.factorable_count,
        "canonical_classes": [
            {
                "representative": c.representative.to_text(),
                "orbit_size": c.orbit_size,
                "factorable": c.factorable,
            }
            for c in report.canonical_classes
        ],
    }


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def write_json(path: str | Path, obj: Any) -> None:
    Path(path).write_text(dump_json(obj), encoding="utf-8")


def read_json(path: str | Path) -> Any:
    return json.loads(Path(path).read_text(encoding="utf-8"))


def catalog_csv(entries: list[dict[str, Any]]) -> str:
    """Flat CSV export of an inequality catalog (one row per entry)."""
    if not entries:
        return ""
    parties = int(entries[0]["parties"])
    fixed = ["parties", "sign_function", "bound", "canonical", "tight", "saturating_count", "rank"]
    labels = settings_labels(parties)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(fixed + labels)
    for entry in entries:
        row = [entry[k] for k in fixed] + list(entry["coeffs"])
        writer.writerow(row)
    return buf.getvalue()


def write_catalog(path: str | Path, entries: list[dict[str, Any]], fmt: str = "json") -> None:
    if fmt == "json":
        write_json(path, entries)
    elif fmt == "csv":
        Path(path).write_text(catalog_csv(entries), encoding="utf-8")
    else:
        raise ValueError(f"unknown catalog format {fmt!r}")
