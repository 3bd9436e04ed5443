"""Command-line surface for reproducible batch runs.

Commands
--------
enumerate  write the canonical inequality catalog for N observers
classify   write the symmetry census (class representatives and counts)
verify     re-check bounds and tightness certificates of a catalog
violate    append see-saw quantum reports to a catalog
reduce     write the catalog of two-setting (first-variable) inequalities
lift       append lifted (marginal + correlation) blocks to a catalog

Exit status: 0 when all checks pass, 2 when a finding is recorded (an entry
that is not tight or whose bound does not match the brute-force value), and
1 for usage or I/O errors.  Output bytes are fully determined by the flags;
re-running a command reproduces its files exactly.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import catalog as cat
from .enumeration import UnsupportedSize, classify, enumerate_admissible
from .lifting import lift, two_setting_reduction
from .polytope import (
    BoundNotAttained,
    TightnessCertificate,
    certify_tightness,
    inequality_from_sign_function,
    lhv_max,
)
from .quantum import seesaw_maximize
from .symmetry import canonicalize

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FINDINGS = 2

_PARTIES_RANGE = {
    "enumerate": (2, 3),
    "classify": (2, 3),
    "reduce": (2, 3),
    "verify": (2, 4),
    "violate": (2, 4),
    "lift": (2, 4),
}


@dataclass
class RunConfig:
    """One batch run; seed and workers fully determine the output bytes."""

    command: str
    parties: int | None = None
    input_path: Path | None = None
    output_path: Path | None = None
    seed: int = 0
    restarts: int = 32
    workers: int = 1
    format: str = "json"
    checkpoint: Path | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors are exit 1, findings own exit 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> _Parser:
    parser = _Parser(prog="bellfacets", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    default_workers = int(os.environ.get("BELLFACETS_WORKERS", "1"))
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("enumerate", "classify", "verify", "violate", "reduce", "lift"):
        p = sub.add_parser(name)
        p.add_argument("--parties", type=int, default=None)
        p.add_argument("--in", dest="input_path", type=Path, default=None)
        p.add_argument("--out", dest="output_path", type=Path, required=True)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--restarts", type=int, default=32)
        p.add_argument("--workers", type=int, default=default_workers)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--checkpoint", type=Path, default=None)
    return parser


def _catalog_entries(parties: int, checkpoint: Path | None) -> tuple[list[dict], bool]:
    """Canonical catalog entries plus a findings flag."""
    if checkpoint is not None:
        # Drive the checkpointed stream so the file is produced/resumed, then
        # classify from the (memoized) same stream.
        for _ in enumerate_admissible(parties, checkpoint=checkpoint):
            pass
    report = classify(parties)
    entries = []
    findings = False
    for cls in report.canonical_classes:
        ineq = inequality_from_sign_function(cls.representative)
        cert = certify_tightness(ineq)
        bounds = lhv_max(ineq)
        entries.append(cat.inequality_entry(ineq, cert, canonical=True))
        if not cert.tight or bounds.maximum != ineq.bound or bounds.minimum != -ineq.bound:
            findings = True
    return entries, findings


def _cmd_enumerate(config: RunConfig) -> int:
    entries, findings = _catalog_entries(config.parties, config.checkpoint)
    cat.write_catalog(config.output_path, entries, config.format)
    return EXIT_FINDINGS if findings else EXIT_OK


def _cmd_classify(config: RunConfig) -> int:
    report = classify(config.parties)
    cat.write_json(config.output_path, cat.classification_dict(report))
    return EXIT_OK


def _cmd_verify(config: RunConfig) -> int:
    entries = cat.read_json(config.input_path)
    results = []
    findings = False
    for entry in entries:
        ineq = cat.entry_inequality(entry)
        regenerated = inequality_from_sign_function(ineq.provenance)
        coeffs_ok = bool((regenerated.coeffs == ineq.coeffs).all())
        bounds = lhv_max(ineq)
        bound_ok = bounds.maximum == entry["bound"] and bounds.minimum == -entry["bound"]
        try:
            cert = certify_tightness(ineq)
        except BoundNotAttained:
            cert = TightnessCertificate(tight=False, saturating_count=0, rank=0)
        cert_ok = (
            cert.tight == entry["tight"]
            and cert.saturating_count == entry["saturating_count"]
            and cert.rank == entry["rank"]
        )
        ok = coeffs_ok and bound_ok and cert.tight and cert_ok
        findings = findings or not ok
        results.append(
            {
                "sign_function": entry["sign_function"],
                "coeffs_ok": coeffs_ok,
                "lhv_max": bounds.maximum,
                "lhv_min": bounds.minimum,
                "bound_ok": bound_ok,
                "tight": cert.tight,
                "saturating_count": cert.saturating_count,
                "rank": cert.rank,
                "certificate_ok": cert_ok,
                "pass": ok,
            }
        )
    if config.format == "csv":
        import csv as _csv
        import io as _io

        buf = _io.StringIO()
        writer = _csv.writer(buf, lineterminator="\n")
        keys = list(results[0].keys()) if results else []
        writer.writerow(keys)
        for row in results:
            writer.writerow([row[k] for k in keys])
        config.output_path.write_text(buf.getvalue(), encoding="utf-8")
    else:
        cat.write_json(config.output_path, results)
    return EXIT_FINDINGS if findings else EXIT_OK


def _cmd_violate(config: RunConfig) -> int:
    entries = cat.read_json(config.input_path)
    for entry in entries:
        ineq = cat.entry_inequality(entry)
        report = seesaw_maximize(ineq, restarts=config.restarts, seed=config.seed)
        entry["quantum"] = cat.quantum_block(report, config.seed, config.restarts)
    cat.write_json(config.output_path, entries)
    return EXIT_OK


def _cmd_reduce(config: RunConfig) -> int:
    entries = []
    findings = False
    for ineq in two_setting_reduction(config.parties):
        cert = certify_tightness(ineq)
        bounds = lhv_max(ineq)
        canonical = canonicalize(ineq.provenance) == ineq.provenance
        entries.append(cat.inequality_entry(ineq, cert, canonical=canonical))
        if not cert.tight or bounds.maximum != ineq.bound:
            findings = True
    cat.write_catalog(config.output_path, entries, config.format)
    return EXIT_FINDINGS if findings else EXIT_OK


def _cmd_lift(config: RunConfig) -> int:
    entries = cat.read_json(config.input_path)
    for entry in entries:
        ineq = cat.entry_inequality(entry)
        entry["lifted"] = cat.lifted_block(lift(ineq))
    cat.write_json(config.output_path, entries)
    return EXIT_OK


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
    "violate": _cmd_violate,
    "reduce": _cmd_reduce,
    "lift": _cmd_lift,
}

_NEEDS_PARTIES = ("enumerate", "classify", "reduce")
_NEEDS_INPUT = ("verify", "violate", "lift")
_CSV_CAPABLE = ("enumerate", "reduce", "verify")


def run(config: RunConfig) -> int:
    """Execute one command; returns the process exit status."""
    if config.command in _NEEDS_PARTIES:
        low, high = _PARTIES_RANGE[config.command]
        if config.parties is None or not low <= config.parties <= high:
            print(
                f"bellfacets {config.command}: --parties must be in [{low}, {high}]",
                file=sys.stderr,
            )
            return EXIT_ERROR
    if config.command in _NEEDS_INPUT and config.input_path is None:
        print(f"bellfacets {config.command}: --in is required", file=sys.stderr)
        return EXIT_ERROR
    if config.format == "csv" and config.command not in _CSV_CAPABLE:
        print(f"bellfacets {config.command}: csv format is not supported", file=sys.stderr)
        return EXIT_ERROR
    if config.workers < 1:
        print("bellfacets: --workers must be at least 1", file=sys.stderr)
        return EXIT_ERROR
    try:
        return _COMMANDS[config.command](config)
    except (OSError, ValueError, UnsupportedSize, KeyError) as exc:
        print(f"bellfacets {config.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(
        command=args.command,
        parties=args.parties,
        input_path=args.input_path,
        output_path=args.output_path,
        seed=args.seed,
        restarts=args.restarts,
        workers=args.workers,
        format=args.format,
        checkpoint=args.checkpoint,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
