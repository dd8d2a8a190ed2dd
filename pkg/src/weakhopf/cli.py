"""Command-line front end: ``build``, ``verify`` and ``coinvariants``.

Exit codes: 0 when the requested check passes, 1 on a verification failure,
2 on an input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .axioms import check_axioms, check_derived
from .errors import CertificateFailure, WeakHopfError
from .hopf_modules import fundamental_certificate, regular_module
from .verdicts import Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _input_error(exc: BaseException, out_path: str | None = None) -> int:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    if out_path is not None:
        Path(out_path).write_text(io.dumps(io.error_to_json(exc)))
    return EXIT_INPUT


def cmd_build(args) -> int:
    try:
        H = io.build(io.load(args.input))
    except WeakHopfError as exc:
        return _input_error(exc, args.output)
    Path(args.output).write_text(io.dumps(io.whq_to_json(H)))
    return EXIT_OK


def _certificate_report(cert_checks, coh_dim=None, rank_nabla=None) -> Report:
    dims = {}
    if coh_dim is not None:
        dims["coh_dim"] = coh_dim
    if rank_nabla is not None:
        dims["rank_nabla"] = rank_nabla
    return Report(list(cert_checks), {}, dims)


def _certificate(module) -> Report:
    try:
        cert = fundamental_certificate(module)
    except CertificateFailure as exc:
        rep = _certificate_report(exc.checks)
        rep.flags["certificate"] = False
        return rep
    rep = _certificate_report(cert.checks, cert.coh_dim, cert.rank_nabla)
    rep.flags["certificate"] = True
    return rep


def verification_report(H, level: str, jobs: int = 1) -> Report:
    """Axioms, then derived identities, then the regular-module certificate."""
    report = check_axioms(H, jobs)
    if level == "axioms":
        return report
    derived = check_derived(H, report, jobs)
    report = Report(report.verdicts + derived.verdicts, dict(derived.flags),
                    dict(derived.dimensions))
    if level == "full":
        cert = _certificate(regular_module(H))
        report.extend(cert.verdicts)
        report.flags.update(cert.flags)
        report.dimensions.update(cert.dimensions)
    return report


def _print_text(report: Report, out) -> None:
    for v in report.verdicts:
        status = "PASS" if v.passed else "FAIL"
        line = f"{status} {v.id}"
        if v.conditional:
            line += " (conditional)"
        if not v.passed and v.witness is not None:
            line += f" witness={v.witness}"
        print(f"{line}  [{v.anchor}]", file=out)
    for k in sorted(report.flags):
        print(f"flag {k}={str(report.flags[k]).lower()}", file=out)
    for k in sorted(report.dimensions):
        print(f"dim {k}={report.dimensions[k]}", file=out)
    first = report.first_failure()
    print("result: " + ("pass" if first is None else f"fail (first failure: {first.id})"),
          file=out)


def cmd_verify(args) -> int:
    try:
        H = io.build(io.load(args.input))
    except WeakHopfError as exc:
        return _input_error(exc)
    report = verification_report(H, args.level, args.jobs)
    if args.json:
        sys.stdout.write(io.dumps(io.report_to_json(report, H.field, level=args.level)))
    else:
        _print_text(report, sys.stdout)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_coinvariants(args) -> int:
    path = Path(args.input)
    try:
        doc = io.load(path)
        if doc["type"] == "hopf_module":
            module = io.module_from_json(doc, path.parent)
        else:
            module = regular_module(io.build(doc))
    except WeakHopfError as exc:
        return _input_error(exc)
    report = _certificate(module)
    if args.json:
        sys.stdout.write(io.dumps(io.report_to_json(report, module.over.field)))
    else:
        _print_text(report, sys.stdout)
    return EXIT_OK if report.passed else EXIT_FAIL


def parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="weakhopf", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="construct an algebra and write it as whq_raw")
    b.add_argument("input")
    b.add_argument("output")
    b.set_defaults(run=cmd_build)
    v = sub.add_parser("verify", help="check axioms and derived identities")
    v.add_argument("input")
    v.add_argument("--level", choices=("axioms", "derived", "full"), default="full")
    v.add_argument("--json", action="store_true")
    v.add_argument("--jobs", type=int, default=1,
                   help="threads for identity evaluation (output is unchanged)")
    v.set_defaults(run=cmd_verify)
    c = sub.add_parser("coinvariants", help="coinvariants and fundamental certificate")
    c.add_argument("input")
    c.add_argument("--json", action="store_true")
    c.set_defaults(run=cmd_coinvariants)
    return ap


def main(argv=None) -> int:
    args = parser().parse_args(argv)
    return args.run(args)


if __name__ == "__main__":
    sys.exit(main())
