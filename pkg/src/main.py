#!/usr/bin/env python3
"""
Clifford Verifier - exact Clifford algebra representations and Lie groups

Subcommands:
1. repr      build beta for Cl(p,q) and print its generators
2. verify    run a verification suite over every signature up to n_max
3. classify  name the matrix group a Lie group of Cl(p,q) is isomorphic to
4. vee       tabulate the signed-blade group and its group memberships
5. sample    print exact and exponential samples of a group

Exit codes: 0 all claims pass, 1 some claim failed, 2 bad input.
"""

import argparse
import json
import logging
import os
import sys
from datetime import datetime
from typing import Optional

# Add project root to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import config
from src.classify import classify, form_spec, verify_classification
from src.database import ReportStore
from src.errors import CliffordError
from src.groups import ALL_GROUPS, GroupId, sample_exact, sample_exponential, vee_group, vee_membership
from src.multivector import Signature
from src.reports import Status, summarize
from src.representation import RepClass, additional_signature, get_representation
from src.suites import DEFAULT_N_MAX, SCOPES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def setup_logging(level: str = None):
    """One stderr handler; stdout stays clean for results."""
    level = (level or config.LOG_LEVEL).upper()
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
    root.addHandler(handler)
    root.setLevel(getattr(logging, level, logging.INFO))


class Output:
    """Text or line-delimited JSON, to stdout or a file."""

    def __init__(self, fmt: str = "text", path: Optional[str] = None):
        self.json = fmt == "json"
        self.stream = open(path, "w") if path else sys.stdout

    def text(self, line: str = ""):
        if not self.json:
            print(line, file=self.stream)

    def record(self, obj: dict):
        if self.json:
            print(json.dumps(obj, default=str), file=self.stream)

    def banner(self, title: str):
        self.text("=" * 60)
        self.text(title)
        self.text("=" * 60)

    def close(self):
        if self.stream is not sys.stdout:
            self.stream.close()


def _signature(args) -> Signature:
    return Signature(args.p, args.q).check_max()


def _group(text: str) -> GroupId:
    return GroupId.parse(text)


def cmd_repr(args, out: Output) -> int:
    sig = _signature(args)
    rep = get_representation(sig)
    kl = additional_signature(rep) if rep.rep_class == RepClass.COMPLEX else None
    obj = rep.to_dict()
    obj["additional_signature"] = kl.to_dict() if kl else None
    out.record(obj)

    out.banner(f"{sig.label()} -> {rep.describe()}")
    out.text(f"class: {rep.rep_class.value}   size: {rep.size}   ring: {rep.ring.value}")
    if kl:
        out.text(f"additional signature: (k,l) = ({kl.k},{kl.l})")
    for step in rep.trace:
        out.text("  " + json.dumps(step, default=str))
    for a, g in enumerate(rep.generators, 1):
        out.text(f"\nbeta(e{a}) =")
        out.text(str(g))
    return EXIT_OK


def _progress(out: Output):
    def report(i, total, scope, sig):
        out.text(f"[{i}/{total}] {scope} {sig.label()}")
    return report


def cmd_verify(args, out: Output) -> int:
    n_max = args.n_max
    seed = config.DEFAULT_SEED if args.seed is None else args.seed
    store = None if args.no_store else ReportStore(args.db)
    run_id = store.start_run(args.scope, n_max, seed) if store else None

    out.banner(f"verify {args.scope} - {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} (seed {seed})")
    try:
        reports = run_suite(args.scope, n_max, seed, args.samples, args.jobs, _progress(out))
        failed = [r for r in reports if not r.passed]
        for report in reports:
            out.record(report.to_dict())
            if store:
                store.record(report, run_id)
        for report in failed:
            out.text(f"FAIL {report.label}: {json.dumps(report.details, default=str)}")
        for report in reports:
            if report.status == Status.WITNESS:
                out.text(f"witness {report.label}")

        summary = summarize(reports)
        summary["seed"] = seed
        if store:
            store.finish_run(run_id, reports)
            store.cleanup_old_runs(days=config.REPORT_RETENTION_DAYS)
            summary["store"] = store.get_stats()
        out.record({"summary": summary})
        out.text("\n" + "=" * 60)
        out.text(f"{summary['total']} reports: {summary['counts']}  overall {summary['overall']}")
        if store:
            out.text(f"Stats: {summary['store']}")
        out.text("=" * 60)
        return EXIT_FAILED if failed else EXIT_OK
    finally:
        if store:
            store.close()


def cmd_classify(args, out: Output) -> int:
    sig = _signature(args)
    g = _group(args.group)
    name = classify(g, sig)
    spec = form_spec(g, sig)
    obj = {"group": g.value, "signature": [sig.p, sig.q], "name": name.to_dict(), "form": spec.to_dict()}

    out.banner(f"{g.label} over {sig.label()}")
    relation = "~=" if name.relation == "isomorphic" else name.relation
    aliases = f"  (also {', '.join(name.aliases)})" if name.aliases else ""
    out.text(f"{relation} {name}{aliases}")
    out.text(f"Lie algebra: {name.lie_algebra()}, real dimension {name.real_dimension()}")
    out.text(f"form: {spec.describe()}")
    out.text(f"rule: {spec.rule}")

    code = EXIT_OK
    if args.verify:
        report = verify_classification(g, sig, args.samples, args.seed, args.tol)
        obj["verification"] = report.to_dict()
        out.text(f"verification: {report.status.value}")
        code = EXIT_OK if report.passed else EXIT_FAILED
    out.record(obj)
    return code


def cmd_vee(args, out: Output) -> int:
    sig = _signature(args)
    report = vee_group(sig, args.seed)
    membership = vee_membership(sig)
    out.record({"report": report.to_dict(), "membership": membership})

    out.banner(f"vee group of {sig.label()}: order {report.details.get('order')}")
    for label, elements in membership.items():
        out.text(f"{label}: {len(elements)} elements")
        if sig.n <= 4:
            out.text("  " + " ".join(elements))
    out.text(f"checks: {report.status.value}")
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_sample(args, out: Output) -> int:
    sig = _signature(args)
    groups = ALL_GROUPS if args.group == "all" else (_group(args.group),)
    out.banner(f"samples over {sig.label()} (seed {config.DEFAULT_SEED if args.seed is None else args.seed})")
    for g in groups:
        samples = sample_exact(g, sig, args.samples, args.seed)
        samples += sample_exponential(g, sig, args.samples, args.seed, args.tol)
        for sample in samples:
            out.record({"signature": [sig.p, sig.q], **sample.to_dict()})
            out.text(f"{g.label} [{sample.provenance.value} {sample.index}] {sample.value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--output", help="write results to this file instead of stdout")
    common.add_argument("--log-level", default=None)

    sig = argparse.ArgumentParser(add_help=False)
    sig.add_argument("--p", type=int, required=True)
    sig.add_argument("--q", type=int, required=True)

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--samples", type=int, default=None)
    sampling.add_argument("--seed", type=int, default=None)
    sampling.add_argument("--tol", type=float, default=None)

    parser = argparse.ArgumentParser(prog="clifford", description="Exact Clifford algebra verifier")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("repr", parents=[common, sig], help="build a representation")
    p.set_defaults(func=cmd_repr)

    p = sub.add_parser("verify", parents=[common, sampling], help="run a verification suite")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("--n-max", type=int, default=None,
                   help=f"largest n (defaults: {', '.join(f'{k} {v}' for k, v in DEFAULT_N_MAX.items())})")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--no-store", action="store_true", help="do not record reports in the database")
    p.add_argument("--db", default=None, help="local SQLite path for the report store")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", parents=[common, sig, sampling], help="classify a group")
    p.add_argument("--group", required=True)
    p.add_argument("--verify", action="store_true", help="also check the invariant form on samples")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("vee", parents=[common, sig, sampling], help="signed-blade group")
    p.set_defaults(func=cmd_vee)

    p = sub.add_parser("sample", parents=[common, sig, sampling], help="print group samples")
    p.add_argument("--group", default="all")
    p.set_defaults(func=cmd_sample)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    setup_logging(args.log_level)
    if getattr(args, "tol", None) is not None and args.tol <= 0:
        logger.error("--tol must be positive")
        return EXIT_USAGE

    out = Output(args.format, args.output)
    try:
        return args.func(args, out)
    except CliffordError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_USAGE
    finally:
        out.close()


if __name__ == "__main__":
    sys.exit(main())
