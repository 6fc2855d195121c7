"""Command-line driver: validate, info, compose, check, morita, suite.

Human-readable output by default; ``--json`` switches every verb to a
machine-readable report stream.  Exit status is 0/1 (for ``suite``, nonzero
iff any check failed; for ``morita``, nonzero iff no certificate was found).
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import MoritakitError, ValidationFailed
from .actions import GroupoidBundle, LeftAction, RightAction
from .bibundles import Bibundle, compose_bibundles
from .corpus import CorpusSpec, generate_corpus
from .groupoid import FiniteGroupoid
from .morita import MoritaCertificate, certificate_violations, decide_morita
from .storage import load, save
from .suites import SUITE_NAMES, run_all_suites, run_suite


def _emit(payload, as_json):
    if as_json:
        print(json.dumps(payload, default=str, sort_keys=True))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def cmd_validate(args):
    try:
        load(args.file)
    except ValidationFailed as exc:
        if args.json:
            _emit({"ok": False,
                   "violations": [{"kind": v.kind, "witness": v.witness}
                                  for v in exc.report.violations]}, True)
        else:
            print(exc.report)
        return 1
    except MoritakitError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1
    _emit({"ok": True, "file": args.file}, args.json)
    return 0


def _info_payload(obj):
    if isinstance(obj, FiniteGroupoid):
        orbits = obj.orbit_space()
        return {
            "kind": "groupoid",
            "objects": len(obj.objects),
            "arrows": len(obj.arrows),
            "orbits": orbits.class_count,
            "orbit_classes": [list(map(str, orbits.members(rep)))
                              for rep in orbits.reps()],
            "isotropy_sizes": {str(x): len(obj.isotropy_group(x))
                               for x in obj.objects},
            "fibrating": obj.is_fibrating(),
        }
    if isinstance(obj, (LeftAction, RightAction)):
        return {
            "kind": "action",
            "side": obj.side,
            "carrier": len(obj.carrier),
            "orbits": obj.orbits().class_count,
            "free": obj.is_free(),
        }
    if isinstance(obj, GroupoidBundle):
        return {
            "kind": "bundle",
            "side": obj.side,
            "carrier": len(obj.carrier),
            "base": len(obj.base),
            "subductive": obj.is_subductive(),
            "pre_principal": obj.is_pre_principal(),
            "principal": obj.is_principal(),
        }
    if isinstance(obj, Bibundle):
        flags = obj.principality()
        return {
            "kind": "bibundle",
            "carrier": len(obj.carrier),
            "left_subductive": flags.left_subductive,
            "right_subductive": flags.right_subductive,
            "left_pre_principal": flags.left_pre_principal,
            "right_pre_principal": flags.right_pre_principal,
            "biprincipal": flags.biprincipal,
        }
    if isinstance(obj, MoritaCertificate):
        return {
            "kind": "certificate",
            "carrier": len(obj.bibundle.carrier),
            "verified": not certificate_violations(obj),
        }
    return {"kind": type(obj).__name__}


def cmd_info(args):
    try:
        obj = load(args.file)
    except MoritakitError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1
    _emit(_info_payload(obj), args.json)
    return 0


def cmd_compose(args):
    try:
        first = load(args.first)
        second = load(args.second)
        if not isinstance(first, Bibundle) or not isinstance(second, Bibundle):
            raise MoritakitError("compose needs two bibundle files")
        composite = compose_bibundles(first, second)
        save(composite, args.output)
    except MoritakitError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1
    payload = {"ok": True, "output": args.output}
    payload.update(_info_payload(composite))
    _emit(payload, args.json)
    return 0


def cmd_check(args):
    try:
        bibundle = load(args.file)
        if not isinstance(bibundle, Bibundle):
            raise MoritakitError("check needs a bibundle file")
    except MoritakitError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1
    _emit(_info_payload(bibundle), args.json)
    return 0


def cmd_morita(args):
    try:
        left = load(args.left)
        right = load(args.right)
        if not isinstance(left, FiniteGroupoid) or not isinstance(right, FiniteGroupoid):
            raise MoritakitError("morita needs two groupoid files")
        result = decide_morita(left, right, args.budget)
    except MoritakitError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1
    payload = {
        "found": result.certificate is not None,
        "budget": result.budget,
        "examined": result.examined,
    }
    if result.certificate is not None:
        payload["carrier_size"] = len(result.certificate.bibundle.carrier)
        if args.output:
            save(result.certificate, args.output)
            payload["certificate"] = args.output
    _emit(payload, args.json)
    return 0 if result.certificate is not None else 1


def cmd_suite(args):
    try:
        spec = CorpusSpec.parse(args.corpus) if args.corpus else CorpusSpec()
        corpus = generate_corpus(spec)
        if args.name == "all":
            reports = run_all_suites(corpus)
        else:
            reports = [run_suite(corpus, args.name)]
    except MoritakitError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1
    except ValueError as exc:
        _emit({"ok": False, "error": str(exc)}, args.json)
        return 1

    failures = 0
    for report in reports:
        for row in report.results:
            if not row.passed:
                failures += 1
            if args.json:
                print(json.dumps({
                    "suite": report.suite, "instance": row.instance,
                    "law": row.law, "passed": row.passed,
                    "witness": row.witness}, sort_keys=True))
            elif not row.passed or args.verbose:
                status = "pass" if row.passed else "FAIL"
                line = f"  [{status}] {row.instance} :: {row.law}"
                if row.witness:
                    line += f" :: {row.witness}"
                print(line)
        summary = {"suite": report.suite, "checks": len(report.results),
                   "failures": len(report.failures), "passed": report.passed,
                   "notes": report.notes}
        if args.json:
            print(json.dumps(summary, sort_keys=True))
        else:
            print(report.summary())
            for note in report.notes:
                print(f"  note: {note}")

    if args.report_dir:
        from .report import write_report_directory
        written = write_report_directory(reports, args.report_dir, corpus)
        if args.json:
            print(json.dumps({"report_files": written}))
        else:
            for path in written:
                print(f"wrote {path}")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moritakit",
        description="Morita-equivalence calculus for finite groupoids")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="validate an object file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="orbits, isotropy, fibrating, flags")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("compose", help="balanced tensor product of two bibundles")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("check", help="principality flags of a bibundle")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("morita", help="budgeted search for a Morita certificate")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_morita)

    p = sub.add_parser("suite", help="run a verification suite over a corpus")
    p.add_argument("name", choices=SUITE_NAMES + ("all",))
    p.add_argument("--corpus", default="",
                   help="e.g. 'max_objects=3,max_arrows=6,max_carrier=5,seed=0'")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", action="store_true",
                   help="print passing checks too")
    p.add_argument("--report-dir",
                   help="write results.csv and summary figures here")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
