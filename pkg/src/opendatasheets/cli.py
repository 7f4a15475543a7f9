"""Command-line entry point.

Subcommands: init, infer, validate, evaluate, convert, serve. Human
output goes to stdout, diagnostics to stderr; --json switches stdout to
the canonical machine format so the tool composes in pipelines.

Exit codes: 0 success/accept, 1 operational error, 2 validation errors
present, 3 policy verdict review, 4 policy verdict reject.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import List, Optional

from .canonical import serialize_datasheet
from .errors import DatasheetError
from .inference import InferenceConfig, infer_resource, slug_from_filename
from .jsonld import serialize_jsonld, to_jsonld
from .model import Datasheet, merge_inferred, new_template
from .parsing import parse_datasheet
from .policy import Policy, evaluate_policy, parse_policy, serialize_verdict
from .validation import SECTIONS, serialize_report, validate_datasheet

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_REVIEW = 3
EXIT_REJECT = 4

VERDICT_EXIT_CODES = {"accept": EXIT_OK, "review": EXIT_REVIEW, "reject": EXIT_REJECT}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; the CLI contract wants 1
    def error(self, message):
        raise _UsageError(f"{message}\n{self.format_usage()}")


def _build_parser() -> _Parser:
    parser = _Parser(prog="ods", description="Datasheet toolkit for open datasets")
    sub = parser.add_subparsers(dest="command", required=True)

    p_init = sub.add_parser("init", help="write a draft datasheet template")
    p_init.add_argument("name", help="dataset name (lowercase slug)")
    p_init.add_argument("--title", help="dataset title (defaults to the name)")
    p_init.add_argument("-o", "--output", default="datasheet.json")

    p_infer = sub.add_parser("infer", help="profile data files into a datasheet")
    p_infer.add_argument("files", nargs="+", help="data files to profile")
    p_infer.add_argument("-o", "--output", help="datasheet to write")
    p_infer.add_argument("--merge", help="existing datasheet to merge resources into")

    p_validate = sub.add_parser("validate", help="check a datasheet and score completeness")
    p_validate.add_argument("datasheet")
    p_validate.add_argument("--json", action="store_true", help="print the canonical report")

    p_evaluate = sub.add_parser("evaluate", help="screen a datasheet against a policy")
    p_evaluate.add_argument("datasheet")
    p_evaluate.add_argument("--policy", help="policy file (falls back to $ODS_POLICY)")
    p_evaluate.add_argument("--json", action="store_true", help="print the canonical verdict")

    p_convert = sub.add_parser("convert", help="convert a datasheet to another format")
    p_convert.add_argument("datasheet")
    p_convert.add_argument("--to", required=True, choices=["jsonld"], dest="target")
    p_convert.add_argument("-o", "--output", help="output file (defaults to stdout)")

    p_serve = sub.add_parser("serve", help="run the local wizard/API server")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--policy", help="policy used by /api/v1/evaluate")
    p_serve.add_argument("--assets", help="directory of wizard static assets")

    return parser


def _read_datasheet(path: str) -> Datasheet:
    return parse_datasheet(Path(path).read_text(encoding="utf-8"))


def _load_policy(path_arg: Optional[str]) -> Policy:
    path = path_arg or os.environ.get("ODS_POLICY")
    if not path:
        raise DatasheetError("no policy given: pass --policy or set ODS_POLICY")
    return parse_policy(Path(path).read_text(encoding="utf-8"))


def _write_datasheet(d: Datasheet, path: str) -> None:
    Path(path).write_text(serialize_datasheet(d), encoding="utf-8", newline="\n")


def _cmd_init(args) -> int:
    d = new_template(args.name, args.title if args.title is not None else args.name)
    _write_datasheet(d, args.output)
    print(f"wrote draft datasheet {args.output}")
    return EXIT_OK


def _cmd_infer(args) -> int:
    cfg = InferenceConfig()
    warnings: List[str] = []
    resources = []
    for file_path in args.files:
        data = Path(file_path).read_bytes()
        resources.append(infer_resource(file_path, data, cfg, warnings))
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.merge:
        base = _read_datasheet(args.merge)
        output = args.output or args.merge
    else:
        output = args.output or "datasheet.json"
        stem = Path(output).stem
        base = new_template(slug_from_filename(stem), stem)
    merged = merge_inferred(base, resources)
    _write_datasheet(merged, output)
    print(f"wrote {output} with {len(resources)} inferred resource(s)")
    return EXIT_OK


def _cmd_validate(args) -> int:
    report = validate_datasheet(_read_datasheet(args.datasheet))
    if args.json:
        sys.stdout.write(serialize_report(report))
    else:
        print(f"valid: {'yes' if report.valid else 'no'}")
        print(f"completeness: {report.overall:.0%}")
        for section in SECTIONS:
            print(f"  {section}: {report.completeness[section]:.0%}")
        for issue in report.issues:
            print(f"{issue.severity}: {issue.code} at {issue.pointer or '<root>'}: {issue.message}")
    return EXIT_OK if report.valid else EXIT_INVALID


def _cmd_evaluate(args) -> int:
    datasheet = _read_datasheet(args.datasheet)
    policy = _load_policy(args.policy)
    verdict = evaluate_policy(datasheet, policy)
    if args.json:
        sys.stdout.write(serialize_verdict(verdict))
    else:
        print(f"decision: {verdict.decision}")
        for r in verdict.rule_results:
            status = "pass" if r.passed else f"fail ({r.action})"
            print(f"  {r.id}: {status}" + ("" if r.passed else f" - {r.message}"))
    return VERDICT_EXIT_CODES[verdict.decision]


def _cmd_convert(args) -> int:
    datasheet = _read_datasheet(args.datasheet)
    report = validate_datasheet(datasheet)
    if not report.valid:
        for issue in report.issues:
            if issue.severity == "error":
                print(f"error: {issue.code} at {issue.pointer}: {issue.message}", file=sys.stderr)
        print("datasheet is invalid; fix the errors above before converting", file=sys.stderr)
        return EXIT_INVALID
    text = serialize_jsonld(to_jsonld(datasheet))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8", newline="\n")
        print(f"wrote {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import run_server

    policy = _load_policy(args.policy) if (args.policy or os.environ.get("ODS_POLICY")) else None
    run_server(
        port=args.port,
        policy=policy,
        assets_dir=Path(args.assets) if args.assets else None,
    )
    return EXIT_OK


_COMMANDS = {
    "init": _cmd_init,
    "infer": _cmd_infer,
    "validate": _cmd_validate,
    "evaluate": _cmd_evaluate,
    "convert": _cmd_convert,
    "serve": _cmd_serve,
}


def run_cli(argv: Optional[List[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as e:
        print(str(e), file=sys.stderr)
        return EXIT_ERROR
    try:
        return _COMMANDS[args.command](args)
    except (DatasheetError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main() -> None:
    sys.exit(run_cli())
