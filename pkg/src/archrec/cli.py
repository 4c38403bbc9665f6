"""Command-line entry point: wizard, eval, lint, serve.

Exit codes are a stable contract: 0 success, 1 lint errors, 2 KB load
failure, 3 answer validation failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import engine, lint as lint_mod, render
from .builtin import builtin_kb
from .model import KBError, KnowledgeBase, load_kb

EXIT_OK = 0
EXIT_LINT_ERRORS = 1
EXIT_LOAD_FAILURE = 2
EXIT_VALIDATION_FAILURE = 3


def _load_kb_or_fail(path: str | None, validate: bool = True) -> KnowledgeBase:
    if path is None:
        return builtin_kb()
    try:
        with open(path, "rb") as fh:
            return load_kb(fh, validate=validate)
    except OSError as exc:
        raise KBError(f"cannot read knowledge base {path!r}: {exc.strerror}") from exc


def _render(report, kb, fmt: str, timestamp: str) -> str:
    opts = render.RenderOptions(timestamp=timestamp)
    if fmt == "md":
        return render.render_markdown(report, kb, opts)
    if fmt == "html":
        return render.render_html(report, kb, opts)
    return render.render_dot(report, kb)


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _default_timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _match_option(question, token: str):
    """Match a wizard/eval token against an option: 1-based number, id, or label."""
    if token.isdigit():
        n = int(token)
        if 1 <= n <= len(question.options):
            return question.options[n - 1]
        return None
    for option in question.options:
        if token == option.id or token == option.label:
            return option
    return None


def cmd_wizard(args: argparse.Namespace) -> int:
    try:
        kb = _load_kb_or_fail(args.kb)
    except KBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_FAILURE

    answers = engine.AnswerSet.empty()
    total = len(kb.questions)
    index = 0
    print(
        "Answer each question by number; type 'back' to revisit the previous one.",
        file=sys.stderr,
    )
    # Prompts go to stderr: stdout carries only the rendered report, so
    # wizard and eval runs with equal answers emit identical bytes.
    while index < total:
        question = kb.questions[index]
        print(f"\n[{index + 1}/{total}] {question.id}. {question.text}",
              file=sys.stderr)
        for n, option in enumerate(question.options, start=1):
            print(f"  {n}) {option.label}", file=sys.stderr)
        try:
            sys.stderr.write("> ")
            sys.stderr.flush()
            token = input().strip()
        except EOFError:
            break  # abandoned wizard: evaluate the partial answer set
        if token == "back":
            index = max(0, index - 1)
            continue
        option = _match_option(question, token)
        if option is None:
            print(f"  unrecognized choice {token!r}; try again", file=sys.stderr)
            continue
        answers = engine.record_answer(answers, kb, question.id, option.id)
        index += 1

    report = engine.recommend(kb, answers)
    text = _render(report, kb, args.format, args.timestamp or _default_timestamp())
    _emit(text, args.out)
    if args.out:
        print(f"\nReport written to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    try:
        kb = _load_kb_or_fail(args.kb)
    except KBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_FAILURE

    try:
        doc = json.loads(Path(args.answers).read_text(encoding="utf-8"))
    except OSError as exc:
        print(f"error: cannot read answers file {args.answers!r}: {exc.strerror}",
              file=sys.stderr)
        return EXIT_VALIDATION_FAILURE
    except json.JSONDecodeError as exc:
        print(f"error: answers file is not valid JSON: {exc}", file=sys.stderr)
        return EXIT_VALIDATION_FAILURE

    entries = doc.get("answers", doc) if isinstance(doc, dict) else None
    if not isinstance(entries, dict):
        print("error: answers file must be a JSON object", file=sys.stderr)
        return EXIT_VALIDATION_FAILURE

    answers = engine.AnswerSet.empty()
    invalid: list[str] = []
    for qid, token in entries.items():
        question = kb.questions_by_id.get(qid)
        option = _match_option(question, str(token)) if question else None
        if question is None or option is None:
            invalid.append(f"{qid}={token}")
            continue
        answers = engine.record_answer(answers, kb, qid, option.id)
    if invalid:
        print("error: invalid answers: " + ", ".join(invalid), file=sys.stderr)
        return EXIT_VALIDATION_FAILURE

    report = engine.recommend(kb, answers)
    text = _render(report, kb, args.format, args.timestamp or _default_timestamp())
    _emit(text, args.out)
    return EXIT_OK


def cmd_lint(args: argparse.Namespace) -> int:
    try:
        # Lenient load: structural defects become findings, not load failures.
        kb = _load_kb_or_fail(args.kb, validate=False)
    except KBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_FAILURE

    findings = lint_mod.lint(kb)
    stats = None
    # Enumeration presumes a structurally sound KB; skip it when static
    # errors are already present.
    if args.enumerate and not lint_mod.has_errors(findings):
        try:
            stats = lint_mod.enumerate_space(kb)
        except lint_mod.SpaceTooLarge as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_LOAD_FAILURE
        findings = lint_mod.lint(kb, stats)
    if findings:
        width = max(len(f.code) for f in findings)
        for f in findings:
            print(f"{f.severity.value.upper():8} {f.code:{width}} "
                  f"{f.subject}: {f.message}")
    else:
        print("No findings.")

    if stats is not None:
        print(f"\nTotal assignments: {stats.total_assignments:,}")
        print("Reachability (resolved / suppressed counts):")
        for rec in kb.recommendations:
            print(f"  {rec.id:18} {stats.reach_count[rec.id]:>10,} "
                  f"/ {stats.suppression_count[rec.id]:,}")
        for group in kb.exclusion_groups:
            print(f"Group {group.id}: {stats.conflict_count[group.id]:,} conflicts, "
                  f"{stats.tie_count[group.id]:,} ties")

    return EXIT_LINT_ERRORS if lint_mod.has_errors(findings) else EXIT_OK


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    try:
        kb = _load_kb_or_fail(args.kb)
    except KBError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LOAD_FAILURE

    host, _, port = args.listen.rpartition(":")
    app = create_app(kb=kb, store_path=args.store, ui_dir=args.ui)
    try:
        uvicorn.run(app, host=host or "127.0.0.1", port=int(port), log_level="info")
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else 1
        if code != 0:
            print(f"error: server failed to start on {args.listen}", file=sys.stderr)
        return code
    except OSError as exc:
        print(f"error: cannot listen on {args.listen}: {exc}", file=sys.stderr)
        return 1
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="archrec",
        description="Knowledge-based recommender for architectural design decisions",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_out=True):
        p.add_argument("--kb", metavar="PATH",
                       help="knowledge base JSON file (default: built-in)")
        if with_out:
            p.add_argument("--out", metavar="PATH",
                           help="write the report here instead of stdout")
            p.add_argument("--format", choices=("md", "html", "dot"), default="md")
            p.add_argument("--timestamp", metavar="ISO8601",
                           help="report timestamp (default: current UTC time)")

    p_wizard = sub.add_parser("wizard", help="interactive questionnaire")
    add_common(p_wizard)
    p_wizard.set_defaults(func=cmd_wizard)

    p_eval = sub.add_parser("eval", help="evaluate a JSON answers file")
    p_eval.add_argument("answers", metavar="ANSWERS_FILE")
    add_common(p_eval)
    p_eval.set_defaults(func=cmd_eval)

    p_lint = sub.add_parser("lint", help="validate a knowledge base")
    add_common(p_lint, with_out=False)
    p_lint.add_argument("--enumerate", action="store_true",
                        help="also walk the full assignment space")
    p_lint.set_defaults(func=cmd_lint)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    add_common(p_serve, with_out=False)
    p_serve.add_argument("--listen", default="127.0.0.1:8080", metavar="HOST:PORT")
    p_serve.add_argument("--store", metavar="PATH",
                         help="session store file (default: in-memory)")
    p_serve.add_argument("--ui", metavar="DIR",
                         help="static web UI directory to host at /")
    p_serve.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
