#!/usr/bin/env python3
"""Regenerate the renderer golden files under tests/testdata/.

Run after any intentional renderer or built-in KB change, then review the
diff before committing.
"""

from __future__ import annotations

import sys
from pathlib import Path

from archrec import builtin_kb, recommend
from archrec.engine import AnswerSet, record_answer
from archrec.render import RenderOptions, render_dot, render_html, render_markdown

TESTDATA = Path(__file__).resolve().parent.parent / "tests" / "testdata"

# Canonical scenarios: name -> answer entries.
SCENARIOS: dict[str, dict[str, str]] = {
    "empty": {},
    "rpq8_only": {"RPQ8": "yes"},
    "hospital_distributed": {"RPQ1": "hospital", "RPQ2": "yes"},
    "conflict": {"RPQ5": "nosql", "RPQ12": "no"},
}

FIXED_TIMESTAMP = "2026-01-15T12:00:00+00:00"


def main() -> int:
    kb = builtin_kb()
    opts = RenderOptions(timestamp=FIXED_TIMESTAMP)
    TESTDATA.mkdir(parents=True, exist_ok=True)
    for name, entries in SCENARIOS.items():
        answers = AnswerSet.empty()
        for qid, oid in entries.items():
            answers = record_answer(answers, kb, qid, oid)
        report = recommend(kb, answers)
        outputs = {
            "md": render_markdown(report, kb, opts),
            "html": render_html(report, kb, opts),
            "dot": render_dot(report, kb),
        }
        for ext, text in outputs.items():
            path = TESTDATA / f"golden_{name}.{ext}"
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
