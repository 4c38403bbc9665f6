"""Acceptance gate: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines as they complete.
"""

from __future__ import annotations

import random
import time
from pathlib import Path

import numpy as np
from fastapi.testclient import TestClient

from archrec.engine import AnswerSet, record_answer, recommend
from archrec.lint import Severity, enumerate_space, lint
from archrec.model import (
    AnswerOption,
    Category,
    ExclusionGroup,
    KnowledgeBase,
    Question,
    Recommendation,
)
from archrec.render import RenderOptions, render_dot, render_html, render_markdown
from archrec.service import create_app

from conftest import make_answers, random_answer_subset, random_complete_assignment
from table2_oracle import CONTRIBUTION_ROWS

TESTDATA = Path(__file__).parent / "testdata"


def _ok(n: int, label: str) -> None:
    print(f"ACCEPTANCE {n} ({label}): PASS")


def test_criterion_1_rule_table_oracle(kb):
    """Every non-empty rule row, as a singleton answer set, yields exactly
    the transcribed recommendations with the right categories."""
    start = time.monotonic()
    for (qid, label), expected in CONTRIBUTION_ROWS.items():
        option = next(o for o in kb.question(qid).options if o.label == label)
        report = recommend(kb, make_answers(kb, {qid: option.id}))
        actual = {
            rr.recommendation.name: rr.recommendation.category.value
            for rr in report.resolved
        }
        assert actual == expected, (qid, label)
    elapsed = time.monotonic() - start
    assert elapsed < 1.0, f"oracle suite took {elapsed:.2f}s"
    _ok(1, "rule-table oracle, 24 rows")


def _brute_force_resolve(kb, assignment):
    """Independent resolver: dict arithmetic only, no engine imports used."""
    cand: dict[str, set[str]] = {}
    for q in kb.questions:
        option = next(o for o in q.options if o.id == assignment[q.id])
        for rid in option.contributes:
            cand.setdefault(rid, set()).add(q.id)
    prio = {q.id: q.priority for q in kb.questions}
    suppressed: set[str] = set()
    ties: set[str] = set()
    for g in kb.exclusion_groups:
        members = [m for m in sorted(g.members) if m in cand]
        if len(members) < 2:
            continue
        strength = {m: max(prio[q] for q in cand[m]) for m in members}
        top = max(strength.values())
        winners = [m for m in members if strength[m] == top]
        suppressed |= {m for m in members if strength[m] < top}
        if len(winners) >= 2:
            ties.add(g.id)
    return set(cand) - suppressed, suppressed, ties


def test_criterion_2_exhaustive_conflict_soundness(kb):
    start = time.monotonic()

    # Vectorized independent walk over all complete assignments.
    counts = [len(q.options) for q in kb.questions]
    total = 1
    for c in counts:
        total *= c
    assert total == 2_125_764
    idx = np.arange(total, dtype=np.int64)
    cols = []
    stride = total
    for c in counts:
        stride //= c
        cols.append((idx // stride) % c)

    members = sorted(kb.exclusion_groups[0].members)  # {'nosql', 'sql'}
    cand = {m: np.zeros(total, dtype=bool) for m in members}
    strength = {m: np.full(total, -1, dtype=np.int64) for m in members}
    for qi, q in enumerate(kb.questions):
        for m in members:
            table = np.array([m in o.contributes for o in q.options], dtype=bool)
            if not table.any():
                continue
            hits = table[cols[qi]]
            cand[m] |= hits
            strength[m] = np.maximum(
                strength[m], np.where(hits, q.priority, -1)
            )
    in_conflict = cand[members[0]] & cand[members[1]]
    gmax = np.maximum(
        np.where(cand[members[0]], strength[members[0]], -1),
        np.where(cand[members[1]], strength[members[1]], -1),
    )
    suppressed = {
        m: cand[m] & in_conflict & (strength[m] < gmax) for m in members
    }
    resolved = {m: cand[m] & ~suppressed[m] for m in members}

    both_resolved = resolved["sql"] & resolved["nosql"]
    q_index = {q.id: i for i, q in enumerate(kb.questions)}
    rpq5_both = cols[q_index["RPQ5"]] == [
        o.id for o in kb.question("RPQ5").options
    ].index("both")
    rpq12_dk = cols[q_index["RPQ12"]] == [
        o.id for o in kb.question("RPQ12").options
    ].index("dont_know")
    assert np.array_equal(both_resolved, rpq5_both & rpq12_dk)
    assert int(both_resolved.sum()) == 6 * 6 * 3**8

    # resolved and suppressed are disjoint everywhere.
    for m in members:
        assert not np.any(resolved[m] & suppressed[m])

    # Cross-check 1000 random assignments against the brute-force resolver.
    rng = random.Random(42)
    for _ in range(1000):
        assignment = random_complete_assignment(kb, rng)
        report = recommend(kb, make_answers(kb, assignment))
        res, sup, ties = _brute_force_resolve(kb, assignment)
        assert {rr.recommendation.id for rr in report.resolved} == res
        assert {s.recommendation_id for s in report.suppressions} == sup
        assert set(report.ties) == ties
        assert not (res & sup)

    elapsed = time.monotonic() - start
    assert elapsed < 60.0, f"conflict soundness took {elapsed:.1f}s"
    _ok(2, "exhaustive conflict soundness, 2,125,764 assignments")


def test_criterion_3_order_invariance(kb):
    rng = random.Random(777)
    for _ in range(500):
        entries = random_answer_subset(kb, rng)
        items = list(entries.items())
        baseline = recommend(kb, make_answers(kb, entries))
        for _ in range(5):
            rng.shuffle(items)
            answers = AnswerSet.empty()
            for qid, oid in items:
                answers = record_answer(answers, kb, qid, oid)
            assert recommend(kb, answers) == baseline
    _ok(3, "order invariance, 500 subsets x 5 orders")


def test_criterion_4_priority_semantics(kb):
    report = recommend(kb, make_answers(kb, {"RPQ5": "nosql", "RPQ12": "no"}))
    assert [rr.recommendation.id for rr in report.resolved] == ["sql"]
    assert [s.recommendation_id for s in report.suppressions] == ["nosql"]
    assert report.suppressions[0].winning_question == "RPQ12"

    report = recommend(kb, make_answers(kb, {"RPQ5": "sql", "RPQ12": "yes"}))
    assert [rr.recommendation.id for rr in report.resolved] == ["nosql"]
    assert [s.recommendation_id for s in report.suppressions] == ["sql"]
    assert report.suppressions[0].winning_question == "RPQ12"
    _ok(4, "priority semantics, both directions")


def test_criterion_5_traceability_completeness(kb):
    rng = random.Random(555)
    for _ in range(500):
        entries = random_answer_subset(kb, rng)
        report = recommend(kb, make_answers(kb, entries))
        matrix = report.matrix
        for rid in matrix.rows:
            row_cells = [
                (qid, matrix.cells[(rid, qid)])
                for qid in matrix.columns
                if (rid, qid) in matrix.cells
            ]
            assert row_cells, f"row {rid} has no cells"
            for qid, oid in row_cells:
                assert entries[qid] == oid
                assert rid in kb.question(qid).option(oid).contributes
    _ok(5, "traceability completeness, 500 answer sets")


def _mutant(code: str) -> tuple[KnowledgeBase, bool]:
    """(KB seeded with exactly one defect, whether enumeration is needed)."""
    recs = (
        Recommendation("ra", "RA", Category.STYLE, "d"),
        Recommendation("rb", "RB", Category.STYLE, "d"),
    )
    q = lambda qid, prio, contributes: Question(  # noqa: E731
        qid, "t", "c", prio,
        (AnswerOption("y", "Yes", contributes), AnswerOption("n", "No")),
    )
    if code == "DANGLING_REF":
        return KnowledgeBase(
            "m", "0", (q("qa", 0, ("ra", "ghost")), q("qb", 0, ("rb",))), recs
        ), False
    if code == "SINGLETON_GROUP":
        return KnowledgeBase(
            "m", "0", (q("qa", 0, ("ra",)), q("qb", 0, ("rb",))), recs,
            (ExclusionGroup("g", frozenset({"ra"}), "x"),),
        ), False
    if code == "UNREACHABLE_REC":
        return KnowledgeBase(
            "m", "0", (q("qa", 0, ("ra",)), q("qb", 0, ("ra",))), recs
        ), False
    if code == "NEUTRAL_CONTRIBUTES":
        return KnowledgeBase(
            "m", "0",
            (
                Question("qa", "t", "c", 0,
                         (AnswerOption("y", "Yes", ("ra",)),
                          AnswerOption("dk", "Don't know", ("rb",)))),
                q("qb", 0, ("rb",)),
            ),
            recs,
        ), False
    if code == "ALWAYS_SUPPRESSED":
        return KnowledgeBase(
            "m", "0", (q("qa", 0, ("ra",)), q("qb", 1, ("rb",))), recs,
            (ExclusionGroup("g", frozenset({"ra", "rb"}), "x"),),
        ), True
    if code == "TIE_PRONE_GROUP":
        return KnowledgeBase(
            "m", "0", (q("qa", 3, ("ra",)), q("qb", 3, ("rb",))), recs,
            (ExclusionGroup("g", frozenset({"ra", "rb"}), "x"),),
        ), True
    raise ValueError(code)


def test_criterion_6_lint_mutations(kb):
    expected_severity = {
        "DANGLING_REF": Severity.ERROR,
        "SINGLETON_GROUP": Severity.ERROR,
        "UNREACHABLE_REC": Severity.WARNING,
        "ALWAYS_SUPPRESSED": Severity.WARNING,
        "TIE_PRONE_GROUP": Severity.INFO,
        "NEUTRAL_CONTRIBUTES": Severity.WARNING,
    }
    for code, severity in expected_severity.items():
        mutant, needs_enumeration = _mutant(code)
        stats = enumerate_space(mutant) if needs_enumeration else None
        findings = lint(mutant, stats)
        matching = [f for f in findings if f.code == code]
        assert len(matching) == 1, (code, findings)
        assert matching[0].severity is severity
        # No unrelated finding of a different code sneaks in.
        assert all(f.code == code for f in findings), (code, findings)

    assert not any(f.severity is Severity.ERROR for f in lint(kb, enumerate_space(kb)))
    _ok(6, "lint mutations, 6 codes + clean baseline")


def test_criterion_7_renderer_goldens(kb):
    scenarios = {
        "empty": {},
        "rpq8_only": {"RPQ8": "yes"},
        "hospital_distributed": {"RPQ1": "hospital", "RPQ2": "yes"},
        "conflict": {"RPQ5": "nosql", "RPQ12": "no"},
    }
    opts = RenderOptions(timestamp="2026-01-15T12:00:00+00:00")
    for name, entries in scenarios.items():
        report = recommend(kb, make_answers(kb, entries))
        rendered = {
            "md": render_markdown(report, kb, opts),
            "html": render_html(report, kb, opts),
            "dot": render_dot(report, kb),
        }
        for ext, text in rendered.items():
            golden = (TESTDATA / f"golden_{name}.{ext}").read_text("utf-8")
            assert text == golden, f"{name}.{ext} diverges from golden"
        # Determinism double-render.
        assert render_markdown(report, kb, opts) == rendered["md"]
        assert render_html(report, kb, opts) == rendered["html"]
        assert render_dot(report, kb) == rendered["dot"]
    _ok(7, "renderer goldens, 4 scenarios x 3 formats")


def test_criterion_8_service_round_trip(kb, tmp_path):
    start = time.monotonic()
    store_file = tmp_path / "sessions.json"
    rng = random.Random(31)
    assignment = random_complete_assignment(kb, rng)

    with TestClient(create_app(kb=kb, store_path=store_file)) as client:
        sid = client.post("/api/v1/sessions").json()["id"]
        for qid, oid in list(assignment.items())[:6]:
            assert client.put(
                f"/api/v1/sessions/{sid}/answers/{qid}", json={"option_id": oid}
            ).status_code == 200

    # Simulated kill/restart mid-session: fresh app over the same store.
    with TestClient(create_app(kb=kb, store_path=store_file)) as client:
        session = client.get(f"/api/v1/sessions/{sid}").json()
        assert session["answers"] == dict(list(assignment.items())[:6])
        for qid, oid in list(assignment.items())[6:]:
            assert client.put(
                f"/api/v1/sessions/{sid}/answers/{qid}", json={"option_id": oid}
            ).status_code == 200
        body = client.get(f"/api/v1/sessions/{sid}/recommendations").json()
        expected = recommend(kb, make_answers(kb, assignment)).to_dict(kb)
        assert body == expected

        # Error contracts.
        assert client.get("/api/v1/sessions/absent").status_code == 404
        assert client.put(
            f"/api/v1/sessions/{sid}/answers/RPQ1", json={"option_id": "bogus"}
        ).status_code == 422
        assert client.put(
            "/api/v1/sessions/absent/answers/RPQ1", json={"option_id": "hospital"}
        ).status_code == 404

    elapsed = time.monotonic() - start
    assert elapsed < 10.0, f"service round-trip took {elapsed:.1f}s"
    _ok(8, "service round-trip with restart")
