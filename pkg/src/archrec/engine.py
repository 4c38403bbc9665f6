"""Pure evaluation core.

Answers are buffered into an immutable :class:`AnswerSet`; evaluation is a
pure function of (knowledge base, answer set), so the order in which answers
were recorded never matters. Candidate recommendations are collected from the
answered options, deduplicated with their sources merged, then exclusion
groups are resolved: within a group, a member's strength is the highest
priority among its source questions, members strictly below the group maximum
are suppressed, and groups whose maximum is shared by two or more members are
reported as unresolved ties.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Mapping

from .model import CATEGORY_ORDER, Category, KnowledgeBase, Recommendation


class UnknownQuestion(KeyError):
    def __init__(self, question_id: str):
        super().__init__(question_id)
        self.question_id = question_id

    def __str__(self) -> str:
        return f"unknown question id {self.question_id!r}"


class UnknownOption(KeyError):
    def __init__(self, question_id: str, option_id: str):
        super().__init__(option_id)
        self.question_id = question_id
        self.option_id = option_id

    def __str__(self) -> str:
        return f"unknown option id {self.option_id!r} for question {self.question_id!r}"


@dataclass(frozen=True)
class AnswerSet:
    """Partial map question-id -> option-id. Treat as immutable."""

    entries: Mapping[str, str] = field(default_factory=dict)

    @staticmethod
    def empty() -> "AnswerSet":
        return AnswerSet({})

    def get(self, question_id: str) -> str | None:
        return self.entries.get(question_id)

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, question_id: str) -> bool:
        return question_id in self.entries


def record_answer(
    answers: AnswerSet, kb: KnowledgeBase, question_id: str, option_id: str
) -> AnswerSet:
    """Return a new AnswerSet with the entry set; re-answering overwrites."""
    question = kb.questions_by_id.get(question_id)
    if question is None:
        raise UnknownQuestion(question_id)
    if option_id not in question.options_by_id:
        raise UnknownOption(question_id, option_id)
    updated = dict(answers.entries)
    updated[question_id] = option_id
    return AnswerSet(updated)


def validate_answers(kb: KnowledgeBase, entries: Mapping[str, str]) -> AnswerSet:
    """Build an AnswerSet from raw entries, checking each against the KB."""
    answers = AnswerSet.empty()
    for qid, oid in entries.items():
        answers = record_answer(answers, kb, qid, oid)
    return answers


@dataclass(frozen=True)
class ResolvedRecommendation:
    recommendation: Recommendation
    sources: tuple[tuple[str, str], ...]  # (question-id, option-id), KB question order


@dataclass(frozen=True)
class SuppressionRecord:
    recommendation_id: str
    suppressed_sources: tuple[tuple[str, str], ...]
    winning_question: str
    group: str


@dataclass(frozen=True)
class TraceabilityMatrix:
    rows: tuple[str, ...]  # resolved recommendation ids, report order
    columns: tuple[str, ...]  # all KB question ids, KB order
    cells: Mapping[tuple[str, str], str]  # (rec-id, question-id) -> option-id

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": list(self.rows),
            "columns": list(self.columns),
            "cells": {
                rid: {
                    qid: self.cells[(rid, qid)]
                    for qid in self.columns
                    if (rid, qid) in self.cells
                }
                for rid in self.rows
            },
        }


@dataclass(frozen=True)
class RecommendationReport:
    kb_id: str
    kb_version: str
    answers: AnswerSet
    resolved: tuple[ResolvedRecommendation, ...]  # category order, then KB order
    suppressions: tuple[SuppressionRecord, ...]
    ties: tuple[str, ...]  # exclusion-group ids left unresolved
    matrix: TraceabilityMatrix

    def by_category(self) -> dict[Category, list[ResolvedRecommendation]]:
        grouped: dict[Category, list[ResolvedRecommendation]] = {
            c: [] for c in CATEGORY_ORDER
        }
        for rr in self.resolved:
            grouped[rr.recommendation.category].append(rr)
        return grouped

    def to_dict(self, kb: KnowledgeBase) -> dict[str, Any]:
        """Stable wire form; answers sorted into KB question order."""
        order = {q.id: i for i, q in enumerate(kb.questions)}
        return {
            "kb_id": self.kb_id,
            "kb_version": self.kb_version,
            "answers": {
                qid: self.answers.entries[qid]
                for qid in sorted(self.answers.entries, key=order.__getitem__)
            },
            "resolved": {
                category.value: [
                    {
                        "id": rr.recommendation.id,
                        "name": rr.recommendation.name,
                        "category": rr.recommendation.category.value,
                        "description": rr.recommendation.description,
                        "references": list(rr.recommendation.references),
                        "sources": [
                            {"question_id": qid, "option_id": oid}
                            for qid, oid in rr.sources
                        ],
                    }
                    for rr in items
                ]
                for category, items in self.by_category().items()
            },
            "suppressions": [
                {
                    "recommendation_id": s.recommendation_id,
                    "suppressed_sources": [
                        {"question_id": qid, "option_id": oid}
                        for qid, oid in s.suppressed_sources
                    ],
                    "winning_question": s.winning_question,
                    "group": s.group,
                }
                for s in self.suppressions
            ],
            "ties": list(self.ties),
            "matrix": self.matrix.to_dict(),
        }


def collect_candidates(
    kb: KnowledgeBase, answers: AnswerSet
) -> list[ResolvedRecommendation]:
    """Union of contributions over answered options, deduplicated with merged
    sources; ordered by (category, KB declaration order)."""
    sources: dict[str, list[tuple[str, str]]] = {}
    for question in kb.questions:  # KB order keeps source lists deterministic
        oid = answers.get(question.id)
        if oid is None:
            continue
        for rid in question.option(oid).contributes:
            sources.setdefault(rid, []).append((question.id, oid))

    decl_order = {r.id: i for i, r in enumerate(kb.recommendations)}
    cat_order = {c: i for i, c in enumerate(CATEGORY_ORDER)}
    ordered = sorted(
        sources,
        key=lambda rid: (cat_order[kb.recommendation(rid).category], decl_order[rid]),
    )
    return [
        ResolvedRecommendation(kb.recommendation(rid), tuple(sources[rid]))
        for rid in ordered
    ]


def resolve_conflicts(
    kb: KnowledgeBase, candidates: list[ResolvedRecommendation]
) -> tuple[
    list[ResolvedRecommendation], list[SuppressionRecord], list[str]
]:
    """Apply exclusion groups: strength = max source-question priority;
    strictly weaker members are suppressed; shared maxima survive and tie."""
    by_id = {c.recommendation.id: c for c in candidates}
    decl_order = {r.id: i for i, r in enumerate(kb.recommendations)}
    q_order = {q.id: i for i, q in enumerate(kb.questions)}
    priority = {q.id: q.priority for q in kb.questions}

    suppressed_ids: set[str] = set()
    suppressions: list[SuppressionRecord] = []
    ties: list[str] = []

    for group in kb.exclusion_groups:
        members = sorted(
            (m for m in group.members if m in by_id), key=decl_order.__getitem__
        )
        if len(members) < 2:
            continue
        strength = {
            m: max(priority[qid] for qid, _ in by_id[m].sources) for m in members
        }
        group_max = max(strength.values())
        winners = [m for m in members if strength[m] == group_max]
        losers = [m for m in members if strength[m] < group_max]

        # Winning question: earliest (KB order) max-priority source of a winner.
        winning_question = min(
            (
                qid
                for w in winners
                for qid, _ in by_id[w].sources
                if priority[qid] == group_max
            ),
            key=q_order.__getitem__,
        )
        for m in losers:
            suppressed_ids.add(m)
            suppressions.append(
                SuppressionRecord(
                    recommendation_id=m,
                    suppressed_sources=by_id[m].sources,
                    winning_question=winning_question,
                    group=group.id,
                )
            )
        if len(winners) >= 2:
            ties.append(group.id)

    resolved = [c for c in candidates if c.recommendation.id not in suppressed_ids]
    suppressions.sort(key=lambda s: decl_order[s.recommendation_id])
    return resolved, suppressions, ties


def build_traceability(
    kb: KnowledgeBase, resolved: Iterable[ResolvedRecommendation]
) -> TraceabilityMatrix:
    resolved = list(resolved)
    cells = {
        (rr.recommendation.id, qid): oid
        for rr in resolved
        for qid, oid in rr.sources
    }
    return TraceabilityMatrix(
        rows=tuple(rr.recommendation.id for rr in resolved),
        columns=tuple(q.id for q in kb.questions),
        cells=cells,
    )


def recommend(kb: KnowledgeBase, answers: AnswerSet) -> RecommendationReport:
    """Full evaluation: collect, resolve, trace. Pure and order-invariant."""
    candidates = collect_candidates(kb, answers)
    resolved, suppressions, ties = resolve_conflicts(kb, candidates)
    return RecommendationReport(
        kb_id=kb.id,
        kb_version=kb.version,
        answers=answers,
        resolved=tuple(resolved),
        suppressions=tuple(suppressions),
        ties=tuple(ties),
        matrix=build_traceability(kb, resolved),
    )
