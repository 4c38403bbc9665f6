"""Knowledge-base validation beyond load-time checks.

Two layers: static findings (dangling references, singleton groups,
unreachable recommendations, contributing "don't know" options) and
exhaustive findings that need the full assignment space (members that can
never win a conflict, groups that always tie). The space walk is vectorized
over all complete answer assignments and mirrors the engine's resolver;
:func:`classify_assignment` exposes the same code path for single
assignments so tests can cross-check it against the engine directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import Any, Mapping

import numpy as np

from .model import KBError, KnowledgeBase


class Severity(str, Enum):
    ERROR = "error"
    WARNING = "warning"
    INFO = "info"


_SEVERITY_RANK = {Severity.ERROR: 0, Severity.WARNING: 1, Severity.INFO: 2}

FINDING_CODES = (
    "DANGLING_REF",
    "SINGLETON_GROUP",
    "UNREACHABLE_REC",
    "ALWAYS_SUPPRESSED",
    "TIE_PRONE_GROUP",
    "NEUTRAL_CONTRIBUTES",
)

# Labels treated as neutral "don't know" variants.
_NEUTRAL_LABELS = {"don't know", "dont know", "don’t know", "no / don't know"}


class SpaceTooLarge(KBError):
    def __init__(self, product: int, cap: int):
        super().__init__(
            f"assignment space has {product} complete assignments, over the cap of {cap}"
        )
        self.product = product
        self.cap = cap


@dataclass(frozen=True)
class LintFinding:
    severity: Severity
    code: str
    subject: str
    message: str


@dataclass(frozen=True)
class SpaceStats:
    """Counts over every complete answer assignment of a KB."""

    total_assignments: int
    reach_count: Mapping[str, int]  # rec-id -> assignments where resolved
    suppression_count: Mapping[str, int]  # rec-id -> assignments where suppressed
    tie_count: Mapping[str, int]  # group-id -> assignments left tied
    conflict_count: Mapping[str, int]  # group-id -> assignments with >= 2 candidates
    # (group-id, rec-id) -> conflicting assignments where the member resolved
    conflict_survival: Mapping[tuple[str, str], int]

    def to_dict(self) -> dict[str, Any]:
        return {
            "total_assignments": self.total_assignments,
            "reach_count": dict(self.reach_count),
            "suppression_count": dict(self.suppression_count),
            "tie_count": dict(self.tie_count),
            "conflict_count": dict(self.conflict_count),
            "conflict_survival": {
                gid: {
                    rid: count
                    for (g, rid), count in self.conflict_survival.items()
                    if g == gid
                }
                for gid in self.tie_count
            },
        }


def _batch_resolve(kb: KnowledgeBase, cols: list[np.ndarray]):
    """Resolve many assignments at once.

    ``cols[i]`` holds the chosen option index of question i per assignment.
    Returns (candidate, resolved, suppressed, conflict, tie) boolean arrays
    keyed by recommendation / group id.
    """
    n = len(cols[0]) if cols else 0
    group_members = {rid for g in kb.exclusion_groups for rid in g.members}

    candidate: dict[str, np.ndarray] = {
        r.id: np.zeros(n, dtype=bool) for r in kb.recommendations
    }
    strength: dict[str, np.ndarray] = {
        rid: np.full(n, -1, dtype=np.int64) for rid in group_members
    }
    for qi, question in enumerate(kb.questions):
        contributed = {rid for o in question.options for rid in o.contributes}
        for rid in contributed:
            if rid not in candidate:  # dangling refs are lint's problem, not ours
                continue
            table = np.array(
                [rid in o.contributes for o in question.options], dtype=bool
            )
            hits = table[cols[qi]]
            candidate[rid] |= hits
            if rid in strength:
                np.maximum(
                    strength[rid],
                    np.where(hits, question.priority, -1),
                    out=strength[rid],
                )

    suppressed: dict[str, np.ndarray] = {
        rid: np.zeros(n, dtype=bool) for rid in candidate
    }
    conflict: dict[str, np.ndarray] = {}
    tie: dict[str, np.ndarray] = {}
    for group in kb.exclusion_groups:
        members = sorted(group.members)
        cand_count = np.zeros(n, dtype=np.int64)
        for m in members:
            cand_count += candidate[m]
        in_conflict = cand_count >= 2
        group_max = np.full(n, -1, dtype=np.int64)
        for m in members:
            np.maximum(
                group_max, np.where(candidate[m], strength[m], -1), out=group_max
            )
        winner_count = np.zeros(n, dtype=np.int64)
        for m in members:
            wins = candidate[m] & (strength[m] == group_max)
            winner_count += wins
            suppressed[m] |= candidate[m] & in_conflict & (strength[m] < group_max)
        conflict[group.id] = in_conflict
        tie[group.id] = in_conflict & (winner_count >= 2)

    resolved = {rid: candidate[rid] & ~suppressed[rid] for rid in candidate}
    return candidate, resolved, suppressed, conflict, tie


def enumerate_space(kb: KnowledgeBase, cap: int = 10_000_000) -> SpaceStats:
    """Walk every complete assignment and accumulate resolution statistics.

    Assignment i maps to option indices in mixed radix with the last
    question varying fastest.
    """
    counts = [len(q.options) for q in kb.questions]
    total = 1
    for c in counts:
        total *= c
    if total > cap:
        raise SpaceTooLarge(total, cap)

    idx = np.arange(total, dtype=np.int64)
    cols: list[np.ndarray] = []
    stride = total
    for c in counts:
        stride //= c
        cols.append((idx // stride) % c)

    _, resolved, suppressed, conflict, tie = _batch_resolve(kb, cols)

    return SpaceStats(
        total_assignments=total,
        reach_count={r.id: int(resolved[r.id].sum()) for r in kb.recommendations},
        suppression_count={
            r.id: int(suppressed[r.id].sum()) for r in kb.recommendations
        },
        tie_count={g.id: int(tie[g.id].sum()) for g in kb.exclusion_groups},
        conflict_count={
            g.id: int(conflict[g.id].sum()) for g in kb.exclusion_groups
        },
        conflict_survival={
            (g.id, rid): int((conflict[g.id] & resolved[rid]).sum())
            for g in kb.exclusion_groups
            for rid in sorted(g.members)
        },
    )


def classify_assignment(
    kb: KnowledgeBase, assignment: Mapping[str, str]
) -> tuple[set[str], set[str], set[str]]:
    """(resolved ids, suppressed ids, tied group ids) for one complete
    assignment, through the same vector path as enumerate_space."""
    cols = [
        np.array(
            [[o.id for o in q.options].index(assignment[q.id])], dtype=np.int64
        )
        for q in kb.questions
    ]
    _, resolved, suppressed, _, tie = _batch_resolve(kb, cols)
    return (
        {rid for rid, arr in resolved.items() if arr[0]},
        {rid for rid, arr in suppressed.items() if arr[0]},
        {gid for gid, arr in tie.items() if arr[0]},
    )


def lint(kb: KnowledgeBase, stats: SpaceStats | None = None) -> list[LintFinding]:
    """Produce deterministic findings; enumeration-dependent codes
    (ALWAYS_SUPPRESSED, TIE_PRONE_GROUP) are only emitted when stats are given."""
    findings: list[LintFinding] = []
    rec_ids = {r.id for r in kb.recommendations}

    for q in kb.questions:
        for o in q.options:
            for rid in o.contributes:
                if rid not in rec_ids:
                    findings.append(
                        LintFinding(
                            Severity.ERROR,
                            "DANGLING_REF",
                            rid,
                            f"option {q.id}/{o.id} contributes unknown "
                            f"recommendation {rid!r}",
                        )
                    )
            if o.label.strip().lower() in _NEUTRAL_LABELS and o.contributes:
                findings.append(
                    LintFinding(
                        Severity.WARNING,
                        "NEUTRAL_CONTRIBUTES",
                        f"{q.id}.{o.id}",
                        f"neutral option {q.id}/{o.id} ({o.label!r}) contributes "
                        f"{len(o.contributes)} recommendation(s)",
                    )
                )

    for g in kb.exclusion_groups:
        if len(g.members) < 2:
            findings.append(
                LintFinding(
                    Severity.ERROR,
                    "SINGLETON_GROUP",
                    g.id,
                    f"exclusion group {g.id!r} has {len(g.members)} member(s); "
                    "need at least 2",
                )
            )
        for rid in sorted(g.members):
            if rid not in rec_ids:
                findings.append(
                    LintFinding(
                        Severity.ERROR,
                        "DANGLING_REF",
                        rid,
                        f"exclusion group {g.id!r} references unknown "
                        f"recommendation {rid!r}",
                    )
                )

    contributed = {
        rid for q in kb.questions for o in q.options for rid in o.contributes
    }
    for r in kb.recommendations:
        if r.id not in contributed:
            findings.append(
                LintFinding(
                    Severity.WARNING,
                    "UNREACHABLE_REC",
                    r.id,
                    f"recommendation {r.id!r} is contributed by no answer option",
                )
            )

    if stats is not None:
        for g in kb.exclusion_groups:
            n_conflicts = stats.conflict_count.get(g.id, 0)
            if n_conflicts == 0:
                continue
            for rid in sorted(g.members):
                if (
                    stats.suppression_count.get(rid, 0) > 0
                    and stats.conflict_survival.get((g.id, rid), 0) == 0
                ):
                    findings.append(
                        LintFinding(
                            Severity.WARNING,
                            "ALWAYS_SUPPRESSED",
                            rid,
                            f"member {rid!r} of group {g.id!r} loses every one of "
                            f"its {n_conflicts} conflicting assignments",
                        )
                    )
            if stats.tie_count.get(g.id, 0) == n_conflicts:
                findings.append(
                    LintFinding(
                        Severity.INFO,
                        "TIE_PRONE_GROUP",
                        g.id,
                        f"group {g.id!r} ties in all {n_conflicts} of its "
                        "conflicting assignments",
                    )
                )

    findings.sort(key=lambda f: (_SEVERITY_RANK[f.severity], f.code, f.subject))
    return findings


def has_errors(findings: list[LintFinding]) -> bool:
    return any(f.severity is Severity.ERROR for f in findings)


def findings_to_json(findings: list[LintFinding]) -> bytes:
    doc = [
        {
            "severity": f.severity.value,
            "code": f.code,
            "subject": f.subject,
            "message": f.message,
        }
        for f in findings
    ]
    return (json.dumps(doc, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def stats_to_json(stats: SpaceStats) -> bytes:
    return (json.dumps(stats.to_dict(), indent=2, ensure_ascii=False) + "\n").encode(
        "utf-8"
    )
