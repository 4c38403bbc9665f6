"""Knowledge-base schema: domain types, validation, and JSON (de)serialization.

The knowledge base is pure data: questions with closed answer options, the
recommendations those options contribute, and exclusion groups declaring
mutually contradictory recommendations. All decision logic lives in
:mod:`archrec.engine`; this module only guarantees the data is well formed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import IO, Any, Mapping


class Category(str, Enum):
    """The four kinds of recommendation a KB can emit."""

    STYLE = "style"
    TACTIC = "tactic"
    TECHNOLOGY = "technology"
    QUALITY_ATTRIBUTE = "quality_attribute"


# Fixed presentation order for deterministic grouping and rendering.
CATEGORY_ORDER: tuple[Category, ...] = (
    Category.STYLE,
    Category.TACTIC,
    Category.TECHNOLOGY,
    Category.QUALITY_ATTRIBUTE,
)


class KBError(Exception):
    """Base class for knowledge-base errors."""


class ParseError(KBError):
    """Raised when a KB document is not well-formed (bad JSON / bad shape)."""


class SchemaError(KBError):
    """Raised when a KB document violates a structural invariant.

    ``subject`` names the offending id where one exists.
    """

    def __init__(self, message: str, subject: str | None = None):
        super().__init__(message)
        self.subject = subject


@dataclass(frozen=True)
class AnswerOption:
    id: str
    label: str
    contributes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Question:
    id: str
    text: str
    concern: str
    priority: int
    options: tuple[AnswerOption, ...]

    @cached_property
    def options_by_id(self) -> Mapping[str, AnswerOption]:
        return {o.id: o for o in self.options}

    def option(self, option_id: str) -> AnswerOption:
        return self.options_by_id[option_id]


@dataclass(frozen=True)
class Recommendation:
    id: str
    name: str
    category: Category
    description: str
    references: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExclusionGroup:
    id: str
    members: frozenset[str]
    rationale: str


@dataclass(frozen=True)
class KnowledgeBase:
    """Immutable container for the whole decision rule set.

    ``questions`` and ``recommendations`` preserve declaration order, which
    downstream code uses as the deterministic tie-break ordering.
    """

    id: str
    version: str
    questions: tuple[Question, ...]
    recommendations: tuple[Recommendation, ...]
    exclusion_groups: tuple[ExclusionGroup, ...] = ()

    @cached_property
    def questions_by_id(self) -> Mapping[str, Question]:
        return {q.id: q for q in self.questions}

    @cached_property
    def recommendations_by_id(self) -> Mapping[str, Recommendation]:
        return {r.id: r for r in self.recommendations}

    def question(self, question_id: str) -> Question:
        return self.questions_by_id[question_id]

    def recommendation(self, rec_id: str) -> Recommendation:
        return self.recommendations_by_id[rec_id]


def validate_kb(kb: KnowledgeBase) -> None:
    """Check every structural invariant; raise SchemaError on the first hit."""
    seen_q: set[str] = set()
    for q in kb.questions:
        if q.id in seen_q:
            raise SchemaError(f"duplicate question id {q.id!r}", subject=q.id)
        seen_q.add(q.id)
        if q.priority < 0:
            raise SchemaError(
                f"question {q.id!r} has negative priority {q.priority}", subject=q.id
            )
        if len(q.options) < 2:
            raise SchemaError(
                f"question {q.id!r} has {len(q.options)} option(s); need at least 2",
                subject=q.id,
            )
        seen_o: set[str] = set()
        for o in q.options:
            if o.id in seen_o:
                raise SchemaError(
                    f"duplicate option id {o.id!r} in question {q.id!r}", subject=o.id
                )
            seen_o.add(o.id)
    if not kb.questions:
        raise SchemaError("knowledge base has no questions", subject=kb.id)

    seen_r: set[str] = set()
    for r in kb.recommendations:
        if r.id in seen_r:
            raise SchemaError(f"duplicate recommendation id {r.id!r}", subject=r.id)
        seen_r.add(r.id)

    for q in kb.questions:
        for o in q.options:
            for rid in o.contributes:
                if rid not in seen_r:
                    raise SchemaError(
                        f"option {q.id}/{o.id} contributes unknown "
                        f"recommendation {rid!r}",
                        subject=rid,
                    )

    seen_g: set[str] = set()
    for g in kb.exclusion_groups:
        if g.id in seen_g:
            raise SchemaError(f"duplicate exclusion group id {g.id!r}", subject=g.id)
        seen_g.add(g.id)
        if len(g.members) < 2:
            raise SchemaError(
                f"exclusion group {g.id!r} has fewer than 2 members", subject=g.id
            )
        for rid in sorted(g.members):
            if rid not in seen_r:
                raise SchemaError(
                    f"exclusion group {g.id!r} references unknown "
                    f"recommendation {rid!r}",
                    subject=rid,
                )


def _require(obj: Mapping[str, Any], key: str, typ: type, where: str) -> Any:
    if key not in obj:
        raise ParseError(f"missing key {key!r} in {where}")
    value = obj[key]
    if not isinstance(value, typ):
        raise ParseError(
            f"key {key!r} in {where} must be {typ.__name__}, got {type(value).__name__}"
        )
    return value


def _parse_option(obj: Any, where: str) -> AnswerOption:
    if not isinstance(obj, dict):
        raise ParseError(f"option in {where} must be an object")
    contributes = _require(obj, "contributes", list, where) if "contributes" in obj else []
    if not all(isinstance(c, str) for c in contributes):
        raise ParseError(f"contributes in {where} must be a list of strings")
    return AnswerOption(
        id=_require(obj, "id", str, where),
        label=_require(obj, "label", str, where),
        contributes=tuple(contributes),
    )


def _parse_question(obj: Any) -> Question:
    if not isinstance(obj, dict):
        raise ParseError("question must be an object")
    qid = _require(obj, "id", str, "question")
    where = f"question {qid}"
    options = _require(obj, "options", list, where)
    return Question(
        id=qid,
        text=_require(obj, "text", str, where),
        concern=_require(obj, "concern", str, where),
        priority=_require(obj, "priority", int, where),
        options=tuple(_parse_option(o, where) for o in options),
    )


def _parse_recommendation(obj: Any) -> Recommendation:
    if not isinstance(obj, dict):
        raise ParseError("recommendation must be an object")
    rid = _require(obj, "id", str, "recommendation")
    where = f"recommendation {rid}"
    category = _require(obj, "category", str, where)
    try:
        cat = Category(category)
    except ValueError:
        raise ParseError(
            f"{where}: unknown category {category!r}; expected one of "
            + ", ".join(c.value for c in Category)
        ) from None
    references = obj.get("references", [])
    if not isinstance(references, list) or not all(
        isinstance(r, str) for r in references
    ):
        raise ParseError(f"references in {where} must be a list of strings")
    return Recommendation(
        id=rid,
        name=_require(obj, "name", str, where),
        category=cat,
        description=_require(obj, "description", str, where),
        references=tuple(references),
    )


def _parse_group(obj: Any) -> ExclusionGroup:
    if not isinstance(obj, dict):
        raise ParseError("exclusion group must be an object")
    gid = _require(obj, "id", str, "exclusion group")
    where = f"exclusion group {gid}"
    members = _require(obj, "members", list, where)
    if not all(isinstance(m, str) for m in members):
        raise ParseError(f"members in {where} must be a list of strings")
    return ExclusionGroup(
        id=gid,
        members=frozenset(members),
        rationale=_require(obj, "rationale", str, where),
    )


def load_kb(source: bytes | IO[bytes], validate: bool = True) -> KnowledgeBase:
    """Parse a KB document from bytes or a binary stream.

    With ``validate=False`` only well-formedness is checked; structural
    invariants are skipped so that linting can inspect broken KBs.
    """
    data = source if isinstance(source, bytes) else source.read()
    try:
        doc = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise ParseError(f"KB document is not valid UTF-8: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"KB document is not valid JSON at line {exc.lineno}, "
            f"column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(doc, dict):
        raise ParseError("KB document must be a JSON object")

    kb = KnowledgeBase(
        id=_require(doc, "id", str, "document"),
        version=_require(doc, "version", str, "document"),
        questions=tuple(
            _parse_question(q) for q in _require(doc, "questions", list, "document")
        ),
        recommendations=tuple(
            _parse_recommendation(r)
            for r in _require(doc, "recommendations", list, "document")
        ),
        exclusion_groups=tuple(
            _parse_group(g) for g in doc.get("exclusion_groups", [])
        ),
    )
    if validate:
        validate_kb(kb)
    return kb


def kb_to_dict(kb: KnowledgeBase) -> dict[str, Any]:
    """Plain-dict form with stable key order (matches the file format)."""
    return {
        "id": kb.id,
        "version": kb.version,
        "questions": [
            {
                "id": q.id,
                "text": q.text,
                "concern": q.concern,
                "priority": q.priority,
                "options": [
                    {"id": o.id, "label": o.label, "contributes": list(o.contributes)}
                    for o in q.options
                ],
            }
            for q in kb.questions
        ],
        "recommendations": [
            {
                "id": r.id,
                "name": r.name,
                "category": r.category.value,
                "description": r.description,
                "references": list(r.references),
            }
            for r in kb.recommendations
        ],
        "exclusion_groups": [
            {"id": g.id, "members": sorted(g.members), "rationale": g.rationale}
            for g in kb.exclusion_groups
        ],
    }


def save_kb(kb: KnowledgeBase) -> bytes:
    """Serialize deterministically: fixed key order, 2-space indent, trailing newline."""
    text = json.dumps(kb_to_dict(kb), indent=2, ensure_ascii=False)
    return (text + "\n").encode("utf-8")
