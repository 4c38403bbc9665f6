"""Knowledge-based recommender for architectural design decisions."""

from .builtin import builtin_kb
from .engine import (
    AnswerSet,
    RecommendationReport,
    build_traceability,
    collect_candidates,
    record_answer,
    recommend,
    resolve_conflicts,
)
from .model import (
    AnswerOption,
    Category,
    ExclusionGroup,
    KBError,
    KnowledgeBase,
    ParseError,
    Question,
    Recommendation,
    SchemaError,
    load_kb,
    save_kb,
)

__all__ = [
    "AnswerOption",
    "AnswerSet",
    "Category",
    "ExclusionGroup",
    "KBError",
    "KnowledgeBase",
    "ParseError",
    "Question",
    "Recommendation",
    "RecommendationReport",
    "SchemaError",
    "build_traceability",
    "builtin_kb",
    "collect_candidates",
    "load_kb",
    "record_answer",
    "recommend",
    "resolve_conflicts",
    "save_kb",
]

__version__ = "0.1.0"
