from __future__ import annotations

import random

import pytest

from archrec import builtin_kb
from archrec.engine import AnswerSet, record_answer


@pytest.fixture(scope="session")
def kb():
    return builtin_kb()


def make_answers(kb, entries: dict[str, str]) -> AnswerSet:
    answers = AnswerSet.empty()
    for qid, oid in entries.items():
        answers = record_answer(answers, kb, qid, oid)
    return answers


def random_answer_subset(kb, rng: random.Random) -> dict[str, str]:
    """Random partial assignment: each question answered with prob 1/2."""
    entries = {}
    for q in kb.questions:
        if rng.random() < 0.5:
            entries[q.id] = rng.choice(q.options).id
    return entries


def random_complete_assignment(kb, rng: random.Random) -> dict[str, str]:
    return {q.id: rng.choice(q.options).id for q in kb.questions}
