from __future__ import annotations

from archrec.model import Category, load_kb, save_kb, validate_kb

from table2_oracle import CONTRIBUTION_ROWS, NEUTRAL_ROWS


def test_twelve_questions_in_order(kb):
    assert [q.id for q in kb.questions] == [f"RPQ{i}" for i in range(1, 13)]


def test_valid_and_round_trips(kb):
    validate_kb(kb)
    assert load_kb(save_kb(kb)) == kb


def test_question_texts(kb):
    assert kb.question("RPQ1").text == "What is the software domain?"
    assert kb.question("RPQ12").text.startswith("Is the elasticity of the database")


def test_priorities(kb):
    assert kb.question("RPQ12").priority == 10
    assert kb.question("RPQ5").priority == 5
    for q in kb.questions:
        if q.id not in ("RPQ5", "RPQ12"):
            assert q.priority == 0


def test_priority_relation_rpq12_over_rpq5(kb):
    assert kb.question("RPQ12").priority > kb.question("RPQ5").priority


def test_option_counts(kb):
    counts = {q.id: len(q.options) for q in kb.questions}
    assert counts["RPQ1"] == 6
    assert counts["RPQ4"] == 6
    for qid, n in counts.items():
        if qid not in ("RPQ1", "RPQ4"):
            assert n == 3, qid


def test_contribution_table_matches_oracle(kb):
    """Every non-empty rule row matches the independent transcription exactly."""
    for (qid, label), expected in CONTRIBUTION_ROWS.items():
        option = next(o for o in kb.question(qid).options if o.label == label)
        actual = {
            kb.recommendation(rid).name: kb.recommendation(rid).category.value
            for rid in option.contributes
        }
        assert actual == expected, (qid, label)


def test_neutral_rows_contribute_nothing(kb):
    for qid, label in NEUTRAL_ROWS:
        option = next(o for o in kb.question(qid).options if o.label == label)
        assert option.contributes == (), (qid, label)


def test_every_option_is_in_the_oracle(kb):
    covered = {key for key in CONTRIBUTION_ROWS} | set(NEUTRAL_ROWS)
    all_pairs = {(q.id, o.label) for q in kb.questions for o in q.options}
    assert all_pairs == covered


def test_referential_closure(kb):
    rec_ids = set(kb.recommendations_by_id)
    for q in kb.questions:
        for o in q.options:
            assert set(o.contributes) <= rec_ids


def test_category_assignments(kb):
    by_cat = {}
    for rec in kb.recommendations:
        by_cat.setdefault(rec.category, set()).add(rec.name)
    assert by_cat[Category.STYLE] == {
        "Layered Pattern",
        "Model-View-Controller Pattern",
        "Service-Oriented Pattern",
        "Client-Server Pattern",
        "Peer-to-Peer Pattern",
        "Publish-Subscribe Pattern",
        "Multi-tier Pattern",
        "Real-Time Agent",
    }
    assert by_cat[Category.TACTIC] == {"Clusters"}
    assert by_cat[Category.TECHNOLOGY] == {
        "Laravel",
        "ASP.NET MVC",
        "Spring MVC",
        "Django",
        "React-Native",
        "SQL",
        "NoSQL",
        "SOAP",
        "REST",
    }
    assert by_cat[Category.QUALITY_ATTRIBUTE] == {
        "Availability",
        "Safety",
        "Usability",
    }


def test_exclusion_group_is_sql_vs_nosql(kb):
    assert len(kb.exclusion_groups) == 1
    group = kb.exclusion_groups[0]
    assert {kb.recommendation(m).name for m in group.members} == {"SQL", "NoSQL"}


def test_descriptions_and_references_present(kb):
    for rec in kb.recommendations:
        assert rec.description
        assert rec.references
