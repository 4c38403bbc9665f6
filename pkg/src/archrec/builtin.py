"""The built-in knowledge base: 12 questions and 21 recommendations.

Encodes the full question/answer/recommendation rule table as data. Question
RPQ12 (database elasticity) outranks RPQ5 (team database expertise) so that
an elasticity requirement overrides missing NoSQL expertise; all other
questions share priority 0.
"""

from __future__ import annotations

from .model import (
    AnswerOption,
    Category,
    ExclusionGroup,
    KnowledgeBase,
    Question,
    Recommendation,
)

_BASS = "Bass, L., Clements, P., Kazman, R.: Software Architecture in Practice, 3rd ed., Addison-Wesley (2012)"

_YES = AnswerOption("yes", "Yes")
_NO = AnswerOption("no", "No")
_DONT_KNOW = AnswerOption("dont_know", "Don't know")


def _yn(contributes_yes: tuple[str, ...]) -> tuple[AnswerOption, ...]:
    """Yes/No/Don't know option triple where only Yes contributes."""
    return (
        AnswerOption("yes", "Yes", contributes_yes),
        _NO,
        _DONT_KNOW,
    )


_QUESTIONS: tuple[Question, ...] = (
    Question(
        id="RPQ1",
        text="What is the software domain?",
        concern="domain",
        priority=0,
        options=(
            AnswerOption("business", "Business", ("layered", "mvc")),
            AnswerOption("academic", "Academic", ("layered",)),
            AnswerOption("hospital", "Hospital", ("layered", "soa")),
            AnswerOption("real_time_game", "Real-time game", ("real_time_agent",)),
            AnswerOption(
                "web_conference",
                "Web Conference / Stream (audio/video)",
                ("p2p",),
            ),
            AnswerOption("other", "Other"),
        ),
    ),
    Question(
        id="RPQ2",
        text="Does this software have the characteristics of a distributed application?",
        concern="distribution",
        priority=0,
        options=_yn(("client_server", "soa")),
    ),
    Question(
        id="RPQ3",
        text=(
            "The number of users that the software must serve, is a known number "
            "or does the system provide resilience and scalability, that is, "
            "capacity to modify the amount of resources provided from varying demand?"
        ),
        concern="scalability",
        priority=0,
        options=(
            _YES,
            AnswerOption("no", "No", ("pubsub", "clusters")),
            _DONT_KNOW,
        ),
    ),
    Question(
        id="RPQ4",
        text=(
            "Does the team that will develop the software already have expertise "
            "in any technology?"
        ),
        concern="technology",
        priority=0,
        options=(
            AnswerOption("php", "PHP", ("laravel",)),
            AnswerOption("c", "C", ("aspnet_mvc",)),
            AnswerOption("java", "Java", ("spring_mvc",)),
            AnswerOption("python", "Python", ("django",)),
            AnswerOption("react_native", "React Native", ("react_native",)),
            AnswerOption("none", "None of these"),
        ),
    ),
    Question(
        id="RPQ5",
        text=(
            "Does the team that will develop the software has expertise in what "
            "type of database?"
        ),
        concern="database expertise",
        priority=5,
        options=(
            AnswerOption("sql", "SQL", ("sql",)),
            AnswerOption("nosql", "NoSQL", ("nosql",)),
            AnswerOption("both", "Both", ("sql", "nosql")),
        ),
    ),
    Question(
        id="RPQ6",
        text="Should the software perform interaction(s) with other software(s)?",
        concern="interoperability",
        priority=0,
        options=_yn(("soa",)),
    ),
    Question(
        id="RPQ7",
        text=(
            "Regarding the data that will be transmitted to another software: do "
            "the data types follow strict typing and validation rules?"
        ),
        concern="data typing",
        priority=0,
        options=(
            AnswerOption("yes", "Yes", ("soap",)),
            AnswerOption("no", "No", ("rest",)),
            _DONT_KNOW,
        ),
    ),
    Question(
        id="RPQ8",
        text=(
            "Regarding availability, if there is temporary unavailability of the "
            "software, can users be at risk, be hurt or have financial or other losses?"
        ),
        concern="availability",
        priority=0,
        options=_yn(("multi_tier", "clusters", "availability")),
    ),
    Question(
        id="RPQ9",
        text=(
            "Regarding the software maintainability, are there prospects for "
            "frequent changes/evolutions in the system?"
        ),
        concern="maintainability",
        priority=0,
        options=_yn(("layered", "mvc")),
    ),
    Question(
        id="RPQ10",
        text=(
            "Regarding the security, will the software store important data of "
            "interest to third parties?"
        ),
        concern="security",
        priority=0,
        options=_yn(("safety",)),
    ),
    Question(
        id="RPQ11",
        text=(
            "Regarding the usability, does the software need user efficiency with "
            "respect to self-learning, minimizing the impact of errors or related?"
        ),
        concern="usability",
        priority=0,
        options=_yn(("usability",)),
    ),
    Question(
        id="RPQ12",
        text=(
            "Is the elasticity of the database, i.e., the ability of software to "
            "scale its storage technology as well as stored data, an important factor?"
        ),
        concern="database elasticity",
        priority=10,
        options=(
            AnswerOption("yes", "Yes", ("nosql",)),
            AnswerOption("no", "No", ("sql",)),
            _DONT_KNOW,
        ),
    ),
)


_RECOMMENDATIONS: tuple[Recommendation, ...] = (
    Recommendation(
        "layered",
        "Layered Pattern",
        Category.STYLE,
        "Organizes the system into stacked groups of modules where each group "
        "offers services only to the one above it, isolating concerns such as "
        "presentation, business logic and persistence and easing substitution "
        "and evolution of individual parts.",
        (_BASS,),
    ),
    Recommendation(
        "mvc",
        "Model-View-Controller Pattern",
        Category.STYLE,
        "Separates domain data, its on-screen presentation and the handling of "
        "user input into three cooperating responsibilities, so interfaces can "
        "change frequently without disturbing business logic.",
        (_BASS,),
    ),
    Recommendation(
        "soa",
        "Service-Oriented Pattern",
        Category.STYLE,
        "Structures functionality as independent, network-reachable services "
        "with published interfaces, enabling heterogeneous systems to "
        "interoperate and be recombined.",
        (_BASS,),
    ),
    Recommendation(
        "client_server",
        "Client-Server Pattern",
        Category.STYLE,
        "Splits the system into providers of resources and the consumers that "
        "request them over a connection, centralizing shared state and "
        "supporting many simultaneous distributed users.",
        (_BASS,),
    ),
    Recommendation(
        "p2p",
        "Peer-to-Peer Pattern",
        Category.STYLE,
        "Connects equally-privileged nodes that both supply and consume data, "
        "suited to media streaming and conferencing workloads where direct "
        "node-to-node exchange reduces central bottlenecks.",
        (_BASS,),
    ),
    Recommendation(
        "pubsub",
        "Publish-Subscribe Pattern",
        Category.STYLE,
        "Decouples producers of events from their consumers through a "
        "notification mechanism, letting the set of communicating components "
        "grow or shrink with demand.",
        (_BASS,),
    ),
    Recommendation(
        "multi_tier",
        "Multi-tier Pattern",
        Category.STYLE,
        "Distributes the system across separate computational tiers, allowing "
        "redundancy and independent scaling of each tier to keep the service "
        "reachable under load or partial failure.",
        (_BASS,),
    ),
    Recommendation(
        "real_time_agent",
        "Real-Time Agent",
        Category.STYLE,
        "Organizes processing around autonomous agents with bounded response "
        "deadlines, fitting interactive simulations and games where timing "
        "guarantees dominate the design.",
        (_BASS,),
    ),
    Recommendation(
        "clusters",
        "Clusters",
        Category.TACTIC,
        "Runs the workload on a group of redundant machines so that the "
        "failure of one node is masked by the others, a redundancy tactic that "
        "raises fault tolerance and sustains throughput.",
        (_BASS,),
    ),
    Recommendation(
        "laravel",
        "Laravel",
        Category.TECHNOLOGY,
        "A PHP web framework with routing, an ORM and templating out of the "
        "box, a productive choice for teams already fluent in PHP.",
        ("https://laravel.com/",),
    ),
    Recommendation(
        "aspnet_mvc",
        "ASP.NET MVC",
        Category.TECHNOLOGY,
        "A Microsoft web framework that structures applications around the "
        "model-view-controller separation on the .NET platform.",
        ("https://dotnet.microsoft.com/apps/aspnet/mvc",),
    ),
    Recommendation(
        "spring_mvc",
        "Spring MVC",
        Category.TECHNOLOGY,
        "A Java web framework built on the Spring container, pairing "
        "dependency injection with a model-view-controller web layer.",
        ("https://spring.io/projects/spring-framework",),
    ),
    Recommendation(
        "django",
        "Django",
        Category.TECHNOLOGY,
        "A Python web framework emphasizing rapid development with a bundled "
        "ORM, admin interface and templating system.",
        ("https://www.djangoproject.com/",),
    ),
    Recommendation(
        "react_native",
        "React-Native",
        Category.TECHNOLOGY,
        "A cross-platform framework for building native mobile interfaces "
        "from a single JavaScript codebase.",
        ("https://reactnative.dev/",),
    ),
    Recommendation(
        "sql",
        "SQL",
        Category.TECHNOLOGY,
        "Relational databases with fixed schemas, transactions and a mature "
        "query language; the default when data integrity and the team's "
        "relational experience matter most.",
        (_BASS,),
    ),
    Recommendation(
        "nosql",
        "NoSQL",
        Category.TECHNOLOGY,
        "Schema-flexible data stores (document, key-value, column, graph) "
        "designed to scale storage horizontally with growing data volume.",
        (_BASS,),
    ),
    Recommendation(
        "soap",
        "SOAP",
        Category.TECHNOLOGY,
        "An XML messaging protocol with formal contracts and strict typing, "
        "appropriate when exchanged data must obey rigorous validation rules.",
        ("https://www.w3.org/TR/soap/",),
    ),
    Recommendation(
        "rest",
        "REST",
        Category.TECHNOLOGY,
        "A resource-oriented integration style over HTTP with lightweight "
        "representations, favored when interoperating systems do not require "
        "strict message typing.",
        ("Fielding, R.: Architectural Styles and the Design of Network-based Software Architectures, PhD thesis (2000)",),
    ),
    Recommendation(
        "availability",
        "Availability",
        Category.QUALITY_ATTRIBUTE,
        "The proportion of time the system is operational and reachable; "
        "prioritize it when downtime can hurt users or cause losses.",
        (_BASS,),
    ),
    Recommendation(
        "safety",
        "Safety",
        Category.QUALITY_ATTRIBUTE,
        "Protection of sensitive stored data and of users against harm from "
        "misuse or exposure of that data.",
        (_BASS,),
    ),
    Recommendation(
        "usability",
        "Usability",
        Category.QUALITY_ATTRIBUTE,
        "Ease of learning and operating the system, including minimizing the "
        "impact of user errors.",
        (_BASS,),
    ),
)


_GROUPS: tuple[ExclusionGroup, ...] = (
    ExclusionGroup(
        id="sql_vs_nosql",
        members=frozenset({"sql", "nosql"}),
        rationale=(
            "A single storage recommendation is wanted: relational expertise "
            "and database elasticity pull in opposite directions, and the "
            "elasticity question outranks the expertise question."
        ),
    ),
)


def builtin_kb() -> KnowledgeBase:
    """Return the built-in knowledge base (fresh instance each call)."""
    return KnowledgeBase(
        id="archrec-builtin",
        version="1.0.0",
        questions=_QUESTIONS,
        recommendations=_RECOMMENDATIONS,
        exclusion_groups=_GROUPS,
    )
