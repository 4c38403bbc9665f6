"""Pure renderers for recommendation reports: Markdown, HTML, Graphviz DOT.

All three are deterministic functions of (report, kb, options); timestamps
are injected by the caller so output is byte-stable and golden-testable.
The HTML document is self-contained (inline styles, print media rules) and
is the intended print-to-PDF vehicle.
"""

from __future__ import annotations

import html
from dataclasses import dataclass

from .model import Category, KnowledgeBase
from .engine import RecommendationReport, ResolvedRecommendation, SuppressionRecord

# Rendered section order differs from the engine's grouping order on purpose:
# quality attributes lead the document, then the decisions that serve them.
_SECTION_ORDER = (
    Category.QUALITY_ATTRIBUTE,
    Category.STYLE,
    Category.TACTIC,
    Category.TECHNOLOGY,
)

_SECTION_TITLES = {
    Category.QUALITY_ATTRIBUTE: "Quality Attributes",
    Category.STYLE: "Architectural Styles",
    Category.TACTIC: "Architectural Tactics",
    Category.TECHNOLOGY: "Technologies",
}


@dataclass(frozen=True)
class RenderOptions:
    title: str = "Architecture Recommendations"
    timestamp: str = ""  # ISO-8601, supplied by the caller; renderers read no clock
    include_suppressions: bool = True
    include_matrix: bool = True
    include_graph: bool = False


def _source_label(kb: KnowledgeBase, qid: str, oid: str) -> str:
    return f"{qid}={kb.question(qid).option(oid).label}"


def _suppression_line(kb: KnowledgeBase, s: SuppressionRecord) -> str:
    name = kb.recommendation(s.recommendation_id).name
    sources = ", ".join(_source_label(kb, q, o) for q, o in s.suppressed_sources)
    rationale = next(
        g.rationale for g in kb.exclusion_groups if g.id == s.group
    )
    return (
        f"**{name}**: contributed by {sources}; overruled by {s.winning_question} "
        f"(group {s.group}). {rationale}"
    )


def render_markdown(
    report: RecommendationReport, kb: KnowledgeBase, opts: RenderOptions
) -> str:
    grouped = report.by_category()
    lines: list[str] = [
        f"# {opts.title}",
        "",
        f"- Knowledge base: {report.kb_id} {report.kb_version}",
        f"- Generated: {opts.timestamp}",
        "",
    ]
    for category in _SECTION_ORDER:
        lines.append(f"## {_SECTION_TITLES[category]}")
        lines.append("")
        items = grouped[category]
        if not items:
            lines.append("No recommendations.")
            lines.append("")
            continue
        for rr in items:
            rec = rr.recommendation
            sources = ", ".join(
                _source_label(kb, q, o) for q, o in rr.sources
            )
            lines.append(f"- **{rec.name}**: {rec.description} (from {sources})")
            for ref in rec.references:
                lines.append(f"  - Reference: {ref}")
        lines.append("")

    if opts.include_suppressions and report.suppressions:
        lines.append("## Suppressed Alternatives")
        lines.append("")
        for s in report.suppressions:
            lines.append(f"- {_suppression_line(kb, s)}")
        lines.append("")

    if report.ties:
        lines.append("## Unresolved Trade-offs")
        lines.append("")
        for gid in report.ties:
            group = next(g for g in kb.exclusion_groups if g.id == gid)
            members = ", ".join(
                kb.recommendation(m).name for m in sorted(group.members)
            )
            lines.append(
                f"- Group {gid} is tied at equal priority ({members}); "
                "the trade-off is left to the reader."
            )
        lines.append("")

    if opts.include_matrix:
        lines.append("## Traceability Matrix")
        lines.append("")
        columns = report.matrix.columns
        lines.append("| Recommendation | " + " | ".join(columns) + " |")
        lines.append("|---" * (len(columns) + 1) + "|")
        for rid in report.matrix.rows:
            cells = []
            for qid in columns:
                oid = report.matrix.cells.get((rid, qid))
                cells.append(kb.question(qid).option(oid).label if oid else "")
            lines.append(f"| {rid} | " + " | ".join(cells) + " |")
        lines.append("")

    if opts.include_graph:
        lines.append("## Answer Graph (DOT)")
        lines.append("")
        lines.append("```dot")
        lines.append(render_dot(report, kb).rstrip("\n"))
        lines.append("```")
        lines.append("")

    return "\n".join(lines)


_HTML_STYLE = """\
body { font-family: Georgia, serif; margin: 2rem auto; max-width: 52rem;
       line-height: 1.5; color: #1a1a1a; }
h1 { border-bottom: 2px solid #444; padding-bottom: .3rem; }
h2 { margin-top: 1.6rem; color: #2a4365; }
ul.items li { margin-bottom: .6rem; }
table { border-collapse: collapse; font-size: .85rem; }
th, td { border: 1px solid #999; padding: .2rem .45rem; text-align: left; }
.meta { color: #555; font-size: .9rem; }
.empty { color: #777; font-style: italic; }
@media print {
  body { margin: 0; max-width: none; font-size: 11pt; }
  h2 { break-after: avoid; }
  table { break-inside: avoid; }
}
"""


def render_html(
    report: RecommendationReport, kb: KnowledgeBase, opts: RenderOptions
) -> str:
    e = html.escape
    grouped = report.by_category()
    parts: list[str] = [
        "<!DOCTYPE html>",
        '<html lang="en">',
        "<head>",
        '<meta charset="utf-8">',
        f"<title>{e(opts.title)}</title>",
        f"<style>\n{_HTML_STYLE}</style>",
        "</head>",
        "<body>",
        f"<h1>{e(opts.title)}</h1>",
        f'<p class="meta">Knowledge base: {e(report.kb_id)} '
        f"{e(report.kb_version)} &middot; Generated: {e(opts.timestamp)}</p>",
    ]

    def item_html(rr: ResolvedRecommendation) -> str:
        rec = rr.recommendation
        sources = ", ".join(_source_label(kb, q, o) for q, o in rr.sources)
        refs = "".join(
            f'<li class="meta">{e(ref)}</li>' for ref in rec.references
        )
        ref_list = f"<ul>{refs}</ul>" if refs else ""
        return (
            f"<li><strong>{e(rec.name)}</strong>: {e(rec.description)} "
            f'<span class="meta">(from {e(sources)})</span>{ref_list}</li>'
        )

    for category in _SECTION_ORDER:
        parts.append(f"<h2>{_SECTION_TITLES[category]}</h2>")
        items = grouped[category]
        if not items:
            parts.append('<p class="empty">No recommendations.</p>')
            continue
        parts.append('<ul class="items">')
        parts.extend(item_html(rr) for rr in items)
        parts.append("</ul>")

    if opts.include_suppressions and report.suppressions:
        parts.append("<h2>Suppressed Alternatives</h2>")
        parts.append('<ul class="items">')
        for s in report.suppressions:
            name = kb.recommendation(s.recommendation_id).name
            sources = ", ".join(
                _source_label(kb, q, o) for q, o in s.suppressed_sources
            )
            rationale = next(
                g.rationale for g in kb.exclusion_groups if g.id == s.group
            )
            parts.append(
                f"<li><strong>{e(name)}</strong>: contributed by {e(sources)}; "
                f"overruled by {e(s.winning_question)} (group {e(s.group)}). "
                f"{e(rationale)}</li>"
            )
        parts.append("</ul>")

    if report.ties:
        parts.append("<h2>Unresolved Trade-offs</h2>")
        parts.append('<ul class="items">')
        for gid in report.ties:
            group = next(g for g in kb.exclusion_groups if g.id == gid)
            members = ", ".join(
                kb.recommendation(m).name for m in sorted(group.members)
            )
            parts.append(
                f"<li>Group {e(gid)} is tied at equal priority ({e(members)}); "
                "the trade-off is left to the reader.</li>"
            )
        parts.append("</ul>")

    if opts.include_matrix:
        parts.append("<h2>Traceability Matrix</h2>")
        columns = report.matrix.columns
        parts.append("<table>")
        parts.append(
            "<tr><th>Recommendation</th>"
            + "".join(f"<th>{e(q)}</th>" for q in columns)
            + "</tr>"
        )
        for rid in report.matrix.rows:
            row = [f"<tr><td>{e(rid)}</td>"]
            for qid in columns:
                oid = report.matrix.cells.get((rid, qid))
                label = kb.question(qid).option(oid).label if oid else ""
                row.append(f"<td>{e(label)}</td>")
            row.append("</tr>")
            parts.append("".join(row))
        parts.append("</table>")

    parts.append("</body>")
    parts.append("</html>")
    return "\n".join(parts) + "\n"


def _dot_quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def render_dot(report: RecommendationReport, kb: KnowledgeBase) -> str:
    """Bipartite answer -> recommendation digraph; empty report gives an
    empty digraph."""
    q_order = {q.id: i for i, q in enumerate(kb.questions)}
    rec_order = {rid: i for i, rid in enumerate(report.matrix.rows)}

    # (question order, answer label, rec order, rec name)
    edges: list[tuple[int, str, int, str]] = []
    answer_nodes: dict[str, int] = {}  # label -> question order
    for rr in report.resolved:
        for qid, oid in rr.sources:
            label = _source_label(kb, qid, oid)
            answer_nodes.setdefault(label, q_order[qid])
            edges.append(
                (q_order[qid], label, rec_order[rr.recommendation.id],
                 rr.recommendation.name)
            )

    lines = ["digraph recommendations {", "  rankdir=LR;", "  node [shape=box];"]
    if answer_nodes:
        lines.append("  { rank=same;")
        for label in sorted(answer_nodes, key=lambda x: (answer_nodes[x], x)):
            lines.append(f"    {_dot_quote(label)};")
        lines.append("  }")
        lines.append("  { rank=same;")
        for rr in report.resolved:
            lines.append(f"    {_dot_quote(rr.recommendation.name)};")
        lines.append("  }")
        for _, src, _, dst in sorted(edges):
            lines.append(f"  {_dot_quote(src)} -> {_dot_quote(dst)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
