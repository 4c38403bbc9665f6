/**
 * HTML fragment builders for the wizard app.
 *
 * Kept as pure string functions so they can be unit tested without a
 * browser; app.ts injects them into the page and attaches handlers.
 */

import type {
  Question,
  RecommendationsResponse,
  ResolvedItem,
  Suppression,
} from "./types.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

const SECTION_TITLES: Array<[string, string]> = [
  ["quality_attribute", "Quality Attributes"],
  ["style", "Architecture Styles"],
  ["tactic", "Tactics"],
  ["technology", "Technologies"],
];

export function renderQuestion(
  question: Question,
  position: number,
  total: number,
  selected: string | null,
): string {
  const options = question.options
    .map((o) => {
      const checked = o.id === selected ? " checked" : "";
      return (
        `<label class="option"><input type="radio" name="answer" ` +
        `value="${escapeHtml(o.id)}"${checked}> ` +
        `${escapeHtml(o.label)}</label>`
      );
    })
    .join("\n");
  return `<div class="question" data-question-id="${escapeHtml(question.id)}">
  <p class="counter">Question ${position} of ${total}</p>
  <h2>${escapeHtml(question.text)}</h2>
  <p class="concern">Concern: ${escapeHtml(question.concern)}</p>
  <form class="options">
${options}
  </form>
</div>`;
}

export function renderProgress(fraction: number): string {
  const pct = Math.round(fraction * 100);
  return (
    `<div class="progress" role="progressbar" aria-valuenow="${pct}" ` +
    `aria-valuemin="0" aria-valuemax="100">` +
    `<div class="bar" style="width: ${pct}%"></div></div>`
  );
}

function renderItem(item: ResolvedItem, answers: Record<string, string>): string {
  const sources = item.sources
    .map((s) => `${s.question_id}=${answers[s.question_id] ?? s.option_id}`)
    .join(", ");
  const refs = item.references.length
    ? `<p class="refs">References: ${item.references
        .map((r) => escapeHtml(r))
        .join("; ")}</p>`
    : "";
  return `<li class="recommendation" data-rec-id="${escapeHtml(item.id)}">
  <strong>${escapeHtml(item.name)}</strong>: ${escapeHtml(item.description)}
  <p class="sources">Derived from: ${escapeHtml(sources)}</p>
  ${refs}
</li>`;
}

function renderSuppression(s: Suppression): string {
  return (
    `<li data-rec-id="${escapeHtml(s.recommendation_id)}">` +
    `${escapeHtml(s.recommendation_id)} was set aside because ` +
    `${escapeHtml(s.winning_question)} carries more weight ` +
    `(group ${escapeHtml(s.group)})</li>`
  );
}

export function renderResults(body: RecommendationsResponse): string {
  const sections = SECTION_TITLES.map(([key, title]) => {
    const items = body.resolved[key] ?? [];
    const list = items.length
      ? `<ul>\n${items.map((i) => renderItem(i, body.answers)).join("\n")}\n</ul>`
      : `<p class="empty">No recommendations.</p>`;
    return `<section class="category" data-category="${key}">
<h2>${title}</h2>
${list}
</section>`;
  }).join("\n");

  const suppressed = body.suppressions.length
    ? `<section class="suppressions">
<h2>Suppressed Alternatives</h2>
<ul>
${body.suppressions.map(renderSuppression).join("\n")}
</ul>
</section>`
    : "";

  const ties = body.ties.length
    ? `<section class="ties">
<h2>Unresolved Trade-offs</h2>
<p>Equally strong alternatives remain in: ${body.ties
        .map((t) => escapeHtml(t))
        .join(", ")}. Review them manually.</p>
</section>`
    : "";

  return `<div class="results">\n${sections}\n${suppressed}\n${ties}\n</div>`;
}
