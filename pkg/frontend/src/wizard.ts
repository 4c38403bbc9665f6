/**
 * Pure wizard state machine over the questionnaire.
 *
 * Holds the current position and the locally buffered answers; no network
 * or DOM concerns. The app layer syncs each selection to the service and
 * rerenders from the returned state.
 */

import type { Question } from "./types.js";

export interface WizardState {
  questions: Question[];
  index: number;
  answers: Record<string, string>;
}

export function initWizard(
  questions: Question[],
  answers: Record<string, string> = {},
): WizardState {
  return { questions, index: 0, answers: { ...answers } };
}

export function currentQuestion(state: WizardState): Question | null {
  return state.questions[state.index] ?? null;
}

export function selectedOption(state: WizardState): string | null {
  const q = currentQuestion(state);
  return q ? (state.answers[q.id] ?? null) : null;
}

/** Record an answer for the current question; unknown option ids are rejected. */
export function answerCurrent(
  state: WizardState,
  optionId: string,
): WizardState {
  const q = currentQuestion(state);
  if (!q) throw new Error("wizard is already finished");
  if (!q.options.some((o) => o.id === optionId)) {
    throw new Error(`question ${q.id} has no option ${optionId}`);
  }
  return { ...state, answers: { ...state.answers, [q.id]: optionId } };
}

export function canGoBack(state: WizardState): boolean {
  return state.index > 0;
}

export function canGoNext(state: WizardState): boolean {
  const q = currentQuestion(state);
  return q !== null && q.id in state.answers;
}

export function goBack(state: WizardState): WizardState {
  return canGoBack(state) ? { ...state, index: state.index - 1 } : state;
}

/** Advance past the current question; requires it to be answered. */
export function goNext(state: WizardState): WizardState {
  if (!canGoNext(state)) return state;
  return { ...state, index: state.index + 1 };
}

export function isFinished(state: WizardState): boolean {
  return state.index >= state.questions.length;
}

export function answeredCount(state: WizardState): number {
  return state.questions.filter((q) => q.id in state.answers).length;
}

/** Completed fraction in [0, 1] for the progress bar. */
export function progress(state: WizardState): number {
  if (state.questions.length === 0) return 1;
  return answeredCount(state) / state.questions.length;
}
