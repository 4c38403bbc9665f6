/**
 * Pure wizard state machine over the questionnaire.
 *
 * Holds the current position and the locally buffered answers; no network
 * or DOM concerns. The app layer syncs each selection to the service and
 * rerenders from the returned state.
 */
export function initWizard(questions, answers = {}) {
    return { questions, index: 0, answers: { ...answers } };
}
export function currentQuestion(state) {
    return state.questions[state.index] ?? null;
}
export function selectedOption(state) {
    const q = currentQuestion(state);
    return q ? (state.answers[q.id] ?? null) : null;
}
/** Record an answer for the current question; unknown option ids are rejected. */
export function answerCurrent(state, optionId) {
    const q = currentQuestion(state);
    if (!q)
        throw new Error("wizard is already finished");
    if (!q.options.some((o) => o.id === optionId)) {
        throw new Error(`question ${q.id} has no option ${optionId}`);
    }
    return { ...state, answers: { ...state.answers, [q.id]: optionId } };
}
export function canGoBack(state) {
    return state.index > 0;
}
export function canGoNext(state) {
    const q = currentQuestion(state);
    return q !== null && q.id in state.answers;
}
export function goBack(state) {
    return canGoBack(state) ? { ...state, index: state.index - 1 } : state;
}
/** Advance past the current question; requires it to be answered. */
export function goNext(state) {
    if (!canGoNext(state))
        return state;
    return { ...state, index: state.index + 1 };
}
export function isFinished(state) {
    return state.index >= state.questions.length;
}
export function answeredCount(state) {
    return state.questions.filter((q) => q.id in state.answers).length;
}
/** Completed fraction in [0, 1] for the progress bar. */
export function progress(state) {
    if (state.questions.length === 0)
        return 1;
    return answeredCount(state) / state.questions.length;
}
