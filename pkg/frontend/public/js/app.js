/**
 * Browser entry point: wires the wizard state machine and API client to
 * the DOM. Served by the recommendation service itself via
 * `archrec serve --ui frontend/public` (same origin, no CORS setup).
 */
import { ApiClient } from "./client.js";
import { answerCurrent, canGoBack, canGoNext, currentQuestion, goBack, goNext, initWizard, isFinished, progress, selectedOption, } from "./wizard.js";
import { renderProgress, renderQuestion, renderResults } from "./view.js";
export class WizardApp {
    constructor(client, el) {
        this.client = client;
        this.el = el;
        this.state = initWizard([]);
        this.sessionId = "";
    }
    async start() {
        const [questions, session] = await Promise.all([
            this.client.getQuestions(),
            this.client.createSession(),
        ]);
        this.sessionId = session.id;
        this.state = initWizard(questions.questions, session.answers);
        this.el.backButton.addEventListener("click", () => this.onBack());
        this.el.nextButton.addEventListener("click", () => {
            void this.onNext();
        });
        this.el.content.addEventListener("change", (event) => {
            const input = event.target;
            if (input?.name === "answer")
                this.onSelect(input.value);
        });
        this.render();
    }
    onSelect(optionId) {
        this.state = answerCurrent(this.state, optionId);
        this.render();
    }
    onBack() {
        this.state = goBack(this.state);
        this.render();
    }
    async onNext() {
        const q = currentQuestion(this.state);
        if (!q || !canGoNext(this.state))
            return;
        const optionId = this.state.answers[q.id];
        try {
            await this.client.putAnswer(this.sessionId, q.id, optionId);
            this.el.status.textContent = "";
        }
        catch (err) {
            this.el.status.textContent = `Could not save the answer: ${String(err)}`;
            return;
        }
        this.state = goNext(this.state);
        if (isFinished(this.state)) {
            await this.showResults();
        }
        else {
            this.render();
        }
    }
    async showResults() {
        const body = await this.client.getRecommendations(this.sessionId);
        this.el.progress.innerHTML = renderProgress(1);
        this.el.content.innerHTML = renderResults(body);
        this.el.backButton.disabled = false;
        this.el.nextButton.disabled = true;
        this.el.reportLink.href = this.client.reportUrl(this.sessionId, "html");
        this.el.reportLink.hidden = false;
    }
    render() {
        const q = currentQuestion(this.state);
        this.el.progress.innerHTML = renderProgress(progress(this.state));
        if (q) {
            this.el.content.innerHTML = renderQuestion(q, this.state.index + 1, this.state.questions.length, selectedOption(this.state));
        }
        this.el.backButton.disabled = !canGoBack(this.state);
        this.el.nextButton.disabled = !canGoNext(this.state);
        this.el.reportLink.hidden = true;
    }
}
export function bootstrap(doc, client) {
    const byId = (id) => {
        const node = doc.getElementById(id);
        if (!node)
            throw new Error(`missing element #${id}`);
        return node;
    };
    const app = new WizardApp(client ?? new ApiClient(), {
        progress: byId("progress"),
        content: byId("content"),
        backButton: byId("back"),
        nextButton: byId("next"),
        reportLink: byId("report-link"),
        status: byId("status"),
    });
    void app.start().catch((err) => {
        byId("status").textContent = `Failed to load the questionnaire: ${String(err)}`;
    });
    return app;
}
if (typeof document !== "undefined" && !globalThis.window?.__ARCHREC_NO_AUTOSTART__) {
    document.addEventListener("DOMContentLoaded", () => bootstrap(document));
}
