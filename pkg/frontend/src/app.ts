/**
 * Browser entry point: wires the wizard state machine and API client to
 * the DOM. Served by the recommendation service itself via
 * `archrec serve --ui frontend/public` (same origin, no CORS setup).
 */

import { ApiClient } from "./client.js";
import {
  answerCurrent,
  canGoBack,
  canGoNext,
  currentQuestion,
  goBack,
  goNext,
  initWizard,
  isFinished,
  progress,
  selectedOption,
  type WizardState,
} from "./wizard.js";
import { renderProgress, renderQuestion, renderResults } from "./view.js";

export interface AppElements {
  progress: HTMLElement;
  content: HTMLElement;
  backButton: HTMLButtonElement;
  nextButton: HTMLButtonElement;
  reportLink: HTMLAnchorElement;
  status: HTMLElement;
}

export class WizardApp {
  private state: WizardState = initWizard([]);
  private sessionId = "";

  constructor(
    private readonly client: ApiClient,
    private readonly el: AppElements,
  ) {}

  async start(): Promise<void> {
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
      const input = event.target as HTMLInputElement;
      if (input?.name === "answer") this.onSelect(input.value);
    });
    this.render();
  }

  private onSelect(optionId: string): void {
    this.state = answerCurrent(this.state, optionId);
    this.render();
  }

  private onBack(): void {
    this.state = goBack(this.state);
    this.render();
  }

  private async onNext(): Promise<void> {
    const q = currentQuestion(this.state);
    if (!q || !canGoNext(this.state)) return;
    const optionId = this.state.answers[q.id];
    try {
      await this.client.putAnswer(this.sessionId, q.id, optionId);
      this.el.status.textContent = "";
    } catch (err) {
      this.el.status.textContent = `Could not save the answer: ${String(err)}`;
      return;
    }
    this.state = goNext(this.state);
    if (isFinished(this.state)) {
      await this.showResults();
    } else {
      this.render();
    }
  }

  private async showResults(): Promise<void> {
    const body = await this.client.getRecommendations(this.sessionId);
    this.el.progress.innerHTML = renderProgress(1);
    this.el.content.innerHTML = renderResults(body);
    this.el.backButton.disabled = false;
    this.el.nextButton.disabled = true;
    this.el.reportLink.href = this.client.reportUrl(this.sessionId, "html");
    this.el.reportLink.hidden = false;
  }

  private render(): void {
    const q = currentQuestion(this.state);
    this.el.progress.innerHTML = renderProgress(progress(this.state));
    if (q) {
      this.el.content.innerHTML = renderQuestion(
        q,
        this.state.index + 1,
        this.state.questions.length,
        selectedOption(this.state),
      );
    }
    this.el.backButton.disabled = !canGoBack(this.state);
    this.el.nextButton.disabled = !canGoNext(this.state);
    this.el.reportLink.hidden = true;
  }
}

export function bootstrap(doc: Document, client?: ApiClient): WizardApp {
  const byId = <T extends HTMLElement>(id: string): T => {
    const node = doc.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
  };
  const app = new WizardApp(client ?? new ApiClient(), {
    progress: byId("progress"),
    content: byId("content"),
    backButton: byId<HTMLButtonElement>("back"),
    nextButton: byId<HTMLButtonElement>("next"),
    reportLink: byId<HTMLAnchorElement>("report-link"),
    status: byId("status"),
  });
  void app.start().catch((err) => {
    byId("status").textContent = `Failed to load the questionnaire: ${String(err)}`;
  });
  return app;
}

declare global {
  interface Window {
    __ARCHREC_NO_AUTOSTART__?: boolean;
  }
}

if (typeof document !== "undefined" && !globalThis.window?.__ARCHREC_NO_AUTOSTART__) {
  document.addEventListener("DOMContentLoaded", () => bootstrap(document));
}
