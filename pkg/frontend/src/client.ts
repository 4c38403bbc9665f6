/**
 * Thin typed client for the recommendation service REST API.
 *
 * The fetch implementation is injectable so tests can run against a mock
 * without a live server.
 */

import type {
  QuestionsResponse,
  RecommendationsResponse,
  ReportFormat,
  Session,
} from "./types.js";

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: string,
  ) {
    super(`${status}: ${detail}`);
    this.name = "ApiError";
  }
}

async function raiseForStatus(res: Response): Promise<void> {
  if (res.ok) return;
  let detail = res.statusText;
  try {
    const body = await res.json();
    if (typeof body?.detail === "string") detail = body.detail;
  } catch {
    // non-JSON error body: keep the status text
  }
  throw new ApiError(res.status, detail);
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchImpl: FetchLike = (input, init) =>
      fetch(input, init),
  ) {}

  private async get<T>(path: string): Promise<T> {
    const res = await this.fetchImpl(`${this.baseUrl}${path}`);
    await raiseForStatus(res);
    return res.json() as Promise<T>;
  }

  getQuestions(): Promise<QuestionsResponse> {
    return this.get("/api/v1/questions");
  }

  async createSession(): Promise<Session> {
    const res = await this.fetchImpl(`${this.baseUrl}/api/v1/sessions`, {
      method: "POST",
    });
    await raiseForStatus(res);
    return res.json();
  }

  getSession(sessionId: string): Promise<Session> {
    return this.get(`/api/v1/sessions/${sessionId}`);
  }

  async putAnswer(
    sessionId: string,
    questionId: string,
    optionId: string,
  ): Promise<Session> {
    const res = await this.fetchImpl(
      `${this.baseUrl}/api/v1/sessions/${sessionId}/answers/${questionId}`,
      {
        method: "PUT",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ option_id: optionId }),
      },
    );
    await raiseForStatus(res);
    return res.json();
  }

  getRecommendations(sessionId: string): Promise<RecommendationsResponse> {
    return this.get(`/api/v1/sessions/${sessionId}/recommendations`);
  }

  async getReport(sessionId: string, format: ReportFormat): Promise<string> {
    const res = await this.fetchImpl(
      `${this.baseUrl}/api/v1/sessions/${sessionId}/report?format=${format}`,
    );
    await raiseForStatus(res);
    return res.text();
  }

  reportUrl(sessionId: string, format: ReportFormat): string {
    return `${this.baseUrl}/api/v1/sessions/${sessionId}/report?format=${format}`;
  }
}
