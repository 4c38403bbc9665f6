import { describe, expect, it, vi } from "vitest";

import { ApiClient, ApiError, type FetchLike } from "../src/client.js";

function jsonResponse(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "Content-Type": "application/json" },
  });
}

describe("ApiClient", () => {
  it("fetches the questionnaire from the right path", async () => {
    const fetchImpl = vi.fn<FetchLike>(async () =>
      jsonResponse({ kb_id: "kb", kb_version: "1", questions: [] }),
    );
    const client = new ApiClient("http://svc", fetchImpl);
    const doc = await client.getQuestions();
    expect(doc.kb_id).toBe("kb");
    expect(fetchImpl.mock.calls[0][0]).toBe("http://svc/api/v1/questions");
  });

  it("creates sessions with POST", async () => {
    const fetchImpl = vi.fn<FetchLike>(async () =>
      jsonResponse({ id: "abc", answers: {} }, 201),
    );
    const client = new ApiClient("", fetchImpl);
    const session = await client.createSession();
    expect(session.id).toBe("abc");
    const [url, init] = fetchImpl.mock.calls[0];
    expect(url).toBe("/api/v1/sessions");
    expect(init?.method).toBe("POST");
  });

  it("sends answers as a JSON body with PUT", async () => {
    const fetchImpl = vi.fn<FetchLike>(async () =>
      jsonResponse({ id: "abc", answers: { RPQ1: "hospital" } }),
    );
    const client = new ApiClient("", fetchImpl);
    await client.putAnswer("abc", "RPQ1", "hospital");
    const [url, init] = fetchImpl.mock.calls[0];
    expect(url).toBe("/api/v1/sessions/abc/answers/RPQ1");
    expect(init?.method).toBe("PUT");
    expect(JSON.parse(init?.body as string)).toEqual({
      option_id: "hospital",
    });
  });

  it("surfaces the service's detail message on errors", async () => {
    const fetchImpl: FetchLike = async () =>
      jsonResponse({ detail: "unknown session 'x'" }, 404);
    const client = new ApiClient("", fetchImpl);
    const err = await client.getSession("x").catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.status).toBe(404);
    expect(err.detail).toContain("unknown session");
  });

  it("falls back to status text when the error body is not JSON", async () => {
    const fetchImpl: FetchLike = async () =>
      new Response("boom", { status: 500, statusText: "Internal Server Error" });
    const client = new ApiClient("", fetchImpl);
    const err = await client.getQuestions().catch((e) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect(err.detail).toBe("Internal Server Error");
  });

  it("returns report text verbatim", async () => {
    const fetchImpl = vi.fn<FetchLike>(
      async () => new Response("# Architecture Recommendations\n"),
    );
    const client = new ApiClient("", fetchImpl);
    const text = await client.getReport("abc", "md");
    expect(text).toBe("# Architecture Recommendations\n");
    expect(fetchImpl.mock.calls[0][0]).toBe(
      "/api/v1/sessions/abc/report?format=md",
    );
  });

  it("builds report links relative to its base URL", () => {
    const client = new ApiClient("http://svc");
    expect(client.reportUrl("abc", "html")).toBe(
      "http://svc/api/v1/sessions/abc/report?format=html",
    );
  });
});
