/**
 * Round-trip against the real Python service: spawns `archrec serve` on a
 * spare port and drives it with the production ApiClient over real fetch.
 * Skipped when python3 is not on PATH.
 */

import { type ChildProcess, spawn, spawnSync } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/client.js";

const PYTHON = "python3";
const HAVE_PYTHON =
  spawnSync(PYTHON, ["-c", "import archrec"], { timeout: 30_000 }).status === 0;

const PORT = 18320 + (process.pid % 400);
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess | undefined;

async function waitForReady(): Promise<void> {
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    try {
      const res = await fetch(`${BASE}/api/v1/questions`);
      if (res.ok) return;
    } catch {
      // not listening yet
    }
    await new Promise((r) => setTimeout(r, 200));
  }
  throw new Error(`service did not come up on ${BASE}`);
}

describe.skipIf(!HAVE_PYTHON)("live service round-trip", () => {
  beforeAll(async () => {
    server = spawn(
      PYTHON,
      ["-m", "archrec.cli", "serve", "--listen", `127.0.0.1:${PORT}`],
      { stdio: "ignore" },
    );
    await waitForReady();
  }, 40_000);

  afterAll(() => {
    server?.kill();
  });

  it("answers the full questionnaire and reads back recommendations", async () => {
    const client = new ApiClient(BASE);
    const { questions } = await client.getQuestions();
    expect(questions).toHaveLength(12);

    const session = await client.createSession();
    expect(session.status).toBe("in_progress");

    // Pick the first option everywhere; overwrite the conflict pair so the
    // suppression path is exercised (RPQ5 NoSQL loses to RPQ12 No).
    let latest = session;
    for (const q of questions) {
      latest = await client.putAnswer(session.id, q.id, q.options[0].id);
    }
    expect(latest.status).toBe("completed");
    await client.putAnswer(session.id, "RPQ5", "nosql");
    await client.putAnswer(session.id, "RPQ12", "no");

    const body = await client.getRecommendations(session.id);
    expect(body.resolved.technology.map((r) => r.id)).toContain("sql");
    expect(body.suppressions.map((s) => s.recommendation_id)).toContain(
      "nosql",
    );
    expect(body.suppressions[0].winning_question).toBe("RPQ12");

    const report = await client.getReport(session.id, "md");
    expect(report).toContain("# Architecture Recommendations");
    expect(report).toContain("Suppressed Alternatives");
  }, 30_000);

  it("propagates service validation errors", async () => {
    const client = new ApiClient(BASE);
    const session = await client.createSession();
    const err = await client
      .putAnswer(session.id, "RPQ1", "bogus")
      .catch((e) => e);
    expect(err.status).toBe(422);
    const missing = await client.getSession("missing").catch((e) => e);
    expect(missing.status).toBe(404);
  });
});
