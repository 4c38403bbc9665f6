/**
 * Thin typed client for the recommendation service REST API.
 *
 * The fetch implementation is injectable so tests can run against a mock
 * without a live server.
 */
export class ApiError extends Error {
    constructor(status, detail) {
        super(`${status}: ${detail}`);
        this.status = status;
        this.detail = detail;
        this.name = "ApiError";
    }
}
async function raiseForStatus(res) {
    if (res.ok)
        return;
    let detail = res.statusText;
    try {
        const body = await res.json();
        if (typeof body?.detail === "string")
            detail = body.detail;
    }
    catch {
        // non-JSON error body: keep the status text
    }
    throw new ApiError(res.status, detail);
}
export class ApiClient {
    constructor(baseUrl = "", fetchImpl = (input, init) => fetch(input, init)) {
        this.baseUrl = baseUrl;
        this.fetchImpl = fetchImpl;
    }
    async get(path) {
        const res = await this.fetchImpl(`${this.baseUrl}${path}`);
        await raiseForStatus(res);
        return res.json();
    }
    getQuestions() {
        return this.get("/api/v1/questions");
    }
    async createSession() {
        const res = await this.fetchImpl(`${this.baseUrl}/api/v1/sessions`, {
            method: "POST",
        });
        await raiseForStatus(res);
        return res.json();
    }
    getSession(sessionId) {
        return this.get(`/api/v1/sessions/${sessionId}`);
    }
    async putAnswer(sessionId, questionId, optionId) {
        const res = await this.fetchImpl(`${this.baseUrl}/api/v1/sessions/${sessionId}/answers/${questionId}`, {
            method: "PUT",
            headers: { "Content-Type": "application/json" },
            body: JSON.stringify({ option_id: optionId }),
        });
        await raiseForStatus(res);
        return res.json();
    }
    getRecommendations(sessionId) {
        return this.get(`/api/v1/sessions/${sessionId}/recommendations`);
    }
    async getReport(sessionId, format) {
        const res = await this.fetchImpl(`${this.baseUrl}/api/v1/sessions/${sessionId}/report?format=${format}`);
        await raiseForStatus(res);
        return res.text();
    }
    reportUrl(sessionId, format) {
        return `${this.baseUrl}/api/v1/sessions/${sessionId}/report?format=${format}`;
    }
}
