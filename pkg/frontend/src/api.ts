import type { ScoreResult } from "./types.js";

/** POST the password to /v1/score and validate the response shape.
 * fetchImpl is injectable so tests can fake the network. */
export async function scorePassword(
  baseUrl: string,
  password: string,
  fetchImpl: typeof fetch = fetch,
): Promise<ScoreResult> {
  const resp = await fetchImpl(`${baseUrl}/v1/score`, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify({ password }),
  });
  if (!resp.ok) {
    throw new Error(`service returned ${resp.status}`);
  }
  const body: unknown = await resp.json();
  if (!isScoreResult(body)) {
    throw new Error("malformed response");
  }
  return body;
}

function isScoreResult(body: unknown): body is ScoreResult {
  if (typeof body !== "object" || body === null) return false;
  const r = body as Record<string, unknown>;
  return (
    typeof r.class_name === "string" &&
    ["weak", "medium", "strong"].includes(r.class_name) &&
    typeof r.probabilities === "object" &&
    r.probabilities !== null &&
    Array.isArray(r.issues) &&
    Array.isArray(r.recommendations)
  );
}
