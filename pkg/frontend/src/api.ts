/**
 * Thin client for the scoring service's `POST /score` endpoint.
 *
 * The fetch implementation is injectable so tests can drive request races
 * and failures without a network.
 */

import type { ErrorBody, ScoreOptions, ScoreResponse } from "./types.js";

export type FetchLike = (input: string, init: RequestInit) => Promise<Response>;

export type ScoreResult =
  | { ok: true; response: ScoreResponse }
  | { ok: false; errorCode: string; message: string; retryable: boolean };

/**
 * Submit a text pair for scoring.
 *
 * Never throws: transport failures come back as a retryable error result,
 * service errors carry the service's own error code and message.
 */
export async function postScore(
  baseUrl: string,
  reference: string,
  candidate: string,
  options: ScoreOptions | undefined,
  fetchImpl: FetchLike,
): Promise<ScoreResult> {
  const body: Record<string, unknown> = { reference, candidate };
  if (options !== undefined && Object.keys(options).length > 0) {
    body["options"] = options;
  }
  let response: Response;
  try {
    response = await fetchImpl(`${baseUrl}/score`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch (error) {
    return {
      ok: false,
      errorCode: "NETWORK_ERROR",
      message: error instanceof Error ? error.message : String(error),
      retryable: true,
    };
  }
  if (response.ok) {
    const payload = (await response.json()) as ScoreResponse;
    return { ok: true, response: payload };
  }
  let errorCode = `HTTP_${response.status}`;
  let message = response.statusText;
  try {
    const body = (await response.json()) as Partial<ErrorBody>;
    if (typeof body.error_code === "string") {
      errorCode = body.error_code;
    }
    if (typeof body.message === "string") {
      message = body.message;
    }
  } catch {
    // Non-JSON error body; keep the HTTP-level description.
  }
  return {
    ok: false,
    errorCode,
    message,
    // Server-side faults (and an unavailable embedding backend) may clear
    // up on their own; input errors will fail the same way every time.
    retryable: response.status >= 500 || response.status === 503,
  };
}
