/**
 * Shared test utilities: the frozen golden response produced by the scoring
 * service (read straight from the scoring package's committed fixture, so
 * both sides of the wire are tested against identical bytes), plus builders
 * for small hand-shaped responses used to exercise display rules.
 */

import { existsSync, readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import type { MatchPayload, ScoreResponse, TokenPayload } from "../src/types.js";

// The DOM test environment rewrites import.meta.url to a non-file URL, so
// locate the scoring package's fixture by walking up from the test runner's
// working directory (the frontend package or the repository root).
export function findRepoFixture(name: string): string {
  let dir = process.cwd();
  for (let depth = 0; depth < 8; depth += 1) {
    const candidate = join(dir, "tests", "fixtures", name);
    if (existsSync(candidate)) {
      return candidate;
    }
    const parent = dirname(dir);
    if (parent === dir) {
      break;
    }
    dir = parent;
  }
  throw new Error(`could not locate tests/fixtures/${name} above ${process.cwd()}`);
}

export const GOLDEN_RESPONSE_PATH = findRepoFixture("golden_score_response.json");

export function loadGoldenResponse(): ScoreResponse {
  return JSON.parse(readFileSync(GOLDEN_RESPONSE_PATH, "utf-8")) as ScoreResponse;
}

export function token(
  surface: string,
  span: [number, number],
  flags: { special?: boolean; subword?: boolean } = {},
): TokenPayload {
  return {
    surface,
    char_span: span,
    is_special: flags.special ?? false,
    is_subword: flags.subword ?? false,
  };
}

export function match(source: number, target: number, score: number): MatchPayload {
  return { source, target, score };
}

/**
 * A minimal structurally-valid response. Scores and matches are display
 * inputs chosen by each test, not engine outputs.
 */
export function makeResponse(overrides: Partial<ScoreResponse> = {}): ScoreResponse {
  return {
    precision: 1.0,
    recall: 1.0,
    f1: 1.0,
    reference_tokens: [
      token("[CLS]", [0, 0], { special: true }),
      token("hello", [0, 5]),
      token("[SEP]", [5, 5], { special: true }),
    ],
    candidate_tokens: [
      token("[CLS]", [0, 0], { special: true }),
      token("hello", [0, 5]),
      token("[SEP]", [5, 5], { special: true }),
    ],
    recall_matches: [match(0, 0, 1.0)],
    precision_matches: [match(0, 0, 1.0)],
    unmatched_reference: [],
    unmatched_candidate: [],
    provider_id: "deterministic_test:dim=8:seed=0:contextual=false",
    engine_version: "0.1.0",
    ...overrides,
  };
}

/** Undirected (reference, candidate) pair set implied by a response. */
export function undirectedPairs(response: ScoreResponse): Set<string> {
  const pairs = new Set<string>();
  for (const m of response.recall_matches) {
    pairs.add(`${m.source}:${m.target}`);
  }
  for (const m of response.precision_matches) {
    pairs.add(`${m.target}:${m.source}`);
  }
  return pairs;
}

/** Number of non-special tokens in a token list. */
export function scoringCount(tokens: TokenPayload[]): number {
  return tokens.filter((t) => !t.is_special).length;
}
