/**
 * Wire types for the v1 scoring API.
 *
 * These mirror the JSON payloads exchanged with the scoring service's
 * `POST /score` endpoint. The visualizer depends on nothing else from the
 * scoring side — it is a pure consumer of this schema.
 */

/** One tokenized piece of an input text. */
export interface TokenPayload {
  /** Token text as tokenized; continuation pieces keep their "##" prefix. */
  surface: string;
  /** Half-open byte span into the normalized input text. */
  char_span: [number, number];
  /** True for boundary markers, which never participate in scoring. */
  is_special: boolean;
  /** True for continuation pieces of a split word. */
  is_subword: boolean;
}

/**
 * One greedy best-match assignment.
 *
 * `source` and `target` index into the *scoring* token lists (special
 * markers excluded): recall matches go reference → candidate, precision
 * matches go candidate → reference.
 */
export interface MatchPayload {
  source: number;
  target: number;
  score: number;
}

/** Successful response from `POST /score`. */
export interface ScoreResponse {
  precision: number;
  recall: number;
  f1: number;
  reference_tokens: TokenPayload[];
  candidate_tokens: TokenPayload[];
  recall_matches: MatchPayload[];
  precision_matches: MatchPayload[];
  unmatched_reference: number[];
  unmatched_candidate: number[];
  provider_id: string;
  engine_version: string;
}

/** Error envelope returned by the service for non-2xx responses. */
export interface ErrorBody {
  error_code: string;
  message: string;
}

/** Which token row a UI interaction refers to. */
export type Side = "reference" | "candidate";

/** A hovered scoring token: `index` counts non-special tokens only. */
export interface Hover {
  side: Side;
  index: number;
}

/** Optional scoring knobs forwarded verbatim to the service. */
export interface ScoreOptions {
  truncate?: boolean;
  contextual?: boolean;
  seed?: number;
  provider?: string;
}
