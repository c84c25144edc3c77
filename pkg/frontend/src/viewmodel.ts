/**
 * Pure scene construction for the match visualizer.
 *
 * Everything here is a deterministic function of (response, hover,
 * showSpecials). The DOM layer only projects the resulting scene; all
 * display rules — edge deduplication, hover focus, red boxes, popup
 * colors — live here where they can be tested without a browser.
 */

import type { Hover, MatchPayload, ScoreResponse, Side, TokenPayload } from "./types.js";

/** Quality color cutoffs: >= green is green, >= amber is amber, else red. */
export interface QualityThresholds {
  green: number;
  amber: number;
}

/** Default cutoffs used by the app; callers may supply their own. */
export const QUALITY_THRESHOLDS: QualityThresholds = { green: 0.9, amber: 0.7 };

export type QualityColor = "green" | "amber" | "red";

/** Map a similarity score to its popup color. */
export function qualityColor(
  score: number,
  thresholds: QualityThresholds = QUALITY_THRESHOLDS,
): QualityColor {
  if (score >= thresholds.green) {
    return "green";
  }
  if (score >= thresholds.amber) {
    return "amber";
  }
  return "red";
}

/** Render a score the way the UI shows all scores: two decimals. */
export function formatScore(score: number): string {
  return score.toFixed(2);
}

/** One token box in a row. */
export interface SceneToken {
  /** Display text; continuation pieces keep their "##" prefix. */
  label: string;
  /** Index among non-special tokens on this side, or -1 for markers. */
  scoringIndex: number;
  isSpecial: boolean;
  /** True when this token was never selected as a best match (red box). */
  unmatched: boolean;
  hovered: boolean;
}

export type EdgeKind = "recall" | "precision";

/** One undirected line between a reference token and a candidate token. */
export interface SceneEdge {
  /** Scoring index of the reference-side endpoint. */
  ref: number;
  /** Scoring index of the candidate-side endpoint. */
  cand: number;
  /** Directions that produced this line; coincident pairs collapse to one. */
  kinds: EdgeKind[];
  /** Similarity carried by the line (both directions share the same value). */
  score: number;
  /** False while a hover de-emphasizes this (non-incident) edge. */
  emphasized: boolean;
}

/** Score bubble shown next to the hovered token. */
export interface Popup {
  side: Side;
  index: number;
  text: string;
  color: QualityColor;
}

/** Everything the DOM layer needs to draw one frame. */
export interface Scene {
  refTokens: SceneToken[];
  candTokens: SceneToken[];
  edges: SceneEdge[];
  summary: { precision: string; recall: string; f1: string };
  popup: Popup | null;
}

/**
 * Best-match score for a scoring token: reference tokens own one recall
 * match, candidate tokens own one precision match. Returns null when the
 * response carries no entry for that index (it never should).
 */
export function hoverScore(response: ScoreResponse, side: Side, index: number): number | null {
  const matches: MatchPayload[] =
    side === "reference" ? response.recall_matches : response.precision_matches;
  const entry = matches.find((m) => m.source === index);
  return entry === undefined ? null : entry.score;
}

function buildTokenRow(
  tokens: TokenPayload[],
  unmatched: readonly number[],
  side: Side,
  hover: Hover | null,
  showSpecials: boolean,
): SceneToken[] {
  const unmatchedSet = new Set(unmatched);
  const row: SceneToken[] = [];
  let scoringIndex = 0;
  for (const token of tokens) {
    if (token.is_special) {
      if (showSpecials) {
        row.push({
          label: token.surface,
          scoringIndex: -1,
          isSpecial: true,
          unmatched: false,
          hovered: false,
        });
      }
      continue;
    }
    const index = scoringIndex;
    scoringIndex += 1;
    row.push({
      label: token.surface,
      scoringIndex: index,
      isSpecial: false,
      unmatched: unmatchedSet.has(index),
      hovered: hover !== null && hover.side === side && hover.index === index,
    });
  }
  return row;
}

function buildEdges(response: ScoreResponse, hover: Hover | null): SceneEdge[] {
  // Undirected dedup: a recall line ref->cand and a precision line
  // cand->ref between the same pair collapse into one edge with both kinds.
  const byPair = new Map<string, SceneEdge>();
  const add = (ref: number, cand: number, kind: EdgeKind, score: number): void => {
    const key = `${ref}:${cand}`;
    const existing = byPair.get(key);
    if (existing === undefined) {
      byPair.set(key, { ref, cand, kinds: [kind], score, emphasized: true });
    } else if (!existing.kinds.includes(kind)) {
      existing.kinds.push(kind);
    }
  };
  for (const m of response.recall_matches) {
    add(m.source, m.target, "recall", m.score);
  }
  for (const m of response.precision_matches) {
    add(m.target, m.source, "precision", m.score);
  }
  const edges = [...byPair.values()];
  if (hover !== null) {
    for (const edge of edges) {
      edge.emphasized =
        hover.side === "reference" ? edge.ref === hover.index : edge.cand === hover.index;
    }
  }
  return edges;
}

function buildPopup(
  response: ScoreResponse,
  hover: Hover | null,
  thresholds: QualityThresholds,
): Popup | null {
  if (hover === null) {
    return null;
  }
  const score = hoverScore(response, hover.side, hover.index);
  if (score === null) {
    return null;
  }
  return {
    side: hover.side,
    index: hover.index,
    text: formatScore(score),
    color: qualityColor(score, thresholds),
  };
}

/** Build the complete scene for one response + interaction state. */
export function buildScene(
  response: ScoreResponse,
  hover: Hover | null = null,
  showSpecials = false,
  thresholds: QualityThresholds = QUALITY_THRESHOLDS,
): Scene {
  return {
    refTokens: buildTokenRow(
      response.reference_tokens,
      response.unmatched_reference,
      "reference",
      hover,
      showSpecials,
    ),
    candTokens: buildTokenRow(
      response.candidate_tokens,
      response.unmatched_candidate,
      "candidate",
      hover,
      showSpecials,
    ),
    edges: buildEdges(response, hover),
    summary: {
      precision: formatScore(response.precision),
      recall: formatScore(response.recall),
      f1: formatScore(response.f1),
    },
    popup: buildPopup(response, hover, thresholds),
  };
}
