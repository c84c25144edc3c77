/**
 * DOM projection of a Scene.
 *
 * This layer is deliberately thin: it creates elements, assigns classes and
 * data attributes that mirror scene flags one-to-one, and wires hover
 * callbacks. All decisions about *what* to show are made in the view model.
 */

import type { Scene, SceneEdge, SceneToken } from "./viewmodel.js";
import type { Side } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface RenderHandlers {
  onHover(side: Side, index: number): void;
  onUnhover(): void;
}

function renderToken(
  doc: Document,
  token: SceneToken,
  side: Side,
  handlers: RenderHandlers,
): HTMLElement {
  const el = doc.createElement("span");
  el.classList.add("token");
  if (token.isSpecial) {
    el.classList.add("token-special");
  }
  if (token.unmatched) {
    el.classList.add("token-unmatched");
  }
  if (token.hovered) {
    el.classList.add("token-hovered");
  }
  el.dataset["side"] = side;
  el.dataset["index"] = String(token.scoringIndex);
  el.textContent = token.label;
  if (!token.isSpecial) {
    el.addEventListener("mouseenter", () => handlers.onHover(side, token.scoringIndex));
    el.addEventListener("mouseleave", () => handlers.onUnhover());
  }
  return el;
}

function renderRow(
  doc: Document,
  tokens: SceneToken[],
  side: Side,
  handlers: RenderHandlers,
): HTMLElement {
  const row = doc.createElement("div");
  row.classList.add("row", `row-${side}`);
  for (const token of tokens) {
    row.appendChild(renderToken(doc, token, side, handlers));
  }
  return row;
}

function renderEdge(doc: Document, edge: SceneEdge): SVGLineElement {
  const line = doc.createElementNS(SVG_NS, "line") as SVGLineElement;
  line.classList.add("edge");
  line.classList.add(edge.kinds.length === 2 ? "edge-dual" : `edge-${edge.kinds[0]}`);
  if (!edge.emphasized) {
    line.classList.add("edge-dim");
  }
  // Dotted is part of the drawing contract, not just styling, so it is
  // carried on the element rather than left to an external stylesheet.
  line.setAttribute("stroke-dasharray", "4 4");
  line.dataset["ref"] = String(edge.ref);
  line.dataset["cand"] = String(edge.cand);
  return line;
}

/** Replace `root`'s contents with the rendered scene. */
export function renderScene(root: HTMLElement, scene: Scene, handlers: RenderHandlers): void {
  const doc = root.ownerDocument;

  const summary = doc.createElement("div");
  summary.classList.add("summary");
  for (const [label, cls, value] of [
    ["P", "summary-precision", scene.summary.precision],
    ["R", "summary-recall", scene.summary.recall],
    ["F1", "summary-f1", scene.summary.f1],
  ] as const) {
    const item = doc.createElement("span");
    item.classList.add("summary-item");
    const name = doc.createElement("span");
    name.classList.add("summary-label");
    name.textContent = label;
    const num = doc.createElement("span");
    num.classList.add(cls);
    num.textContent = value;
    item.append(name, " ", num);
    summary.appendChild(item);
  }

  const board = doc.createElement("div");
  board.classList.add("board");

  const svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
  svg.classList.add("edges");
  for (const edge of scene.edges) {
    svg.appendChild(renderEdge(doc, edge));
  }

  board.appendChild(renderRow(doc, scene.refTokens, "reference", handlers));
  board.appendChild(svg);
  board.appendChild(renderRow(doc, scene.candTokens, "candidate", handlers));

  if (scene.popup !== null) {
    const popup = doc.createElement("div");
    popup.classList.add("popup", `popup-${scene.popup.color}`);
    popup.dataset["side"] = scene.popup.side;
    popup.dataset["index"] = String(scene.popup.index);
    popup.textContent = scene.popup.text;
    board.appendChild(popup);
  }

  root.replaceChildren(summary, board);
}

function tokenAnchor(board: HTMLElement, side: Side, index: number): HTMLElement | null {
  return board.querySelector<HTMLElement>(`.token[data-side="${side}"][data-index="${index}"]`);
}

/**
 * Anchor edge endpoints (and the popup) to current token box positions.
 *
 * Separate from renderScene so the app can rerun it on window resize
 * without rebuilding the DOM.
 */
export function layoutScene(root: HTMLElement): void {
  const board = root.querySelector<HTMLElement>(".board");
  if (board === null) {
    return;
  }
  const origin = board.getBoundingClientRect();
  for (const line of board.querySelectorAll<SVGLineElement>("line.edge")) {
    const ref = tokenAnchor(board, "reference", Number(line.dataset["ref"]));
    const cand = tokenAnchor(board, "candidate", Number(line.dataset["cand"]));
    if (ref === null || cand === null) {
      continue;
    }
    const refBox = ref.getBoundingClientRect();
    const candBox = cand.getBoundingClientRect();
    line.setAttribute("x1", String(refBox.left + refBox.width / 2 - origin.left));
    line.setAttribute("y1", String(refBox.bottom - origin.top));
    line.setAttribute("x2", String(candBox.left + candBox.width / 2 - origin.left));
    line.setAttribute("y2", String(candBox.top - origin.top));
  }
  const popup = board.querySelector<HTMLElement>(".popup");
  if (popup !== null) {
    const side = popup.dataset["side"] as Side;
    const anchor = tokenAnchor(board, side, Number(popup.dataset["index"]));
    if (anchor !== null) {
      const box = anchor.getBoundingClientRect();
      popup.style.left = `${box.left + box.width / 2 - origin.left}px`;
      popup.style.top = `${(side === "reference" ? box.top - origin.top : box.bottom - origin.top)}px`;
    }
  }
}
