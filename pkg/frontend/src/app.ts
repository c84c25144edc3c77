/**
 * Application shell: input form, options, error banner, and the rendered
 * match scene. Owns all mutable UI state and applies latest-wins semantics
 * to overlapping submissions.
 */

import { postScore, type FetchLike } from "./api.js";
import { buildScene, QUALITY_THRESHOLDS, type QualityThresholds } from "./viewmodel.js";
import { layoutScene, renderScene } from "./render.js";
import type { Hover, ScoreResponse, Side } from "./types.js";

export interface AppConfig {
  /** Service origin, e.g. "http://127.0.0.1:8000"; "" for same-origin. */
  baseUrl: string;
  /** Injectable for tests; defaults to the page's fetch. */
  fetchImpl?: FetchLike;
  thresholds?: QualityThresholds;
}

interface UiError {
  code: string;
  message: string;
  retryable: boolean;
}

export class VisualizerApp {
  private readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;
  private readonly thresholds: QualityThresholds;

  private readonly referenceInput: HTMLTextAreaElement;
  private readonly candidateInput: HTMLTextAreaElement;
  private readonly specialsToggle: HTMLInputElement;
  private readonly banner: HTMLElement;
  private readonly sceneRoot: HTMLElement;

  private response: ScoreResponse | null = null;
  private hover: Hover | null = null;
  private error: UiError | null = null;
  /** Monotone submission ticket; only the newest submission may apply. */
  private submissionSeq = 0;

  constructor(root: HTMLElement, config: AppConfig) {
    this.baseUrl = config.baseUrl;
    const defaultFetch = root.ownerDocument.defaultView?.fetch ?? globalThis.fetch;
    this.fetchImpl = config.fetchImpl ?? ((input, init) => defaultFetch(input, init));
    this.thresholds = config.thresholds ?? QUALITY_THRESHOLDS;

    const doc = root.ownerDocument;
    const form = doc.createElement("form");
    form.classList.add("pair-form");
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.submit();
    });

    this.referenceInput = doc.createElement("textarea");
    this.referenceInput.classList.add("input-reference");
    this.referenceInput.setAttribute("placeholder", "Reference text");
    this.candidateInput = doc.createElement("textarea");
    this.candidateInput.classList.add("input-candidate");
    this.candidateInput.setAttribute("placeholder", "Candidate text");

    const submitButton = doc.createElement("button");
    submitButton.type = "submit";
    submitButton.classList.add("submit");
    submitButton.textContent = "Score";

    const toggleLabel = doc.createElement("label");
    toggleLabel.classList.add("specials-toggle-label");
    this.specialsToggle = doc.createElement("input");
    this.specialsToggle.type = "checkbox";
    this.specialsToggle.classList.add("specials-toggle");
    this.specialsToggle.addEventListener("change", () => this.renderSceneOnly());
    toggleLabel.append(this.specialsToggle, " show marker tokens");

    form.append(this.referenceInput, this.candidateInput, submitButton, toggleLabel);

    this.banner = doc.createElement("div");
    this.banner.classList.add("error-banner");
    this.banner.hidden = true;

    this.sceneRoot = doc.createElement("div");
    this.sceneRoot.classList.add("scene");

    root.replaceChildren(form, this.banner, this.sceneRoot);
    root.ownerDocument.defaultView?.addEventListener("resize", () => layoutScene(this.sceneRoot));
  }

  /**
   * Score the current input pair. Resolves once this submission has either
   * been applied or superseded by a newer one.
   */
  async submit(): Promise<void> {
    const reference = this.referenceInput.value;
    const candidate = this.candidateInput.value;
    if (reference.trim() === "" || candidate.trim() === "") {
      this.error = {
        code: "EMPTY_INPUT",
        message: "Both reference and candidate text are required.",
        retryable: false,
      };
      this.renderBanner();
      return;
    }
    const ticket = ++this.submissionSeq;
    const result = await postScore(this.baseUrl, reference, candidate, undefined, this.fetchImpl);
    if (ticket !== this.submissionSeq) {
      // A newer submission owns the UI now; drop this outcome entirely.
      return;
    }
    if (result.ok) {
      this.response = result.response;
      this.hover = null;
      this.error = null;
    } else {
      this.error = { code: result.errorCode, message: result.message, retryable: result.retryable };
    }
    this.renderBanner();
    this.renderSceneOnly();
  }

  private renderBanner(): void {
    if (this.error === null) {
      this.banner.hidden = true;
      this.banner.textContent = "";
      this.banner.classList.remove("retryable");
      return;
    }
    this.banner.hidden = false;
    this.banner.textContent = `${this.error.code}: ${this.error.message}`;
    this.banner.classList.toggle("retryable", this.error.retryable);
    if (this.error.retryable) {
      this.banner.textContent += " — try again in a moment.";
    }
  }

  private renderSceneOnly(): void {
    if (this.response === null) {
      this.sceneRoot.replaceChildren();
      return;
    }
    const scene = buildScene(
      this.response,
      this.hover,
      this.specialsToggle.checked,
      this.thresholds,
    );
    renderScene(this.sceneRoot, scene, {
      onHover: (side: Side, index: number) => {
        this.hover = { side, index };
        this.renderSceneOnly();
      },
      onUnhover: () => {
        this.hover = null;
        this.renderSceneOnly();
      },
    });
    layoutScene(this.sceneRoot);
  }
}

/** Mount the visualizer under `root`. */
export function createApp(root: HTMLElement, config: AppConfig): VisualizerApp {
  return new VisualizerApp(root, config);
}
