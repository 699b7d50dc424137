import type { MeterState, ScoreResult } from "./types.js";

export const DEBOUNCE_MS = 150;

export type Scorer = (password: string) => Promise<ScoreResult>;

/**
 * Debounced, staleness-safe glue between the input field and the scorer.
 *
 * Every issued request gets a sequence number; a response only renders if
 * it is newer than anything already rendered AND the field still contains
 * the text it was scored for. Empty input clears immediately, cancelling
 * whatever is pending. Nothing here touches persistent storage.
 */
export class MeterController {
  private seq = 0;
  private rendered = 0;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private text = "";

  constructor(
    private readonly scorer: Scorer,
    private readonly onState: (state: MeterState) => void,
    private readonly debounceMs: number = DEBOUNCE_MS,
  ) {}

  input(text: string): void {
    this.text = text;
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (text === "") {
      // Clearing wins over any in-flight response.
      this.rendered = ++this.seq;
      this.onState({ kind: "empty" });
      return;
    }
    this.onState({ kind: "pending" });
    this.timer = setTimeout(() => {
      this.timer = null;
      void this.fire(text);
    }, this.debounceMs);
  }

  private async fire(text: string): Promise<void> {
    const id = ++this.seq;
    let state: MeterState;
    try {
      state = { kind: "result", result: await this.scorer(text) };
    } catch (err) {
      state = {
        kind: "error",
        message: err instanceof Error ? err.message : String(err),
      };
    }
    if (id <= this.rendered || text !== this.text) {
      return; // stale: superseded or the field has moved on
    }
    this.rendered = id;
    this.onState(state);
  }
}
