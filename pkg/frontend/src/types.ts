/** Shape of a /v1/score response. The UI renders these fields verbatim and
 * computes no strength logic of its own. */
export interface ScoreResult {
  class_id: number;
  class_name: "weak" | "medium" | "strong";
  probabilities: Record<string, number>;
  diagnostics: Record<string, number | string[]>;
  issues: string[];
  recommendations: string[];
  latency_ms: number;
}

export type MeterState =
  | { kind: "empty" }
  | { kind: "pending" }
  | { kind: "result"; result: ScoreResult }
  | { kind: "error"; message: string };
