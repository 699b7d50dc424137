import type { MeterState, ScoreResult } from "./types.js";

const CLASS_ORDER = ["weak", "medium", "strong"] as const;

export interface MeterElements {
  bar: HTMLElement;
  label: HTMLElement;
  probabilities: HTMLElement;
  diagnostics: HTMLElement;
  recommendations: HTMLElement;
  error: HTMLElement;
}

/** Pure DOM projection of a MeterState. Every datum shown comes straight
 * from a ScoreResult field. */
export function renderState(el: MeterElements, state: MeterState): void {
  el.error.textContent = "";
  el.error.hidden = true;
  switch (state.kind) {
    case "empty":
      el.bar.dataset.level = "";
      el.label.textContent = "";
      el.probabilities.textContent = "";
      el.diagnostics.textContent = "";
      el.recommendations.textContent = "";
      break;
    case "pending":
      el.label.textContent = "…";
      break;
    case "error":
      el.error.textContent = `service unavailable: ${state.message}`;
      el.error.hidden = false;
      break;
    case "result":
      renderResult(el, state.result);
      break;
  }
}

function renderResult(el: MeterElements, r: ScoreResult): void {
  el.bar.dataset.level = r.class_name;
  el.label.textContent = r.class_name;

  el.probabilities.textContent = "";
  for (const name of CLASS_ORDER) {
    const p = r.probabilities[name] ?? 0;
    const row = el.probabilities.ownerDocument.createElement("li");
    row.textContent = `${name}: ${(p * 100).toFixed(0)}%`;
    el.probabilities.appendChild(row);
  }

  el.diagnostics.textContent = "";
  for (const [name, value] of Object.entries(r.diagnostics)) {
    if (typeof value !== "number") continue;
    const row = el.diagnostics.ownerDocument.createElement("tr");
    const k = row.ownerDocument.createElement("td");
    const v = row.ownerDocument.createElement("td");
    k.textContent = name;
    v.textContent = Number.isInteger(value) ? String(value) : value.toFixed(3);
    row.append(k, v);
    el.diagnostics.appendChild(row);
  }

  el.recommendations.textContent = "";
  if (r.recommendations.length === 0 && r.class_name === "strong") {
    const li = el.recommendations.ownerDocument.createElement("li");
    li.className = "all-clear";
    li.textContent = "Looks strong. No issues detected.";
    el.recommendations.appendChild(li);
    return;
  }
  for (const rec of r.recommendations) {
    const li = el.recommendations.ownerDocument.createElement("li");
    li.textContent = rec;
    el.recommendations.appendChild(li);
  }
}
