import { scorePassword } from "./api.js";
import { MeterController } from "./controller.js";
import { renderState, type MeterElements } from "./render.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
}

const input = byId<HTMLInputElement>("password");
const reveal = byId<HTMLButtonElement>("reveal");
const elements: MeterElements = {
  bar: byId("bar"),
  label: byId("label"),
  probabilities: byId("probabilities"),
  diagnostics: byId("diagnostics"),
  recommendations: byId("recommendations"),
  error: byId("error"),
};

// Same-origin service: `passgauge serve --static` hosts these assets.
const controller = new MeterController(
  (pw) => scorePassword("", pw),
  (state) => renderState(elements, state),
);

input.addEventListener("input", () => controller.input(input.value));

// Masked by default; the toggle flips the field type and nothing else.
reveal.addEventListener("click", () => {
  const hidden = input.type === "password";
  input.type = hidden ? "text" : "password";
  reveal.textContent = hidden ? "hide" : "show";
  input.focus();
});
