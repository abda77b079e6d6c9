/**
 * DOM wiring for the explorer page.
 *
 * All graph logic lives in the service and in state.ts; this file only
 * reads form controls, forwards button presses, and paints the state.
 */

import { ApiClient } from "./api.js";
import { renderSvg } from "./draw.js";
import { BUTTONS, Button, Explorer, ExplorerState } from "./state.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

const BUTTON_IDS: Record<Button, string> = {
  stepMove: "btn-step",
  nextMove: "btn-next",
  adamIso: "btn-adam",
  continue: "btn-continue",
  rotate: "btn-rotate",
  stop: "btn-stop",
  reset: "btn-reset",
  exit: "btn-exit",
};

function sleep(ms: number): Promise<void> {
  if (ms <= 0) {
    return new Promise((resolve) => requestAnimationFrame(() => resolve()));
  }
  return new Promise((resolve) => setTimeout(resolve, ms));
}

function toast(message: string): void {
  const box = el<HTMLDivElement>("toast");
  box.textContent = message;
  box.classList.add("show");
  setTimeout(() => box.classList.remove("show"), 4000);
}

function paint(explorer: Explorer, state: Readonly<ExplorerState>): void {
  el<HTMLDivElement>("setup-view").hidden = state.view !== "setup";
  el<HTMLDivElement>("explorer-view").hidden = state.view !== "explorer";
  if (state.view !== "explorer" || !state.base) return;

  el<HTMLDivElement>("canvas-box").innerHTML = renderSvg({
    n: state.base.n,
    jumps: state.base.jumps,
    angles: state.angles,
    title: state.base.graph,
  });
  el<HTMLSpanElement>("label-result").textContent = state.label;
  const badge = el<HTMLSpanElement>("label-badge");
  badge.textContent = state.badge;
  badge.dataset.kind = state.badge.toLowerCase();
  el<HTMLSpanElement>("label-steps").textContent =
    `step ${state.s} of ${explorer.numMoves()}`;
  el<HTMLSpanElement>("label-mult").textContent =
    state.multiplier === null ? "" : `x = ${state.multiplier}`;

  const visible = explorer.visible();
  for (const name of BUTTONS) {
    const button = el<HTMLButtonElement>(BUTTON_IDS[name]);
    button.hidden = !visible[name];
    button.disabled = state.pending;
  }
  const next = el<HTMLButtonElement>(BUTTON_IDS.nextMove);
  if (!next.hidden && !explorer.canStep()) next.disabled = true;
}

function selectedJumps(): number[] {
  const boxes = document.querySelectorAll<HTMLInputElement>(
    "#jump-list input[type=checkbox]:checked",
  );
  return Array.from(boxes, (box) => Number(box.value));
}

/** Rebuild the jump checkboxes and cycle options when the order changes. */
function refreshForm(): void {
  const n = Number(el<HTMLInputElement>("input-n").value);
  const jumpList = el<HTMLDivElement>("jump-list");
  const cycles = el<HTMLSelectElement>("input-m");
  jumpList.innerHTML = "";
  cycles.innerHTML = "";
  if (!Number.isInteger(n) || n < 3) return;
  const half = Math.floor(n / 2);
  for (let r = 1; r <= half; r++) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.value = String(r);
    label.append(box, ` ${r}`);
    jumpList.append(label);
  }
  for (let m = 2; m <= half; m++) {
    if (n % m !== 0) continue;
    const option = document.createElement("option");
    option.value = String(m);
    option.textContent = String(m);
    cycles.append(option);
  }
}

function boot(): void {
  const api = new ApiClient((url) => fetch(url));
  const explorer = new Explorer(api, {
    render: (state) => paint(explorer, state),
    sleep,
    alert: (message) => window.alert(message),
    toast,
  });

  el<HTMLInputElement>("input-n").addEventListener("change", refreshForm);
  el<HTMLButtonElement>("btn-draw").addEventListener("click", () => {
    const n = Number(el<HTMLInputElement>("input-n").value);
    const m = Number(el<HTMLSelectElement>("input-m").value);
    void explorer.setup(n, selectedJumps(), m);
  });

  el<HTMLButtonElement>(BUTTON_IDS.stepMove).addEventListener("click", () => {
    void explorer.stepMove();
  });
  el<HTMLButtonElement>(BUTTON_IDS.nextMove).addEventListener("click", () => {
    void explorer.nextMove();
  });
  el<HTMLButtonElement>(BUTTON_IDS.adamIso).addEventListener("click", () => {
    void explorer.adamIso();
  });
  el<HTMLButtonElement>(BUTTON_IDS.continue).addEventListener("click", () => {
    void explorer.continueAdam();
  });
  el<HTMLButtonElement>(BUTTON_IDS.rotate).addEventListener("click", () => {
    void explorer.rotate();
  });
  el<HTMLButtonElement>(BUTTON_IDS.stop).addEventListener("click", () => {
    explorer.stop();
  });
  el<HTMLButtonElement>(BUTTON_IDS.reset).addEventListener("click", () => {
    explorer.reset();
  });
  el<HTMLButtonElement>(BUTTON_IDS.exit).addEventListener("click", () => {
    explorer.exit();
  });
  el<HTMLInputElement>("input-speed").addEventListener("input", (event) => {
    explorer.setSpeed(Number((event.target as HTMLInputElement).value));
  });

  refreshForm();
}

boot();
