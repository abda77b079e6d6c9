/**
 * Explorer state machine.
 *
 * The explorer walks a base graph through residue-shift steps and
 * unit-multiplier images, reading every displayed label off the service.
 * Button visibility is a pure function of the mode, captured in the
 * VISIBILITY table so it can be tested as a transition table.
 */

import {
  ApiClient,
  GraphInfo,
  ServiceError,
  ThetaStep,
} from "./api.js";
import {
  ADAM_FRAMES,
  THETA_FRAMES,
  adamSlots,
  angleFrames,
  frameDelay,
  rotateAdvance,
  slotAngles,
} from "./anim.js";
import { baseAngles } from "./draw.js";

export type Mode = "idle" | "stepping" | "adam" | "rotating";
export type View = "setup" | "explorer";

export type Button =
  | "stepMove"
  | "nextMove"
  | "adamIso"
  | "continue"
  | "rotate"
  | "stop"
  | "reset"
  | "exit";

export const BUTTONS: readonly Button[] = [
  "stepMove",
  "nextMove",
  "adamIso",
  "continue",
  "rotate",
  "stop",
  "reset",
  "exit",
];

/** Which controls each mode offers. */
export const VISIBILITY: Record<Mode, Record<Button, boolean>> = {
  idle: {
    stepMove: true,
    nextMove: false,
    adamIso: true,
    continue: false,
    rotate: true,
    stop: false,
    reset: true,
    exit: true,
  },
  stepping: {
    stepMove: false,
    nextMove: true,
    adamIso: true,
    continue: false,
    rotate: false,
    stop: false,
    reset: true,
    exit: true,
  },
  adam: {
    stepMove: false,
    nextMove: false,
    adamIso: false,
    continue: true,
    rotate: false,
    stop: false,
    reset: true,
    exit: true,
  },
  rotating: {
    stepMove: false,
    nextMove: false,
    adamIso: false,
    continue: false,
    rotate: false,
    stop: true,
    reset: false,
    exit: false,
  },
};

/** Badge wording per service classification of a shift image. */
export const BADGES: Record<string, string> = {
  type1: "Adams",
  type2: "Non-Adams",
  noncirculantimage: "Non-Circulant",
  type1aftertype2: "Non-Adams",
  identical: "Identical",
};

export interface ExplorerState {
  view: View;
  mode: Mode;
  base: GraphInfo | null;
  m: number;
  s: number;
  k: number;
  speed: number;
  angles: number[];
  label: string;
  badge: string;
  multiplier: number | null;
  pending: boolean;
}

export function initialState(): ExplorerState {
  return {
    view: "setup",
    mode: "idle",
    base: null,
    m: 2,
    s: 0,
    k: 1,
    speed: 50,
    angles: [],
    label: "",
    badge: "",
    multiplier: null,
    pending: false,
  };
}

export interface Hooks {
  render(state: Readonly<ExplorerState>): void;
  sleep(ms: number): Promise<void>;
  alert(message: string): void;
  toast(message: string): void;
}

function failureText(err: unknown): string {
  if (err instanceof ServiceError) return err.message;
  return String(err);
}

export class Explorer {
  state: ExplorerState;

  constructor(
    private readonly api: ApiClient,
    private readonly hooks: Hooks,
  ) {
    this.state = initialState();
  }

  visible(): Record<Button, boolean> {
    return VISIBILITY[this.state.mode];
  }

  /** Total shift steps available: order / cycle count. */
  numMoves(): number {
    return this.state.base ? this.state.base.n / this.state.m : 0;
  }

  canStep(): boolean {
    return this.state.base !== null && this.state.s < this.numMoves();
  }

  setSpeed(value: number): void {
    this.state = { ...this.state, speed: Math.min(100, Math.max(0, value)) };
  }

  /** Load the graph, draw it, and enter the explorer view. */
  async setup(n: number, jumps: readonly number[], m: number): Promise<boolean> {
    if (this.state.pending) return false;
    if (jumps.length === 0) {
      this.hooks.alert("Select at least one jump value.");
      return false;
    }
    this.state = { ...this.state, pending: true };
    let info: GraphInfo;
    try {
      info = await this.api.graph(n, jumps);
    } catch (err) {
      this.state = { ...this.state, pending: false };
      this.hooks.toast(failureText(err));
      return false;
    }
    if (!info.divisors.includes(m)) {
      this.state = { ...this.state, pending: false };
      this.hooks.alert(`Cycles must be a divisor of ${info.n} between 2 and ${info.n / 2}.`);
      return false;
    }
    this.state = {
      view: "explorer",
      mode: "idle",
      base: info,
      m,
      s: 0,
      k: 1,
      speed: this.state.speed,
      angles: baseAngles(info.n),
      label: info.graph,
      badge: "",
      multiplier: null,
      pending: false,
    };
    this.hooks.render(this.state);
    return true;
  }

  async stepMove(): Promise<void> {
    if (this.state.mode !== "idle") return;
    await this.advanceStep();
  }

  async nextMove(): Promise<void> {
    if (this.state.mode !== "stepping") return;
    await this.advanceStep();
  }

  /** Apply the shift at the next step counter and animate into it. */
  private async advanceStep(): Promise<void> {
    const st = this.state;
    if (st.pending || !st.base || !this.canStep()) return;
    const moves = this.numMoves();
    // the closing step wraps to t = 0: the identity image, vertices home
    const t = (st.s + 1) % moves;
    this.state = { ...st, pending: true };
    this.hooks.render(this.state);
    let step: ThetaStep;
    try {
      step = await this.api.theta(st.base.n, st.base.jumps, st.m, t);
    } catch (err) {
      this.state = { ...st, pending: false };
      this.hooks.render(this.state);
      this.hooks.toast(failureText(err));
      return;
    }
    const targets = slotAngles(st.base.n, step.permutation);
    for (const frame of angleFrames(st.angles, targets, THETA_FRAMES)) {
      this.state = { ...this.state, angles: frame };
      this.hooks.render(this.state);
      await this.hooks.sleep(frameDelay(this.state.speed));
    }
    this.state = {
      ...this.state,
      mode: "stepping",
      s: st.s + 1,
      label: step.literal ?? "Non-Circulant",
      badge: BADGES[step.classification] ?? step.classification,
      multiplier: null,
      pending: false,
    };
    this.hooks.render(this.state);
  }

  /** First unit-multiplier image of the base graph (multiplier list skips 1). */
  async adamIso(): Promise<void> {
    const st = this.state;
    if (st.mode !== "idle" && st.mode !== "stepping") return;
    await this.applyAdam(st.k);
  }

  /** Advance to the next multiplier; past the last one, settle back to idle. */
  async continueAdam(): Promise<void> {
    const st = this.state;
    if (st.mode !== "adam" || st.pending || !st.base) return;
    const next = st.k + 1;
    if (next >= st.base.units.length) {
      this.state = { ...st, mode: "idle", k: 1, multiplier: null };
      this.hooks.render(this.state);
      return;
    }
    await this.applyAdam(next);
  }

  private async applyAdam(index: number): Promise<void> {
    const st = this.state;
    if (st.pending || !st.base) return;
    if (index < 1 || index >= st.base.units.length) return;
    const x = st.base.units[index];
    this.state = { ...st, pending: true };
    this.hooks.render(this.state);
    let image;
    try {
      image = await this.api.adam(st.base.n, st.base.jumps, x);
    } catch (err) {
      this.state = { ...st, pending: false };
      this.hooks.render(this.state);
      this.hooks.toast(failureText(err));
      return;
    }
    const targets = slotAngles(st.base.n, adamSlots(st.base.n, x));
    for (const frame of angleFrames(st.angles, targets, ADAM_FRAMES)) {
      this.state = { ...this.state, angles: frame };
      this.hooks.render(this.state);
      await this.hooks.sleep(frameDelay(this.state.speed));
    }
    this.state = {
      ...this.state,
      mode: "adam",
      k: index,
      label: image.literal,
      badge: image.badge,
      multiplier: x,
      pending: false,
    };
    this.hooks.render(this.state);
  }

  /** Spin the non-zero residue classes until stop() flips the mode. */
  async rotate(): Promise<void> {
    const st = this.state;
    if (st.mode !== "idle" || st.pending || !st.base) return;
    this.state = { ...st, mode: "rotating" };
    this.hooks.render(this.state);
    while (this.state.mode === "rotating") {
      this.state = {
        ...this.state,
        angles: rotateAdvance(this.state.angles, this.state.m, this.state.base!.n),
      };
      this.hooks.render(this.state);
      await this.hooks.sleep(frameDelay(this.state.speed));
    }
  }

  stop(): void {
    if (this.state.mode !== "rotating") return;
    this.state = { ...this.state, mode: "idle" };
    this.hooks.render(this.state);
  }

  /** Restore the original drawing and labels. */
  reset(): void {
    const base = this.state.base;
    if (!base || this.state.pending) return;
    this.state = {
      ...this.state,
      mode: "idle",
      s: 0,
      k: 1,
      angles: baseAngles(base.n),
      label: base.graph,
      badge: "",
      multiplier: null,
    };
    this.hooks.render(this.state);
  }

  /** Leave the explorer and return to the setup form. */
  exit(): void {
    if (this.state.pending) return;
    const speed = this.state.speed;
    this.state = { ...initialState(), speed };
    this.hooks.render(this.state);
  }
}
