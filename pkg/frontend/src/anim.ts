/**
 * Frame schedules for the three animations.
 *
 * A shift step runs 20 frames, a unit-multiplier rotation 15. Vertices
 * always travel clockwise to their destination slots, so a residue class
 * j advances proportionally to its shift distance on every frame.
 */

import { vertexAngle } from "./draw.js";

export const THETA_FRAMES = 20;
export const ADAM_FRAMES = 15;
export const MAX_FRAME_DELAY_MS = 120;

/** Speed slider (0..100) maps linearly to inter-frame delay; max speed = no delay. */
export function frameDelay(speed: number): number {
  const s = Math.min(100, Math.max(0, speed));
  return Math.round(MAX_FRAME_DELAY_MS * (1 - s / 100));
}

/** Angles of the layout slots named by `slots` (slots[x] = destination of vertex x). */
export function slotAngles(n: number, slots: readonly number[]): number[] {
  return slots.map((slot) => vertexAngle(n, slot));
}

/** Destination slots under the multiplier map i -> i*x mod n. */
export function adamSlots(n: number, x: number): number[] {
  return Array.from({ length: n }, (_, i) => (i * x) % n);
}

const TAU = 2 * Math.PI;

function clockwiseDelta(from: number, to: number): number {
  return ((to - from) % TAU + TAU) % TAU;
}

/**
 * Interpolated angle tracks from `current` to `targets`, one array per
 * frame, ending exactly on the targets. Motion is clockwise only.
 */
export function angleFrames(
  current: readonly number[],
  targets: readonly number[],
  frames: number,
): number[][] {
  const deltas = current.map((a, i) => clockwiseDelta(a, targets[i]));
  const out: number[][] = [];
  for (let f = 1; f <= frames; f++) {
    if (f === frames) {
      out.push([...targets]);
      continue;
    }
    out.push(current.map((a, i) => a + (deltas[i] * f) / frames));
  }
  return out;
}

/**
 * One frame of continuous rotation: residue class j advances by j
 * angular increments while class 0 holds still.
 */
export function rotateAdvance(
  angles: readonly number[],
  m: number,
  n: number,
): number[] {
  const incr = TAU / (n * THETA_FRAMES);
  return angles.map((a, x) => a + (x % m) * incr);
}
