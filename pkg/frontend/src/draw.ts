/**
 * Circular layout and SVG rendering.
 *
 * Vertices sit on the corners of a regular n-gon, labeled clockwise from
 * the top. Chords are colored by jump class from a fixed 16-color table;
 * class colors are assigned from slot 9 upward, skipping slot 11, so the
 * first few classes stay clearly distinguishable.
 */

// classic 16-slot terminal palette
export const COLOR_TABLE: readonly string[] = [
  "#000000",
  "#800000",
  "#008000",
  "#808000",
  "#000080",
  "#800080",
  "#008080",
  "#c0c0c0",
  "#808080",
  "#ff4040",
  "#40c040",
  "#40ffff",
  "#4040ff",
  "#ff40ff",
  "#c08000",
  "#f0f0f0",
];

const PALETTE_SLOTS: readonly number[] = [9, 10, 12, 13, 14, 1, 2, 3, 4, 5, 6, 8];

export function paletteIndex(classIdx: number): number {
  return PALETTE_SLOTS[classIdx % PALETTE_SLOTS.length];
}

export function chordColor(classIdx: number): string {
  return COLOR_TABLE[paletteIndex(classIdx)];
}

/** Angle of layout slot `position`: slot 0 at the top, slots advancing clockwise. */
export function vertexAngle(n: number, position: number): number {
  return -Math.PI / 2 + (2 * Math.PI * position) / n;
}

export function baseAngles(n: number): number[] {
  return Array.from({ length: n }, (_, i) => vertexAngle(n, i));
}

/** Unique chords (a, b, classIdx); the diameter jump yields one chord per pair. */
export function chordEndpoints(
  n: number,
  jumps: readonly number[],
): Array<[number, number, number]> {
  const seen = new Set<string>();
  const chords: Array<[number, number, number]> = [];
  jumps.forEach((r, classIdx) => {
    for (let i = 0; i < n; i++) {
      const j = (i + r) % n;
      const key = i < j ? `${i}-${j}` : `${j}-${i}`;
      if (seen.has(key)) continue;
      seen.add(key);
      chords.push([i, j, classIdx]);
    }
  });
  return chords;
}

export interface DrawModel {
  n: number;
  jumps: readonly number[];
  angles: readonly number[];
  title: string;
  size?: number;
}

const LABEL_RING = 1.13;

function point(cx: number, cy: number, radius: number, angle: number) {
  return { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) };
}

function fmt(v: number): string {
  return v.toFixed(2);
}

/** Render the whole drawing as an SVG document string. */
export function renderSvg(model: DrawModel): string {
  const size = model.size ?? 640;
  const cx = size / 2;
  const cy = size / 2;
  const radius = size * 0.4;
  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${size} ${size}" class="graph-canvas">`,
  );
  parts.push(
    `<text x="12" y="24" class="graph-title" fill="#e8e8e8" font-size="18">${model.title}</text>`,
  );
  for (const [a, b, classIdx] of chordEndpoints(model.n, model.jumps)) {
    const pa = point(cx, cy, radius, model.angles[a]);
    const pb = point(cx, cy, radius, model.angles[b]);
    parts.push(
      `<line x1="${fmt(pa.x)}" y1="${fmt(pa.y)}" x2="${fmt(pb.x)}" y2="${fmt(pb.y)}" ` +
        `stroke="${chordColor(classIdx)}" stroke-width="1.4" data-class="${classIdx}"/>`,
    );
  }
  for (let i = 0; i < model.n; i++) {
    const pv = point(cx, cy, radius, model.angles[i]);
    const pl = point(cx, cy, radius * LABEL_RING, model.angles[i]);
    parts.push(
      `<circle cx="${fmt(pv.x)}" cy="${fmt(pv.y)}" r="4" fill="#e8e8e8" data-vertex="${i}"/>`,
    );
    parts.push(
      `<text x="${fmt(pl.x)}" y="${fmt(pl.y)}" fill="#9a9a9a" font-size="11" ` +
        `text-anchor="middle" dominant-baseline="middle">${i}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("\n");
}
