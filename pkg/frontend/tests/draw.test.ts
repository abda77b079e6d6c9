import { describe, expect, it } from "vitest";

import {
  COLOR_TABLE,
  baseAngles,
  chordColor,
  chordEndpoints,
  paletteIndex,
  renderSvg,
  vertexAngle,
} from "../src/draw.js";

describe("palette", () => {
  it("assigns class colors from slot 9 upward, skipping slot 11", () => {
    expect([0, 1, 2, 3].map(paletteIndex)).toEqual([9, 10, 12, 13]);
    for (let c = 0; c < 24; c++) {
      expect(paletteIndex(c)).not.toBe(11);
    }
  });

  it("gives distinct colors to the first six classes", () => {
    const colors = [0, 1, 2, 3, 4, 5].map(chordColor);
    expect(new Set(colors).size).toBe(6);
  });
});

describe("layout", () => {
  it("puts slot 0 at the top and spaces slots evenly clockwise", () => {
    expect(vertexAngle(27, 0)).toBeCloseTo(-Math.PI / 2, 12);
    const angles = baseAngles(27);
    expect(angles.length).toBe(27);
    for (let i = 1; i < 27; i++) {
      expect(angles[i] - angles[i - 1]).toBeCloseTo((2 * Math.PI) / 27, 12);
    }
  });
});

describe("chords", () => {
  it("draws one chord per simple edge", () => {
    expect(chordEndpoints(16, [2, 3, 5]).length).toBe(48);
    expect(chordEndpoints(27, [1, 3, 8, 10]).length).toBe(108);
  });

  it("draws the diameter jump once per vertex pair", () => {
    expect(chordEndpoints(4, [1, 2]).length).toBe(6);
    expect(chordEndpoints(16, [8]).length).toBe(8);
  });

  it("tags every chord with its jump class", () => {
    const classes = new Set(chordEndpoints(16, [2, 3, 5]).map(([, , c]) => c));
    expect(classes).toEqual(new Set([0, 1, 2]));
  });
});

describe("svg output", () => {
  it("renders the title, all vertices, and all chords", () => {
    const svg = renderSvg({
      n: 27,
      jumps: [1, 3, 8, 10],
      angles: baseAngles(27),
      title: "C27(1,3,8,10)",
    });
    expect(svg).toContain("<svg");
    expect(svg).toContain("C27(1,3,8,10)");
    expect((svg.match(/data-vertex=/g) ?? []).length).toBe(27);
    expect((svg.match(/<line /g) ?? []).length).toBe(108);
    expect((svg.match(/<text /g) ?? []).length).toBe(28);
  });

  it("strokes the four jump classes in four palette colors", () => {
    const svg = renderSvg({
      n: 27,
      jumps: [1, 3, 8, 10],
      angles: baseAngles(27),
      title: "C27(1,3,8,10)",
    });
    for (const idx of [9, 10, 12, 13]) {
      expect(svg).toContain(`stroke="${COLOR_TABLE[idx]}"`);
    }
  });
});
