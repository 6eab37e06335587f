// The explorer must show exactly the walk the command line computes. The
// fixtures here were captured from a live service session and from
// `ppalg mutate --type A3 --sequence 2,1,3,1,2`; these tests hold the two
// transcripts against each other.

import { describe, expect, it } from "vitest";
import type { SessionState } from "../src/api";
import { exportScript } from "../src/history";
import a3ExportJson from "../src/testdata/a3_export.json";
import a3WalkJson from "../src/testdata/a3_walk.json";
import cliText from "../src/testdata/cli_walk.txt?raw";

const walk = a3WalkJson as unknown as {
  walk: number[];
  steps: SessionState[];
};
const exported = a3ExportJson as unknown as {
  type: string;
  initial: number[];
  history: number[];
  sequences: string[];
  state_hash: string;
};

const cliLines = cliText.trim().split("\n");
const cliSteps = cliLines
  .filter((line) => line.startsWith("mu_"))
  .map((line) => {
    const m = /^mu_(\d+): (.*)$/.exec(line)!;
    return { k: Number(m[1]), display: m[2] };
  });
const cliFinal = cliLines[cliLines.length - 1].replace("final: ", "");

describe("explorer and command line agree on a five step walk", () => {
  it("covers the directions the walk claims", () => {
    expect(walk.walk).toEqual([2, 1, 3, 1, 2]);
    expect(cliSteps.map((s) => s.k)).toEqual(walk.walk);
    expect(walk.steps.length).toBe(5);
  });

  it("reports the same exchange sequence at every step", () => {
    for (let i = 0; i < walk.steps.length; i++) {
      expect(walk.steps[i].sequence?.display).toBe(cliSteps[i].display);
    }
  });

  it("accumulates the same history the command line prints", () => {
    const last = walk.steps[walk.steps.length - 1];
    expect(last.history.map((h) => h.k)).toEqual(walk.walk);
    expect(last.history.map((h) => h.display)).toEqual(
      cliSteps.map((s) => s.display),
    );
    expect(exportScript(last.history)).toBe("2,1,3,1,2");
  });

  it("lands on the same module", () => {
    const last = walk.steps[walk.steps.length - 1];
    expect(last.nodes.map((n) => n.label).join(" + ")).toBe(cliFinal);
  });

  it("exports a script the command line accepts verbatim", () => {
    expect(exported.type).toBe("A3");
    expect(exported.history).toEqual(walk.walk);
    expect(exported.sequences).toEqual(cliSteps.map((s) => s.display));
    const last = walk.steps[walk.steps.length - 1];
    expect(exported.state_hash).toBe(last.state_hash);
  });
});
