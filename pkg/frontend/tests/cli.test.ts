import { mkdtempSync, readFileSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import * as path from "node:path";
import { fileURLToPath } from "node:url";
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { runCli } from "../src/cli.js";

const SPEC = fileURLToPath(new URL("./fixtures/figures.json", import.meta.url));

const FIGURE_FILES = [
  "fig3_centrality_over_time.svg",
  "fig4_network_size.svg",
  "fig5_topologies.svg",
  "fig6_temporal.svg",
  "fig7_finit.svg",
  "fig8_pmax_theta.svg",
  "fig9_uncertainty.svg",
  "fig10_pmin.svg",
  "fig11_runtime.svg",
];

let dirs: string[] = [];
let logs: string[];
let errs: string[];

const tempDir = (): string => {
  const d = mkdtempSync(path.join(tmpdir(), "lvm-figs-"));
  dirs.push(d);
  return d;
};

beforeEach(() => {
  logs = [];
  errs = [];
  vi.spyOn(console, "log").mockImplementation((msg: string) => logs.push(msg));
  vi.spyOn(console, "error").mockImplementation((msg: string) => errs.push(msg));
});

afterEach(() => {
  vi.restoreAllMocks();
  for (const d of dirs) rmSync(d, { recursive: true, force: true });
  dirs = [];
});

describe("lvm-figs CLI", () => {
  it("renders every requested figure under --out and reports each path", () => {
    const out = tempDir();
    expect(runCli(["--spec", SPEC, "--out", out])).toBe(0);
    for (const f of FIGURE_FILES) {
      const svg = readFileSync(path.join(out, f), "utf8");
      expect(svg.startsWith("<svg ")).toBe(true);
    }
    expect(logs).toHaveLength(FIGURE_FILES.length);
    expect(logs[0]).toContain("fig3_centrality_over_time -> ");
  });

  it("produces byte-identical output across runs", () => {
    const a = tempDir();
    const b = tempDir();
    expect(runCli(["--spec", SPEC, "--out", a])).toBe(0);
    expect(runCli(["--spec", SPEC, "--out", b])).toBe(0);
    for (const f of FIGURE_FILES) {
      expect(readFileSync(path.join(a, f))).toEqual(readFileSync(path.join(b, f)));
    }
  });

  it("creates nested output directories from the spec's output paths", () => {
    const out = tempDir();
    const spec = path.join(tempDir(), "spec.json");
    writeFileSync(
      spec,
      JSON.stringify({
        figures: [
          {
            id: "fig7_finit",
            inputs: [fileURLToPath(new URL("./fixtures/sweep_finit/aggregate.csv", import.meta.url))],
            output: "nested/dir/fig7.svg",
          },
        ],
      }),
    );
    expect(runCli(["--spec", spec, "--out", out])).toBe(0);
    expect(readFileSync(path.join(out, "nested/dir/fig7.svg"), "utf8")).toContain("</svg>");
  });

  it("requires --spec and --out", () => {
    expect(runCli([])).toBe(1);
    expect(errs[0]).toContain("--spec and --out are required");
  });

  it("rejects non-SVG formats with a clear message", () => {
    expect(runCli(["--spec", SPEC, "--out", tempDir(), "--format", "png"])).toBe(1);
    expect(errs[0]).toContain("unsupported format 'png'");
  });

  it("fails cleanly on invalid spec JSON", () => {
    const spec = path.join(tempDir(), "broken.json");
    writeFileSync(spec, "{not json");
    expect(runCli(["--spec", spec, "--out", tempDir()])).toBe(1);
    expect(errs[0]).toMatch(/invalid JSON/);
  });

  it("fails cleanly on a spec entry without inputs", () => {
    const spec = path.join(tempDir(), "incomplete.json");
    writeFileSync(spec, JSON.stringify({ figures: [{ id: "fig7_finit", output: "x.svg" }] }));
    expect(runCli(["--spec", spec, "--out", tempDir()])).toBe(1);
    expect(errs[0]).toContain("needs a non-empty string array 'inputs'");
  });

  it("fails cleanly on an unknown figure id and writes nothing for it", () => {
    const out = tempDir();
    const spec = path.join(tempDir(), "unknown.json");
    writeFileSync(
      spec,
      JSON.stringify({
        figures: [{ id: "fig1_nonexistent", inputs: ["sweep_finit/aggregate.csv"], output: "x.svg" }],
      }),
    );
    // inputs resolve relative to the spec file, so copy a fixture next to it
    writeFileSync(
      path.join(path.dirname(spec), "agg.csv"),
      readFileSync(fileURLToPath(new URL("./fixtures/sweep_finit/aggregate.csv", import.meta.url))),
    );
    writeFileSync(
      spec,
      JSON.stringify({ figures: [{ id: "fig1_nonexistent", inputs: ["agg.csv"], output: "x.svg" }] }),
    );
    expect(runCli(["--spec", spec, "--out", out])).toBe(1);
    expect(errs[0]).toContain("unknown figure id 'fig1_nonexistent'");
  });

  it("fails cleanly when an input CSV is missing a required column", () => {
    const work = tempDir();
    const agg = readFileSync(
      fileURLToPath(new URL("./fixtures/sweep_finit/aggregate.csv", import.meta.url)),
      "utf8",
    );
    const doctored = agg
      .split("\n")
      .map((line) => line.split(",").filter((_, i) => i !== 4).join(","))
      .join("\n");
    writeFileSync(path.join(work, "agg.csv"), doctored);
    const spec = path.join(work, "spec.json");
    writeFileSync(
      spec,
      JSON.stringify({ figures: [{ id: "fig7_finit", inputs: ["agg.csv"], output: "x.svg" }] }),
    );
    expect(runCli(["--spec", spec, "--out", tempDir()])).toBe(1);
    expect(errs[0]).toMatch(/missing required column\(s\) mean_success_ratio/);
  });

  it("fails cleanly on an empty input CSV without writing an image", () => {
    const work = tempDir();
    writeFileSync(path.join(work, "empty.csv"), "");
    const spec = path.join(work, "spec.json");
    writeFileSync(
      spec,
      JSON.stringify({ figures: [{ id: "fig7_finit", inputs: ["empty.csv"], output: "x.svg" }] }),
    );
    const out = tempDir();
    expect(runCli(["--spec", spec, "--out", out])).toBe(1);
    expect(errs[0]).toMatch(/empty CSV/);
    expect(() => readFileSync(path.join(out, "x.svg"))).toThrow();
  });
});
