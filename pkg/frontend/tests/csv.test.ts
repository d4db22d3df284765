import { fileURLToPath } from "node:url";
import { describe, expect, it } from "vitest";

import { CsvError, num, parseCsv, readCsv, requireColumns } from "../src/csv.js";

const fixture = (name: string): string => fileURLToPath(new URL(`./fixtures/${name}`, import.meta.url));

describe("parseCsv", () => {
  it("parses header and rows", () => {
    const t = parseCsv("a,b\n1,2\n3,4\n", "x.csv");
    expect(t.columns).toEqual(["a", "b"]);
    expect(t.rows).toEqual([
      { a: "1", b: "2" },
      { a: "3", b: "4" },
    ]);
  });

  it("rejects empty content", () => {
    expect(() => parseCsv("", "empty.csv")).toThrow(/empty\.csv: empty CSV/);
  });

  it("rejects a header with no data rows", () => {
    expect(() => parseCsv("a,b\n", "only.csv")).toThrow(/only\.csv: no data rows/);
  });

  it("rejects ragged rows with the offending line number", () => {
    expect(() => parseCsv("a,b\n1,2\n1,2,3\n", "bad.csv")).toThrow(
      /bad\.csv: line 3 has 3 fields, expected 2/,
    );
  });
});

describe("readCsv", () => {
  it("reads a machine-written aggregate CSV", () => {
    const t = readCsv(fixture("sweep_finit/aggregate.csv"));
    expect(t.columns).toContain("mean_success_ratio");
    expect(t.rows.length).toBeGreaterThan(0);
  });

  it("reports unreadable files descriptively", () => {
    expect(() => readCsv(fixture("does_not_exist.csv"))).toThrow(/cannot read .*does_not_exist\.csv/);
  });
});

describe("requireColumns", () => {
  it("passes when all columns are present", () => {
    const t = parseCsv("a,b\n1,2\n");
    expect(() => requireColumns(t, ["a", "b"])).not.toThrow();
  });

  it("names every missing column and the columns on hand", () => {
    const t = parseCsv("a,b\n1,2\n", "agg.csv");
    try {
      requireColumns(t, ["a", "mean_success_ratio", "ci95_half_width"]);
      expect.unreachable("should have thrown");
    } catch (err) {
      expect(err).toBeInstanceOf(CsvError);
      const msg = (err as Error).message;
      expect(msg).toContain("agg.csv");
      expect(msg).toContain("mean_success_ratio");
      expect(msg).toContain("ci95_half_width");
      expect(msg).toContain("have: a, b");
    }
  });
});

describe("num", () => {
  it("parses numeric cells", () => {
    const t = parseCsv("v\n0.25\n");
    expect(num(t, t.rows[0]!, "v")).toBe(0.25);
  });

  it("rejects non-numeric and empty cells", () => {
    const t = parseCsv("v,w\nfoo,\n", "agg.csv");
    expect(() => num(t, t.rows[0]!, "v")).toThrow(/agg\.csv: non-numeric value "foo" in column v/);
    expect(() => num(t, t.rows[0]!, "w")).toThrow(/non-numeric value "" in column w/);
  });
});
