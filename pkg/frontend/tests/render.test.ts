import * as fs from "fs";
import * as path from "path";
import { describe, expect, it } from "vitest";

import { parseResultCsv } from "../src/csv";
import { buildScene, renderSvg } from "../src/render";
import { EmptyInput, FigureSpec, ResultTable } from "../src/types";

const FIXTURES = path.join(__dirname, "..", "fixtures");

function load(name: string): ResultTable {
    return parseResultCsv(path.join(FIXTURES, name));
}

function spec(kind: FigureSpec["kind"], logAxis = true): FigureSpec {
    return { inputs: ["x"], kind, output: "y", logErrorAxis: logAxis };
}

describe("buildScene", () => {
    it("produces one series per scheme with the published labels", () => {
        const scene = buildScene(spec("error_vs_stopping"), [load("indep3x4_stopping.csv")]);
        expect(scene.series.map((s) => s.label)).toEqual([
            "Algo-1", "Algo-2", "Algo-3", "Algo-4",
        ]);
        for (const series of scene.series) {
            expect(series.points.length).toBeGreaterThan(0);
            const xs = series.points.map((p) => p.x);
            expect([...xs].sort((a, b) => a - b)).toEqual(xs);
        }
    });

    it("uses sample count on the x axis for the fixed-n study", () => {
        const scene = buildScene(spec("error_vs_n"), [load("indep3x4_error_vs_n.csv")]);
        expect(scene.series.map((s) => s.label)).toEqual(["Algo-1", "Algo-2"]);
        expect(scene.series[0].points.map((p) => p.x)).toEqual(
            [...Array(12).keys()].map((i) => i + 1),
        );
    });

    it("echoes run metadata into the caption", () => {
        const scene = buildScene(spec("error_vs_n"), [load("corr2x3_error_vs_n.csv")]);
        expect(scene.caption).toContain("seed=82");
        expect(scene.caption).toContain("config_hash=");
    });

    it("throws EmptyInput when no rows are plottable", () => {
        const table = load("indep3x4_stopping.csv");
        expect(() => buildScene(spec("error_vs_stopping"), [{ ...table, rows: [] }]))
            .toThrow(EmptyInput);
    });

    it("handles a single-scheme table without crashing", () => {
        const table = load("indep3x4_stopping.csv");
        const only = { ...table, rows: table.rows.filter((r) => r.scheme === "basic") };
        const scene = buildScene(spec("error_vs_stopping"), [only]);
        expect(scene.series).toHaveLength(1);
        expect(scene.series[0].label).toBe("Algo-2");
    });
});

describe("renderSvg", () => {
    it("is deterministic byte for byte", () => {
        const tables = [load("indep3x4_stopping.csv")];
        const a = renderSvg(spec("error_vs_stopping"), tables).svg;
        const b = renderSvg(spec("error_vs_stopping"), tables).svg;
        expect(a).toBe(b);
        expect(a).not.toMatch(/\d{4}-\d{2}-\d{2}/); // no dates anywhere
    });

    it("draws error bars and a legend for every series", () => {
        const { svg, scene } = renderSvg(spec("error_vs_stopping"), [
            load("indep3x4_stopping.csv"),
        ]);
        for (const series of scene.series) {
            expect(svg).toContain(`>${series.label}</text>`);
        }
        const bars = svg.match(/stroke-width="1"\/>/g) ?? [];
        const points = scene.series.reduce((acc, s) => acc + s.points.length, 0);
        expect(bars.length).toBeGreaterThanOrEqual(points * 3); // bar + two caps
    });

    it("keeps the SPRT series visibly lowest on the product-model stopping figure", () => {
        const { scene } = renderSvg(spec("error_vs_stopping"), [
            load("indep3x4_stopping.csv"),
        ]);
        const sprt = scene.series.find((s) => s.scheme === "sprt")!;
        const interp = (x: number): number => {
            const pts = sprt.points;
            if (x <= pts[0].x) return pts[0].py;
            for (let i = 1; i < pts.length; i += 1) {
                if (x <= pts[i].x) {
                    const w = (x - pts[i - 1].x) / (pts[i].x - pts[i - 1].x);
                    return pts[i - 1].py * (1 - w) + pts[i].py * w;
                }
            }
            return pts[pts.length - 1].py;
        };
        for (const series of scene.series) {
            if (series.scheme === "sprt") continue;
            for (const p of series.points) {
                if (p.x < sprt.points[0].x) continue; // outside SPRT's span
                // SVG y grows downward: lower error = larger py
                expect(interp(p.x)).toBeGreaterThanOrEqual(p.py);
            }
        }
    });

    it("falls back to a linear axis when requested", () => {
        const { svg } = renderSvg(spec("error_vs_n", false), [
            load("corr2x3_error_vs_n.csv"),
        ]);
        expect(svg).toContain(">error</text>");
    });
});
