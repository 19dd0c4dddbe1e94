import { fmt, linearScale, logScale, Scale } from "./scale";
import {
    EmptyInput,
    FigureSpec,
    ResultTable,
    Scene,
    Series,
    SeriesPoint,
} from "./types";

const WIDTH = 720;
const HEIGHT = 480;
const MARGIN = { top: 44, right: 24, bottom: 96, left: 72 };
const Y_FLOOR = 1e-12;

/** Presentation order and naming of the schemes. */
const SCHEME_LABELS: Record<string, Record<string, string>> = {
    error_vs_n: {
        centralized_fixed_n: "Algo-1",
        consensus_fixed_n: "Algo-2",
    },
    error_vs_stopping: {
        sprt: "Algo-1",
        basic: "Algo-2",
        aggregated: "Algo-3",
        accuracy_exchange: "Algo-4",
    },
};

const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"];

interface Layout {
    scene: Scene;
    xScale: Scale;
    yScale: Scale;
    useLog: boolean;
}

function seriesOrder(kind: string, scheme: string): number {
    const labels = Object.keys(SCHEME_LABELS[kind] ?? {});
    const i = labels.indexOf(scheme);
    return i === -1 ? labels.length : i;
}

function barEnds(p: SeriesPoint, useLog: boolean, yMin: number): [number, number] {
    // +-1 SE, clipped away from zero so a log axis stays finite
    const lo = Math.max(p.y - p.se, useLog ? p.y / 4 : yMin, Y_FLOOR);
    const hi = Math.max(p.y + p.se, Y_FLOOR);
    return [lo, hi];
}

/** Assemble the figure layout: one series per scheme with pixel coordinates.
 * For the stopping-time figure only Pareto-selected operating points are
 * drawn (the sweep's dominated points would shuffle the lines back and
 * forth). */
export function buildLayout(spec: FigureSpec, tables: ResultTable[]): Layout {
    const grouped = new Map<string, SeriesPoint[]>();
    const metadata: Record<string, string> = {};
    for (const table of tables) {
        Object.assign(metadata, table.metadata);
        for (const row of table.rows) {
            const x = spec.kind === "error_vs_n" ? row.n : row.mean_stop;
            if (x === null || !isFinite(row.estimate)) continue;
            if (spec.kind === "error_vs_stopping" && !row.pareto) continue;
            const bucket = grouped.get(row.scheme) ?? [];
            bucket.push({ x, y: row.estimate, se: row.se, px: 0, py: 0 });
            grouped.set(row.scheme, bucket);
        }
    }
    if (grouped.size === 0) {
        throw new EmptyInput(`no plottable rows for ${spec.kind}`);
    }

    const all: SeriesPoint[] = [...grouped.values()].flat();
    const useLog = spec.logErrorAxis && Math.min(...all.map((p) => p.y)) > 0;
    const xs = all.map((p) => p.x);
    const yValues = all.flatMap((p) => {
        const [lo, hi] = barEnds(p, useLog, Y_FLOOR);
        return [lo, hi, Math.max(p.y, Y_FLOOR)];
    });
    const xScale = linearScale(
        [Math.min(...xs), Math.max(...xs)],
        [MARGIN.left, WIDTH - MARGIN.right],
    );
    const yDomain: [number, number] = [Math.min(...yValues), Math.max(...yValues)];
    const yRange: [number, number] = [HEIGHT - MARGIN.bottom, MARGIN.top];
    const yScale = useLog ? logScale(yDomain, yRange) : linearScale(yDomain, yRange);

    const series: Series[] = [...grouped.entries()]
        .sort((a, b) =>
            seriesOrder(spec.kind, a[0]) - seriesOrder(spec.kind, b[0])
            || a[0].localeCompare(b[0]))
        .map(([scheme, points], i) => ({
            scheme,
            label: SCHEME_LABELS[spec.kind]?.[scheme] ?? scheme,
            color: PALETTE[i % PALETTE.length],
            points: points
                .slice()
                .sort((p, q) => p.x - q.x)
                .map((p) => ({
                    ...p,
                    px: xScale(p.x),
                    py: yScale(Math.max(p.y, yDomain[0])),
                })),
        }));

    const captionKeys = ["model_digest", "seed", "trials", "config_hash", "backend"];
    const caption = captionKeys
        .filter((k) => metadata[k] !== undefined)
        .map((k) => `${k}=${metadata[k]}`)
        .join("  ");

    return {
        scene: { spec, series, caption, width: WIDTH, height: HEIGHT },
        xScale,
        yScale,
        useLog,
    };
}

export function buildScene(spec: FigureSpec, tables: ResultTable[]): Scene {
    return buildLayout(spec, tables).scene;
}

function axes(layout: Layout): string {
    const { xScale, yScale, useLog, scene } = layout;
    const parts: string[] = [];
    const x0 = MARGIN.left;
    const x1 = WIDTH - MARGIN.right;
    const y0 = HEIGHT - MARGIN.bottom;
    const y1 = MARGIN.top;
    parts.push(`<line x1="${x0}" y1="${y0}" x2="${x1}" y2="${y0}" stroke="#333"/>`);
    parts.push(`<line x1="${x0}" y1="${y0}" x2="${x0}" y2="${y1}" stroke="#333"/>`);
    for (const t of xScale.ticks()) {
        const px = fmt(xScale(t));
        parts.push(`<line x1="${px}" y1="${y0}" x2="${px}" y2="${y0 + 5}" stroke="#333"/>`);
        parts.push(
            `<text x="${px}" y="${y0 + 20}" text-anchor="middle" font-size="11">${fmt(t, 4)}</text>`,
        );
    }
    for (const t of yScale.ticks()) {
        const py = fmt(yScale(t));
        parts.push(`<line x1="${x0 - 5}" y1="${py}" x2="${x0}" y2="${py}" stroke="#333"/>`);
        parts.push(`<line x1="${x0}" y1="${py}" x2="${x1}" y2="${py}" stroke="#eee"/>`);
        parts.push(
            `<text x="${x0 - 8}" y="${py}" text-anchor="end" dominant-baseline="middle" font-size="11">${fmt(t, 3)}</text>`,
        );
    }
    const xLabel = scene.spec.kind === "error_vs_n" ? "samples n" : "expected stopping time";
    const yLabel = useLog ? "error (log scale)" : "error";
    parts.push(
        `<text x="${(x0 + x1) / 2}" y="${y0 + 42}" text-anchor="middle" font-size="13">${xLabel}</text>`,
    );
    parts.push(
        `<text x="18" y="${(y0 + y1) / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 18 ${(y0 + y1) / 2})">${yLabel}</text>`,
    );
    return parts.join("\n");
}

/** Render the figure as a deterministic standalone SVG string. */
export function renderSvg(spec: FigureSpec, tables: ResultTable[]): { svg: string; scene: Scene } {
    const layout = buildLayout(spec, tables);
    const { scene, yScale, useLog } = layout;

    const body: string[] = [];
    body.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);
    const title = spec.title ?? (spec.kind === "error_vs_n"
        ? "Error vs number of samples"
        : "Error vs expected stopping time");
    body.push(
        `<text x="${WIDTH / 2}" y="24" text-anchor="middle" font-size="15" font-weight="bold">${title}</text>`,
    );
    body.push(axes(layout));

    for (const series of scene.series) {
        const pts = series.points;
        if (pts.length > 1) {
            const d = pts.map((p, i) => `${i === 0 ? "M" : "L"}${fmt(p.px)},${fmt(p.py)}`).join(" ");
            body.push(`<path d="${d}" fill="none" stroke="${series.color}" stroke-width="1.8"/>`);
        }
        for (const p of pts) {
            const [lo, hi] = barEnds(p, useLog, yScale.domain[0]);
            const pyLo = yScale(lo);
            const pyHi = yScale(hi);
            body.push(
                `<line x1="${fmt(p.px)}" y1="${fmt(pyLo)}" x2="${fmt(p.px)}" y2="${fmt(pyHi)}" stroke="${series.color}" stroke-width="1"/>`,
            );
            for (const end of [pyLo, pyHi]) {
                body.push(
                    `<line x1="${fmt(p.px - 3)}" y1="${fmt(end)}" x2="${fmt(p.px + 3)}" y2="${fmt(end)}" stroke="${series.color}" stroke-width="1"/>`,
                );
            }
            body.push(
                `<circle cx="${fmt(p.px)}" cy="${fmt(p.py)}" r="2.5" fill="${series.color}"/>`,
            );
        }
    }

    const legendX = WIDTH - MARGIN.right - 150;
    let legendY = MARGIN.top + 8;
    for (const series of scene.series) {
        body.push(
            `<line x1="${legendX}" y1="${legendY}" x2="${legendX + 26}" y2="${legendY}" stroke="${series.color}" stroke-width="2"/>`,
        );
        body.push(
            `<text x="${legendX + 32}" y="${legendY + 4}" font-size="12">${series.label}</text>`,
        );
        legendY += 18;
    }
    if (scene.caption) {
        body.push(
            `<text x="${MARGIN.left}" y="${HEIGHT - 14}" font-size="10" fill="#555">${scene.caption}</text>`,
        );
    }

    const svg = [
        `<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}" font-family="DejaVu Sans, sans-serif">`,
        ...body,
        "</svg>",
    ].join("\n");
    return { svg, scene };
}
