import { z } from "zod";

export class SchemaMismatch extends Error {
    constructor(message: string) {
        super(message);
        this.name = "SchemaMismatch";
    }
}

export class EmptyInput extends Error {
    constructor(message: string) {
        super(message);
        this.name = "EmptyInput";
    }
}

/** One operating point from a duodetect result CSV. */
export interface ResultRow {
    scheme: string;
    point: string;
    estimate: number;
    se: number;
    numerator: number;
    denominator: number;
    trials: number;
    n: number | null;
    mean_stop: number | null;
    mean_stop_se: number | null;
    did_not_stop: number;
    aborted: number;
    low_confidence: boolean;
    pareto: boolean;
}

export interface ResultTable {
    metadata: Record<string, string>;
    rows: ResultRow[];
}

export const figureSpecSchema = z.object({
    inputs: z.array(z.string()).min(1),
    kind: z.enum(["error_vs_n", "error_vs_stopping"]),
    output: z.string(),
    logErrorAxis: z.boolean().default(true),
    title: z.string().optional(),
});

export type FigureSpec = z.infer<typeof figureSpecSchema>;

export interface SeriesPoint {
    x: number;
    y: number;
    se: number;
    /** pixel coordinates after scaling */
    px: number;
    py: number;
}

export interface Series {
    scheme: string;
    label: string;
    color: string;
    points: SeriesPoint[];
}

/** Structured description of a rendered figure (used by the tests). */
export interface Scene {
    spec: FigureSpec;
    series: Series[];
    caption: string;
    width: number;
    height: number;
}
