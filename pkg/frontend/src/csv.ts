import * as fs from "fs";
import Papa from "papaparse";

import { ResultRow, ResultTable, SchemaMismatch } from "./types";

const REQUIRED_COLUMNS = [
    "scheme", "point", "estimate", "se", "numerator", "denominator", "trials",
    "n", "mean_stop", "mean_stop_se", "did_not_stop", "aborted",
    "low_confidence", "pareto",
];

function num(value: string): number {
    return value === "" ? NaN : Number(value);
}

function optional(value: string): number | null {
    return value === "" ? null : Number(value);
}

/** Parse a duodetect result CSV: '# key=value' metadata lines, then a
 * header row, then data rows. */
export function parseResultCsv(path: string): ResultTable {
    if (!fs.existsSync(path)) {
        throw new SchemaMismatch(`input CSV not found: ${path}`);
    }
    const raw = fs.readFileSync(path, "utf8");
    const metadata: Record<string, string> = {};
    const dataLines: string[] = [];
    for (const line of raw.split(/\r?\n/)) {
        if (line.startsWith("#")) {
            const body = line.replace(/^#\s*/, "");
            const eq = body.indexOf("=");
            if (eq > 0) metadata[body.slice(0, eq)] = body.slice(eq + 1);
        } else if (line.trim() !== "") {
            dataLines.push(line);
        }
    }
    if (dataLines.length === 0) {
        throw new SchemaMismatch(`no header row in ${path}`);
    }
    const parsed = Papa.parse<Record<string, string>>(dataLines.join("\n"), {
        header: true,
        skipEmptyLines: true,
    });
    if (parsed.errors.length > 0) {
        throw new SchemaMismatch(
            `CSV parse error in ${path}: ${parsed.errors[0].message}`,
        );
    }
    const columns = parsed.meta.fields ?? [];
    for (const required of REQUIRED_COLUMNS) {
        if (!columns.includes(required)) {
            throw new SchemaMismatch(`missing column '${required}' in ${path}`);
        }
    }
    const rows: ResultRow[] = parsed.data.map((rec) => ({
        scheme: rec.scheme,
        point: rec.point,
        estimate: num(rec.estimate),
        se: num(rec.se),
        numerator: num(rec.numerator),
        denominator: num(rec.denominator),
        trials: num(rec.trials),
        n: optional(rec.n),
        mean_stop: optional(rec.mean_stop),
        mean_stop_se: optional(rec.mean_stop_se),
        did_not_stop: num(rec.did_not_stop),
        aborted: num(rec.aborted),
        low_confidence: rec.low_confidence === "1",
        pareto: rec.pareto === "1",
    }));
    return { metadata, rows };
}
