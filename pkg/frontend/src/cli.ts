import * as fs from "fs";
import * as path from "path";

import { parseResultCsv } from "./csv";
import { svgToPng } from "./raster";
import { renderSvg } from "./render";
import { EmptyInput, figureSpecSchema, SchemaMismatch } from "./types";

/** Render one figure spec: writes <output>.svg and <output>.png. */
export function renderSpecFile(specPath: string): { svgPath: string; pngPath: string } {
    const raw = JSON.parse(fs.readFileSync(specPath, "utf8"));
    const spec = figureSpecSchema.parse(raw);
    const baseDir = path.dirname(specPath);
    const tables = spec.inputs.map((input) =>
        parseResultCsv(path.isAbsolute(input) ? input : path.join(baseDir, input)),
    );
    const { svg } = renderSvg(spec, tables);
    const outBase = path.isAbsolute(spec.output)
        ? spec.output
        : path.join(baseDir, spec.output);
    const svgPath = outBase.endsWith(".svg") ? outBase : `${outBase}.svg`;
    const pngPath = svgPath.replace(/\.svg$/, ".png");
    fs.mkdirSync(path.dirname(svgPath), { recursive: true });
    fs.writeFileSync(svgPath, svg);
    fs.writeFileSync(pngPath, svgToPng(svg));
    return { svgPath, pngPath };
}

export function main(argv: string[]): number {
    if (argv.length === 0) {
        console.error("usage: cli.js FIGURE_SPEC.json [...]");
        return 2;
    }
    for (const specPath of argv) {
        try {
            const { svgPath, pngPath } = renderSpecFile(specPath);
            console.log(`${specPath} -> ${svgPath}, ${pngPath}`);
        } catch (err) {
            if (err instanceof SchemaMismatch || err instanceof EmptyInput) {
                console.error(`${specPath}: ${err.name}: ${err.message}`);
                return 1;
            }
            throw err;
        }
    }
    return 0;
}

if (require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
