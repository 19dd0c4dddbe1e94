export { parseResultCsv } from "./csv";
export { svgToPng } from "./raster";
export { buildScene, renderSvg } from "./render";
export { renderSpecFile, main } from "./cli";
export {
    EmptyInput,
    FigureSpec,
    figureSpecSchema,
    ResultRow,
    ResultTable,
    Scene,
    SchemaMismatch,
    Series,
} from "./types";
