import { Resvg } from "@resvg/resvg-js";

/** Rasterize an SVG string to PNG bytes (2x supersampling). */
export function svgToPng(svg: string, width = 1440): Buffer {
    const resvg = new Resvg(svg, {
        fitTo: { mode: "width", value: width },
        font: { loadSystemFonts: true, defaultFontFamily: "DejaVu Sans" },
        background: "white",
    });
    return resvg.render().asPng();
}
