export interface Scale {
    (value: number): number;
    ticks(): number[];
    domain: [number, number];
}

export function linearScale(domain: [number, number], range: [number, number]): Scale {
    const [d0, d1] = domain;
    const [r0, r1] = range;
    const span = d1 - d0 || 1;
    const fn = ((v: number) => r0 + ((v - d0) / span) * (r1 - r0)) as Scale;
    fn.domain = domain;
    fn.ticks = () => {
        const step = niceStep(span / 6);
        const start = Math.ceil(d0 / step) * step;
        const out: number[] = [];
        for (let v = start; v <= d1 + 1e-9 * span; v += step) {
            out.push(roundTo(v, step));
        }
        return out;
    };
    return fn;
}

export function logScale(domain: [number, number], range: [number, number]): Scale {
    const lo = Math.log10(domain[0]);
    const hi = Math.log10(domain[1]);
    const [r0, r1] = range;
    const span = hi - lo || 1;
    const fn = ((v: number) => r0 + ((Math.log10(v) - lo) / span) * (r1 - r0)) as Scale;
    fn.domain = domain;
    fn.ticks = () => {
        const out: number[] = [];
        for (let e = Math.ceil(lo - 1e-9); e <= Math.floor(hi + 1e-9); e += 1) {
            out.push(10 ** e);
        }
        if (out.length < 2) {
            out.length = 0;
            const step = niceStep((domain[1] - domain[0]) / 4);
            for (let v = Math.ceil(domain[0] / step) * step; v <= domain[1]; v += step) {
                out.push(roundTo(v, step));
            }
        }
        return out;
    };
    return fn;
}

function niceStep(rough: number): number {
    const power = 10 ** Math.floor(Math.log10(rough));
    const base = rough / power;
    const nice = base >= 5 ? 5 : base >= 2 ? 2 : 1;
    return nice * power;
}

function roundTo(v: number, step: number): number {
    const digits = Math.max(0, -Math.floor(Math.log10(step)) + 1);
    return Number(v.toFixed(digits));
}

/** Stable short formatting for tick labels and path data. */
export function fmt(v: number, digits = 6): string {
    if (!isFinite(v)) return String(v);
    const s = v.toPrecision(digits);
    return s.includes(".") || s.includes("e")
        ? s.replace(/\.?0+($|e)/, "$1")
        : s;
}
