/* tslint:disable */
/* eslint-disable */

export class RevivalCurves {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly exact: Float64Array;
    readonly firstOrder: Float64Array;
    readonly noSplitting: Float64Array;
    readonly periods: Float64Array;
    readonly tailMassBound: number;
    readonly twoMode: Float64Array;
}

export class Wigner {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly axis: Float64Array;
    readonly meanP: number;
    readonly meanX: number;
    readonly negativity: number;
    readonly normal: number;
    readonly tangential: number;
    readonly values: Float64Array;
}

export function photonDistribution(g: number, omega0: number, n_max: number, level: number, time: number, rows: number): Float64Array;

export function revivalCurves(g: number, omega0: number, n_max: number, level: number, t_max: number, steps: number): RevivalCurves;

export function wignerImage(g: number, omega0: number, n_max: number, level: number, time: number, min: number, max: number, points: number): Wigner;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_revivalcurves_free: (a: number, b: number) => void;
    readonly __wbg_wigner_free: (a: number, b: number) => void;
    readonly photonDistribution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly revivalCurves: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
    readonly revivalcurves_exact: (a: number) => [number, number];
    readonly revivalcurves_firstOrder: (a: number) => [number, number];
    readonly revivalcurves_noSplitting: (a: number) => [number, number];
    readonly revivalcurves_periods: (a: number) => [number, number];
    readonly revivalcurves_tailMassBound: (a: number) => number;
    readonly revivalcurves_twoMode: (a: number) => [number, number];
    readonly wignerImage: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
    readonly wigner_axis: (a: number) => [number, number];
    readonly wigner_meanP: (a: number) => number;
    readonly wigner_meanX: (a: number) => number;
    readonly wigner_negativity: (a: number) => number;
    readonly wigner_normal: (a: number) => number;
    readonly wigner_tangential: (a: number) => number;
    readonly wigner_values: (a: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
