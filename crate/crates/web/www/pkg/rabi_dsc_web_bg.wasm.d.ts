/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_revivalcurves_free: (a: number, b: number) => void;
export const __wbg_wigner_free: (a: number, b: number) => void;
export const photonDistribution: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
export const revivalCurves: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number];
export const revivalcurves_exact: (a: number) => [number, number];
export const revivalcurves_firstOrder: (a: number) => [number, number];
export const revivalcurves_noSplitting: (a: number) => [number, number];
export const revivalcurves_periods: (a: number) => [number, number];
export const revivalcurves_tailMassBound: (a: number) => number;
export const revivalcurves_twoMode: (a: number) => [number, number];
export const wignerImage: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number];
export const wigner_axis: (a: number) => [number, number];
export const wigner_meanP: (a: number) => number;
export const wigner_meanX: (a: number) => number;
export const wigner_negativity: (a: number) => number;
export const wigner_normal: (a: number) => number;
export const wigner_tangential: (a: number) => number;
export const wigner_values: (a: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
