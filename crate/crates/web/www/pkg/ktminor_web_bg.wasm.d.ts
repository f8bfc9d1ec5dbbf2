/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_get_searchreport_colors: (a: number) => [number, number];
export const __wbg_get_searchreport_found: (a: number) => number;
export const __wbg_get_searchreport_model: (a: number) => [number, number];
export const __wbg_get_searchreport_summary: (a: number) => [number, number];
export const __wbg_searchreport_free: (a: number, b: number) => void;
export const __wbg_set_searchreport_colors: (a: number, b: number, c: number) => void;
export const __wbg_set_searchreport_found: (a: number, b: number) => void;
export const __wbg_set_searchreport_model: (a: number, b: number, c: number) => void;
export const __wbg_set_searchreport_summary: (a: number, b: number, c: number) => void;
export const find: (a: number, b: number, c: number, d: number, e: number) => number;
export const generate: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number, number];
export const oracle: (a: number, b: number, c: number) => number;
export const oracle_limit: () => number;
export const verify: (a: number, b: number, c: number, d: number, e: number) => [number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
