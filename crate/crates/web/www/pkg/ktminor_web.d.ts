/* tslint:disable */
/* eslint-disable */

/**
 * Result of a search, shaped for the page.
 */
export class SearchReport {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * Branch set index (1-based) per vertex id, 0 for unused vertices.
     */
    colors: Uint32Array;
    found: boolean;
    /**
     * Model text (`B<i>: ...` lines), empty when nothing was found.
     */
    model: string;
    /**
     * One line per round, or the error.
     */
    summary: string;
}

/**
 * Runs the linear-time search on an edge list.
 */
export function find(edges: string, t: number, epsilon: string): SearchReport;

/**
 * Edge-list text for a seeded random graph (`kind = "random"`, `param` =
 * edge count) or a planted K_t (`kind = "planted"`, `param` = t, with `n`
 * noise edges).
 */
export function generate(kind: string, n: number, param: number, seed: bigint): string;

/**
 * Brute-force answer for graphs of at most ten vertices.
 */
export function oracle(edges: string, t: number): SearchReport;

export function oracle_limit(): number;

/**
 * Checks a model against an edge list; returns `valid` or one violation
 * per line.
 */
export function verify(edges: string, model: string, t: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_get_searchreport_colors: (a: number) => [number, number];
    readonly __wbg_get_searchreport_found: (a: number) => number;
    readonly __wbg_get_searchreport_model: (a: number) => [number, number];
    readonly __wbg_get_searchreport_summary: (a: number) => [number, number];
    readonly __wbg_searchreport_free: (a: number, b: number) => void;
    readonly __wbg_set_searchreport_colors: (a: number, b: number, c: number) => void;
    readonly __wbg_set_searchreport_found: (a: number, b: number) => void;
    readonly __wbg_set_searchreport_model: (a: number, b: number, c: number) => void;
    readonly __wbg_set_searchreport_summary: (a: number, b: number, c: number) => void;
    readonly find: (a: number, b: number, c: number, d: number, e: number) => number;
    readonly generate: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number, number];
    readonly oracle: (a: number, b: number, c: number) => number;
    readonly oracle_limit: () => number;
    readonly verify: (a: number, b: number, c: number, d: number, e: number) => [number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
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
