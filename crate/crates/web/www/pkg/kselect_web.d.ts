/* tslint:disable */
/* eslint-disable */

/**
 * Degrees of freedom of the `k`-cluster fit as the nuisance model size
 * `k'` runs over `k..=k_prime_max`, on a generated mixture.
 */
export function df_vs_kprime(scheme: string, clusters: number, d: number, n: number, separation: number, k: number, k_prime_max: number, seed: number): string;

/**
 * Generates a labelled mixture, fits k-means for `1..=k_max` and runs all
 * six selectors. Returns the first two coordinates for plotting, each
 * selector's choice and scores, and the degrees-of-freedom curve.
 */
export function simulate_and_select(scheme: string, k: number, d: number, n: number, separation: number, k_max: number, seed: number): string;

/**
 * Sample `Cov(1[X > t], X) / sigma^2` against `phi((t - mu) / sigma) / sigma`
 * for `X ~ N(mu, sigma^2)`.
 */
export function stein_check(mu: number, sigma: number, threshold: number, draws: number, seed: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly df_vs_kprime: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number, i: number) => [number, number, number, number];
    readonly simulate_and_select: (a: number, b: number, c: number, d: number, e: number, f: number, g: number, h: number) => [number, number, number, number];
    readonly stein_check: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
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
