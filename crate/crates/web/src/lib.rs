//! Browser bindings for the demo page in `www/`.
//!
//! Graphs and models cross the boundary as the same text formats the
//! command-line tool reads and writes, so anything shown on the page can be
//! pasted into a file and checked with `ktminor verify`.

use std::fmt::Write as _;

use wasm_bindgen::prelude::*;

use kt_minor::gen::{gen_planted, gen_random};
use kt_minor::io::{parse_edge_list, parse_model, serialize_edge_list, serialize_model};
use kt_minor::minor_oracle::{partition_oracle_model, ORACLE_LIMIT};
use kt_minor::numeric::parse_rational;
use kt_minor::{find_minor, verify_model, Config, MinorModel};

/// Result of a search, shaped for the page.
#[wasm_bindgen(getter_with_clone)]
#[derive(Clone, Debug)]
pub struct SearchReport {
    pub found: bool,
    /// Model text (`B<i>: ...` lines), empty when nothing was found.
    pub model: String,
    /// One line per round, or the error.
    pub summary: String,
    /// Branch set index (1-based) per vertex id, 0 for unused vertices.
    pub colors: Vec<u32>,
}

fn colors(n: usize, model: &MinorModel) -> Vec<u32> {
    let mut out = vec![0; n];
    for (i, set) in model.branch_sets.iter().enumerate() {
        for &v in set {
            out[v as usize] = i as u32 + 1;
        }
    }
    out
}

fn failure(summary: String) -> SearchReport {
    SearchReport { found: false, model: String::new(), summary, colors: Vec::new() }
}

/// Edge-list text for a seeded random graph (`kind = "random"`, `param` =
/// edge count) or a planted K_t (`kind = "planted"`, `param` = t, with `n`
/// noise edges).
#[wasm_bindgen]
pub fn generate(kind: &str, n: usize, param: usize, seed: u64) -> Result<String, String> {
    let g = match kind {
        "random" => gen_random(n, param, seed).map_err(|e| e.to_string())?,
        "planted" => gen_planted(n, param, n, seed).map_err(|e| e.to_string())?.0,
        other => return Err(format!("unknown generator {other:?}")),
    };
    Ok(serialize_edge_list(&g))
}

/// Runs the linear-time search on an edge list.
#[wasm_bindgen]
pub fn find(edges: &str, t: usize, epsilon: &str) -> SearchReport {
    let g = match parse_edge_list(edges) {
        Ok((g, _)) => g,
        Err(e) => return failure(format!("graph: {e}")),
    };
    let Some(epsilon) = parse_rational(epsilon) else {
        return failure(format!("epsilon: cannot read {epsilon:?}"));
    };
    match find_minor(&g, &Config::new(t, epsilon)) {
        Ok(out) => {
            let mut summary = String::new();
            for w in &out.warnings {
                writeln!(summary, "warning: {w}").unwrap();
            }
            for r in &out.stats.rounds {
                writeln!(summary, "step {:>2}: n={} m={} -> n={}", r.step, r.n, r.m, r.next_n).unwrap();
            }
            write!(summary, "{} primitive operations", out.stats.ops).unwrap();
            SearchReport {
                found: true,
                model: serialize_model(&out.model),
                summary,
                colors: colors(g.capacity(), &out.model),
            }
        }
        Err(e) => failure(e.to_string()),
    }
}

/// Checks a model against an edge list; returns `valid` or one violation
/// per line.
#[wasm_bindgen]
pub fn verify(edges: &str, model: &str, t: usize) -> String {
    let g = match parse_edge_list(edges) {
        Ok((g, _)) => g,
        Err(e) => return format!("graph: {e}"),
    };
    let model = match parse_model(model) {
        Ok(m) => m,
        Err(e) => return format!("model: {e}"),
    };
    match verify_model(&g, &model, t) {
        Ok(v) if v.is_valid() => "valid".to_string(),
        Ok(v) => v.violations().iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
        Err(e) => e.to_string(),
    }
}

/// Brute-force answer for graphs of at most ten vertices.
#[wasm_bindgen]
pub fn oracle(edges: &str, t: usize) -> SearchReport {
    let g = match parse_edge_list(edges) {
        Ok((g, _)) => g,
        Err(e) => return failure(format!("graph: {e}")),
    };
    match partition_oracle_model(&g, t) {
        Ok(Some(model)) => SearchReport {
            found: true,
            model: serialize_model(&model),
            summary: format!("K_{t} minor found by exhaustive partition search"),
            colors: colors(g.capacity(), &model),
        },
        Ok(None) => failure(format!("no K_{t} minor")),
        Err(e) => failure(e.to_string()),
    }
}

#[wasm_bindgen]
pub fn oracle_limit() -> usize {
    ORACLE_LIMIT
}
