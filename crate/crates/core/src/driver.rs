//! The minor search loop.
//!
//! Each round normalizes the working graph, then either contracts an
//! induced matching of good edges, shrinks to the dense core on the big
//! side, or terminates: with a clique in the big neighborhood of an
//! unassigned small vertex, or with an exhaustive search inside a small
//! dense neighborhood. Recursion on a smaller graph is realized by looping
//! on the same (mutated) working graph.

use std::fmt;

use crate::certificate::{verify_model, MinorModel};
use crate::dense_matching::{
    check_good_maximal, check_induced, classify, contract_matching, induced_submatching, maximal_good_matching,
};
use crate::error::{invariant, MinorError};
use crate::graph::{Graph, GraphError, VertexId};
use crate::minor_oracle::exhaustive_minor;
use crate::numeric::int;
use crate::pair_assignment::{
    assign_pairs, big_neighbors, build_prime_sets, check_registry, dense_core, neighborhood_clique,
};
use crate::preprocess::{normalize_density, trim_input, Config};

/// One recorded step of the search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    EdgeDeleted(VertexId, VertexId),
    VertexDeleted(VertexId),
    Contracted {
        keep: VertexId,
        fold: VertexId,
    },
    /// The search continues on a graph with `new_n` vertices, produced by
    /// step 5 (matching contraction) or step 8 (dense core).
    Recursed {
        step: u8,
        new_n: usize,
    },
    /// A model was found at step 10 or step 11.
    Found {
        step: u8,
    },
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::EdgeDeleted(u, v) => write!(f, "delete-edge {u} {v}"),
            TraceEvent::VertexDeleted(v) => write!(f, "delete-vertex {v}"),
            TraceEvent::Contracted { keep, fold } => write!(f, "contract {keep} {fold}"),
            TraceEvent::Recursed { step, new_n } => write!(f, "recurse {step} {new_n}"),
            TraceEvent::Found { step } => write!(f, "found {step}"),
        }
    }
}

/// What one round of the loop did.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// Vertices after normalization, at the start of the step.
    pub n: usize,
    pub m: usize,
    /// 5 (matching contracted), 8 (dense core), 10 or 11 (terminal).
    pub step: u8,
    /// Vertices left for the next round (equal to `n` for terminal rounds).
    pub next_n: usize,
}

#[derive(Clone, Debug, Default)]
pub struct RunStats {
    pub rounds: Vec<Round>,
    /// Primitive operations over all graphs touched, including the final
    /// certificate check.
    pub ops: u64,
}

impl RunStats {
    pub fn terminal_step(&self) -> Option<u8> {
        self.rounds.last().map(|r| r.step)
    }
}

#[derive(Clone, Debug)]
pub struct FindOutcome {
    pub model: MinorModel,
    pub stats: RunStats,
    /// Configuration warnings (non-strict runs outside the proven regime).
    pub warnings: Vec<String>,
    /// Recorded events when `Config::trace` is set.
    pub trace: Vec<TraceEvent>,
    /// The working graph as left by the last round, when tracing.
    pub final_graph: Option<Graph>,
}

/// Finds a K_t minor of `input`, whose average degree must be at least
/// `(2+ε)·g(t)`. The returned model is over `input`'s vertex ids and has
/// been checked against `input`.
pub fn find_minor(input: &Graph, cfg: &Config) -> Result<FindOutcome, MinorError> {
    cfg.validate()?;
    let t = cfg.t;
    let target = cfg.density_target();
    let mut warnings = Vec::new();
    if !cfg.meets_g_requirement() {
        let g = cfg.g.eval(t);
        let needed = cfg.g_requirement();
        if cfg.strict {
            return Err(MinorError::StrictPrecondition { g, needed });
        }
        warnings.push(format!(
            "g({t}) = {g} is below max(t, 2t/epsilon) = {needed}; the final exhaustive step is not guaranteed to succeed"
        ));
    }
    let actual = input.average_degree().map_err(|e| match e {
        GraphError::EmptyGraph => MinorError::InsufficientDensity { required: target, actual: int(0) },
        e => e.into(),
    })?;
    if actual < target {
        return Err(MinorError::InsufficientDensity { required: target, actual });
    }

    let input_ops = input.ops();
    let journal_input = cfg.trace.then(|| {
        let mut copy = input.clone();
        copy.enable_journal();
        copy
    });
    let source = journal_input.as_ref().unwrap_or(input);
    let mut g = trim_input(source, &target);
    let mut stats = RunStats::default();
    let mut step11_ops = 0;

    let model = loop {
        normalize_density(&mut g, &target)?;
        if cfg.audit {
            g.audit().map_err(MinorError::InternalInvariantViolation)?;
            g.audit_against(input).map_err(MinorError::InternalInvariantViolation)?;
        }
        let (n, m) = (g.n(), g.m());
        let part = classify(&g)?;
        let d = part.d;

        let matching = maximal_good_matching(&g, &part);
        if cfg.audit {
            check_good_maximal(&g, &part, &matching).map_err(MinorError::InternalInvariantViolation)?;
        }
        // |M| > n / (8d)  <=>  16·m·|M| > n²
        if 16 * m as i128 * matching.len() as i128 > (n as i128) * (n as i128) {
            let sub = induced_submatching(&g, &matching);
            if cfg.audit {
                check_induced(&g, &matching, &sub).map_err(MinorError::InternalInvariantViolation)?;
            }
            invariant!(!sub.is_empty(), "induced submatching is empty");
            invariant!(
                int(2) * d * d * int(sub.len() as i128) >= int(matching.len() as i128),
                "|M'| = {} is below |M| / 2d² with |M| = {}, d = {d}",
                sub.len(),
                matching.len()
            );
            contract_matching(&mut g, &sub)?;
            let next_n = g.n();
            // n' <= (1 - 1/(16d³))·n
            let d3 = d * d * d;
            invariant!(
                int(16) * d3 * int(next_n as i128) <= (int(16) * d3 - int(1)) * int(n as i128),
                "step 5 shrank {n} to only {next_n}"
            );
            invariant!(g.average_degree()? >= target, "contracted graph fell below the density target");
            g.record(TraceEvent::Recursed { step: 5, new_n: next_n });
            stats.rounds.push(Round { n, m, step: 5, next_n });
            continue;
        }

        let pp = build_prime_sets(&part, &matching)?;
        let reg = assign_pairs(&g, &pp);
        if cfg.audit {
            check_registry(&g, &pp, &reg).map_err(MinorError::InternalInvariantViolation)?;
        }
        let (a, b) = (reg.len() as i128, pp.big.len() as i128);
        if b > 0 && int(2 * a) >= d * int(b) {
            invariant!(int(b) * d <= int(2 * a), "step 8 core is larger than 2|A|/d");
            invariant!(int(b) * d <= int(2 * n as i128), "step 8 core is larger than 2n/d");
            invariant!((b as usize) < n, "step 8 core does not shrink the graph");
            dense_core(&mut g, &pp, &reg)?;
            invariant!(g.average_degree()? >= target, "dense core fell below the density target");
            let next_n = g.n();
            g.record(TraceEvent::Recursed { step: 8, new_n: next_n });
            stats.rounds.push(Round { n, m, step: 8, next_n });
            continue;
        }

        // Step 9: |S'| > |A|
        let Some(v) = pp.small.iter().copied().find(|&u| !reg.is_assigned(u)) else {
            return Err(MinorError::InternalInvariantViolation(format!(
                "every vertex of S' is assigned (|S'| = {}, |A| = {a})",
                pp.small.len()
            )));
        };
        let big_nb = big_neighbors(&g, &pp, v);
        if big_nb.len() >= t {
            let model = neighborhood_clique(&mut g, v, &pp, &reg, t)?;
            g.record(TraceEvent::Found { step: 10 });
            stats.rounds.push(Round { n, m, step: 10, next_n: n });
            break model;
        }

        // Step 11
        let mut keep: Vec<VertexId> = g.neighbors(v).filter(|&w| !pp.in_big(w)).collect();
        let small_nb = keep.len();
        keep.push(v);
        invariant!(
            int(keep.len() as i128) <= d * d + int(1),
            "fallback graph has {} vertices, more than d² + 1",
            keep.len()
        );
        if cfg.meets_g_requirement() {
            invariant!(small_nb >= 1, "vertex {v} has no neighbor in S'");
        }
        let (local, _) = g.induced_subgraph(&keep)?;
        if cfg.meets_g_requirement() {
            let local_d = local.average_degree()?;
            invariant!(local_d >= cfg.g.eval(t), "fallback graph has average degree {local_d} < g({t})");
        }
        let found = exhaustive_minor(&local, t);
        step11_ops += local.ops();
        g.record(TraceEvent::Found { step: 11 });
        stats.rounds.push(Round { n, m, step: 11, next_n: n });
        match found {
            Some(model) => break model,
            None => {
                let reason = if cfg.meets_g_requirement() {
                    "exhaustive search failed although g(t) >= max(t, 2t/epsilon)".to_string()
                } else {
                    let g_t = cfg.g.eval(t);
                    let why = if g_t < int(t as i128) { "g(t) < t" } else { "epsilon < 2t/g(t)" };
                    format!("the neighborhood of vertex {v} has no K_{t} minor; the guarantee was waived because {why}")
                };
                return Err(MinorError::NotFound(reason));
            }
        }
    };

    let verdict = verify_model(input, &model, t)?;
    if !verdict.is_valid() {
        let list: Vec<String> = verdict.violations().iter().map(ToString::to_string).collect();
        return Err(MinorError::InternalInvariantViolation(format!(
            "returned model fails verification: {}",
            list.join("; ")
        )));
    }
    let source_ops = if cfg.trace { source.ops() } else { 0 };
    stats.ops = g.ops() + step11_ops + (input.ops() - input_ops) + source_ops;

    let trace = g.take_journal();
    Ok(FindOutcome { model, stats, warnings, trace, final_graph: if cfg.trace { Some(g) } else { None } })
}

/// Applies the mutation events of a trace to a copy of `original`.
pub fn replay(original: &Graph, events: &[TraceEvent]) -> Result<Graph, GraphError> {
    let mut g = original.clone();
    for ev in events {
        match *ev {
            TraceEvent::EdgeDeleted(u, v) => g.delete_edge(u, v)?,
            TraceEvent::VertexDeleted(v) => g.delete_vertex(v)?,
            TraceEvent::Contracted { keep, fold } => g.contract_edge(keep, fold)?,
            TraceEvent::Recursed { .. } | TraceEvent::Found { .. } => {}
        }
    }
    Ok(g)
}
