//! Density normalization: trim the edge set so the average degree sits in
//! the window `[D, D+1]` with `D = (2+ε)·g(t)`, then peel low-degree
//! vertices until the minimum degree exceeds half the average degree.

use std::collections::BTreeMap;

use rustc_hash::FxHashMap;

use crate::error::{invariant, MinorError};
use crate::graph::{Graph, VertexId};
use crate::numeric::{ceil_real, floor, frac, int, is_positive, Rational};

/// The extremal function `g(t)`: the average degree that forces a K_t minor.
///
/// Without overrides this uses the exact small values `g(t) = 2(t-2)` for
/// `3 <= t <= 7` and `c·t·sqrt(log2 t)` (rounded up to a multiple of
/// 1/1000) beyond, with `c = 4` unless configured.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GFunction {
    table: BTreeMap<usize, Rational>,
    constant: Rational,
}

impl Default for GFunction {
    fn default() -> Self {
        GFunction { table: BTreeMap::new(), constant: int(4) }
    }
}

impl GFunction {
    pub fn with_constant(constant: Rational) -> Result<Self, MinorError> {
        if !is_positive(&constant) {
            return Err(MinorError::InvalidConfig(format!("g constant must be positive, got {constant}")));
        }
        Ok(GFunction { table: BTreeMap::new(), constant })
    }

    /// Overrides individual values; the result must stay positive and
    /// non-decreasing in `t`.
    pub fn with_table(mut self, table: BTreeMap<usize, Rational>) -> Result<Self, MinorError> {
        for (&t, v) in &table {
            if t == 0 || !is_positive(v) {
                return Err(MinorError::InvalidConfig(format!("bad g-table entry t={t} value={v}")));
            }
        }
        self.table.extend(table);
        let last = self.table.keys().next_back().copied().unwrap_or(0);
        for t in 1..=last {
            if self.eval(t + 1) < self.eval(t) {
                return Err(MinorError::InvalidConfig(format!(
                    "g must be non-decreasing, but g({}) = {} < g({t}) = {}",
                    t + 1,
                    self.eval(t + 1),
                    self.eval(t)
                )));
            }
        }
        Ok(self)
    }

    pub fn eval(&self, t: usize) -> Rational {
        if let Some(v) = self.table.get(&t) {
            return *v;
        }
        match t {
            0..=2 => int(1),
            3..=7 => int(2 * (t as i128 - 2)),
            _ => {
                let tf = t as f64;
                let c = *self.constant.numer() as f64 / *self.constant.denom() as f64;
                ceil_real(c * tf * tf.log2().sqrt(), 1000)
            }
        }
    }
}

/// Parameters of one minor search.
#[derive(Clone, Debug)]
pub struct Config {
    pub t: usize,
    pub epsilon: Rational,
    pub g: GFunction,
    /// Refuse to run unless `g(t) >= max(t, 2t/ε)`.
    pub strict: bool,
    /// Collect mutation events into the outcome.
    pub trace: bool,
    /// Run full-scan invariant checks every round (slow).
    pub audit: bool,
}

impl Config {
    pub fn new(t: usize, epsilon: Rational) -> Self {
        Config { t, epsilon, g: GFunction::default(), strict: false, trace: false, audit: false }
    }

    pub fn validate(&self) -> Result<(), MinorError> {
        if self.t < 3 {
            return Err(MinorError::InvalidConfig(format!("t must be at least 3, got {}", self.t)));
        }
        if !is_positive(&self.epsilon) {
            return Err(MinorError::InvalidConfig(format!("epsilon must be positive, got {}", self.epsilon)));
        }
        Ok(())
    }

    /// `D = (2+ε)·g(t)`.
    pub fn density_target(&self) -> Rational {
        (int(2) + self.epsilon) * self.g.eval(self.t)
    }

    /// `max(t, 2t/ε)`, the lower bound on `g(t)` that makes every step
    /// provably succeed.
    pub fn g_requirement(&self) -> Rational {
        let t = int(self.t as i128);
        let via_eps = int(2) * t / self.epsilon;
        if via_eps > t {
            via_eps
        } else {
            t
        }
    }

    pub fn meets_g_requirement(&self) -> bool {
        self.g.eval(self.t) >= self.g_requirement()
    }
}

/// Counts of what normalization removed.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NormalizeReport {
    pub edges_deleted: usize,
    pub vertices_deleted: usize,
}

/// Copies `input` keeping only the first `⌊(D+1)·n/2⌋` edges in scan
/// order (ascending vertex, then neighbor insertion order). The remaining
/// edges are never read unless the input journal is on, in which case
/// each dropped edge is recorded as a deletion.
pub fn trim_input(input: &Graph, target: &Rational) -> Graph {
    let n = input.n() as i128;
    let cap = floor(&((target + int(1)) * int(n) / int(2))).max(0) as usize;
    if input.m() <= cap {
        input.charge((input.n() + 2 * input.m()) as u64);
        let mut out = input.clone();
        out.take_journal();
        return out;
    }
    let mut out = input.edgeless_copy();
    let mut kept = 0usize;
    let mut dropped = Vec::new();
    'scan: for v in input.vertices() {
        for w in input.neighbors(v) {
            if v >= w {
                continue;
            }
            if kept < cap {
                out.add_edge(v, w).expect("both endpoints live");
                kept += 1;
            } else if input.journal_enabled() {
                dropped.push((v, w));
            } else {
                break 'scan;
            }
        }
    }
    for (v, w) in dropped {
        out.record(crate::driver::TraceEvent::EdgeDeleted(v, w));
    }
    out
}

/// Min/max degree bucket queue over the live vertices of one graph.
struct DegreeBuckets {
    buckets: Vec<Vec<VertexId>>,
    slot: FxHashMap<VertexId, usize>,
    min: usize,
    max: usize,
}

impl DegreeBuckets {
    fn new(g: &Graph) -> Self {
        let max = g.max_degree().unwrap_or(0);
        let mut buckets = vec![Vec::new(); max + 1];
        let mut slot = FxHashMap::default();
        slot.reserve(g.n());
        for v in g.vertices() {
            let d = g.degree(v);
            slot.insert(v, buckets[d].len());
            buckets[d].push(v);
        }
        g.charge(g.n() as u64);
        DegreeBuckets { buckets, slot, min: 0, max }
    }

    fn remove(&mut self, v: VertexId, deg: usize) {
        let i = self.slot.remove(&v).expect("vertex is queued");
        let bucket = &mut self.buckets[deg];
        bucket.swap_remove(i);
        if let Some(&moved) = bucket.get(i) {
            self.slot.insert(moved, i);
        }
    }

    fn decrement(&mut self, v: VertexId, old_deg: usize) {
        self.remove(v, old_deg);
        self.slot.insert(v, self.buckets[old_deg - 1].len());
        self.buckets[old_deg - 1].push(v);
        self.min = self.min.min(old_deg - 1);
    }

    fn min_vertex(&mut self) -> Option<VertexId> {
        while self.min < self.buckets.len() && self.buckets[self.min].is_empty() {
            self.min += 1;
        }
        self.buckets.get(self.min).and_then(|b| b.last().copied())
    }

    fn max_vertex(&mut self) -> Option<VertexId> {
        loop {
            if let Some(&v) = self.buckets[self.max].last() {
                return Some(v);
            }
            if self.max == 0 {
                return None;
            }
            self.max -= 1;
        }
    }
}

/// Brings `g` into the window `D <= d(g) <= D+1` with minimum degree
/// greater than `d(g)/2`, by interleaving vertex peeling and edge removal.
///
/// A vertex of degree `k` is peeled when `2k <= d(g)`, or when
/// `2k <= D+1` while `2m - (D+1)n > -2`. Neither rule can pull the
/// average degree below `D`, so the graph never empties. Edges are removed
/// at a maximum-degree vertex only while `d(g) > D+1`. When the final graph
/// keeps `2m - (D+1)n > -2` (always the case if it started with
/// `d >= D+1 - 2/n`) the minimum degree also exceeds `(D+1)/2`.
pub fn normalize_density(g: &mut Graph, target: &Rational) -> Result<NormalizeReport, MinorError> {
    let actual = g.average_degree()?;
    if actual < *target {
        return Err(MinorError::InsufficientDensity { required: *target, actual });
    }
    if !is_positive(target) {
        return Err(MinorError::InvalidConfig(format!("density target must be positive, got {target}")));
    }
    // D = p/q; all tests below are integer cross-multiplications.
    let p = *target.numer();
    let q = *target.denom();
    let above_floor = |m: usize, n: usize| 2 * m as i128 * q >= p * n as i128;
    let above_window = |m: usize, n: usize| 2 * m as i128 * q > (p + q) * n as i128;
    // 2m - (D+1)n > -2
    let slack_ok = |m: usize, n: usize| 2 * m as i128 * q - (p + q) * n as i128 > -2 * q;

    let mut report = NormalizeReport::default();
    let mut queue = DegreeBuckets::new(g);
    loop {
        while let Some(v) = queue.min_vertex() {
            let k = g.degree(v);
            let (n, m) = (g.n(), g.m());
            let half_avg = k * n <= m;
            let half_window = 2 * k as i128 * q <= p + q && slack_ok(m, n);
            if !(half_avg || half_window) {
                break;
            }
            queue.remove(v, k);
            for w in g.neighbors(v).collect::<Vec<_>>() {
                queue.decrement(w, g.degree(w));
            }
            g.delete_vertex(v)?;
            report.vertices_deleted += 1;
            invariant!(above_floor(g.m(), g.n()), "peeling vertex {v} dropped the average degree below {target}");
        }
        if !above_window(g.m(), g.n()) {
            break;
        }
        let u = queue.max_vertex().expect("graph is non-empty");
        let w = g.last_neighbor(u).expect("maximum-degree vertex has a neighbor");
        let (du, dw) = (g.degree(u), g.degree(w));
        queue.decrement(u, du);
        queue.decrement(w, dw);
        g.delete_edge(u, w)?;
        report.edges_deleted += 1;
        invariant!(above_floor(g.m(), g.n()), "edge removal dropped the average degree below {target}");
    }

    invariant!(g.n() > 0, "normalization emptied the graph");
    let d = g.average_degree()?;
    invariant!(d >= *target && d <= target + int(1), "average degree {d} left the window [{target}, {target}+1]");
    let delta = g.min_degree().unwrap_or(0);
    invariant!(int(2 * delta as i128) > d, "minimum degree {delta} is not above half of {d}");
    g.compact();
    Ok(report)
}

/// True when every live vertex has degree greater than `bound`.
pub fn min_degree_exceeds(g: &Graph, bound: &Rational) -> bool {
    g.vertices().all(|v| int(g.degree(v) as i128) > *bound)
}

/// `(D+1)/2`.
pub fn half_window(target: &Rational) -> Rational {
    (target + int(1)) * frac(1, 2)
}
