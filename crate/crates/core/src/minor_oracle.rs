//! Exhaustive K_t-minor search for constant-size graphs, and an
//! independent brute-force oracle used to cross-check it.

use rustc_hash::FxHashSet;
use thiserror::Error;

use crate::certificate::MinorModel;
use crate::graph::{Graph, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("partition oracle supports at most {limit} vertices, graph has {n}")]
    SizeLimit { n: usize, limit: usize },
}

/// Largest graph the partition oracle accepts.
pub const ORACLE_LIMIT: usize = 10;

#[derive(Clone, Copy, Debug, Default)]
pub struct ExhaustiveOptions {
    /// Remember adjacency states that are known to fail.
    pub memo: bool,
}

/// Adjacency bitsets over local indices `0..k`. A fixed edge is one the
/// search has decided never to contract: its ends lie in different branch
/// sets (or outside all of them).
#[derive(Clone)]
struct State {
    words: usize,
    alive: Vec<u64>,
    rows: Vec<Vec<u64>>,
    fixed: Vec<Vec<u64>>,
    groups: Vec<Vec<u32>>,
    live: usize,
    m: usize,
}

fn test_bit(bits: &[u64], i: usize) -> bool {
    bits[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn clear_bit(bits: &mut [u64], i: usize) {
    bits[i / 64] &= !(1 << (i % 64));
}

fn count(bits: &[u64]) -> usize {
    bits.iter().map(|w| w.count_ones() as usize).sum()
}

fn ones(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}

impl State {
    fn from_graph(g: &Graph) -> (State, Vec<VertexId>) {
        let ids: Vec<VertexId> = g.vertices().collect();
        let k = ids.len();
        let words = k.div_ceil(64).max(1);
        let index: rustc_hash::FxHashMap<VertexId, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut rows = vec![vec![0u64; words]; k];
        for (i, &v) in ids.iter().enumerate() {
            for w in g.neighbors(v) {
                set_bit(&mut rows[i], index[&w]);
            }
        }
        let mut alive = vec![0u64; words];
        for i in 0..k {
            set_bit(&mut alive, i);
        }
        let state = State {
            words,
            alive,
            fixed: vec![vec![0u64; words]; k],
            rows,
            groups: (0..k as u32).map(|i| vec![i]).collect(),
            live: k,
            m: g.m(),
        };
        (state, ids)
    }

    fn degree(&self, v: usize) -> usize {
        count(&self.rows[v])
    }

    fn delete_vertex(&mut self, v: usize) {
        let row = std::mem::replace(&mut self.rows[v], vec![0; self.words]);
        self.fixed[v].fill(0);
        for w in ones(&row) {
            clear_bit(&mut self.rows[w], v);
            clear_bit(&mut self.fixed[w], v);
        }
        self.m -= count(&row);
        clear_bit(&mut self.alive, v);
        self.live -= 1;
    }

    fn fix_edge(&mut self, u: usize, w: usize) {
        set_bit(&mut self.fixed[u], w);
        set_bit(&mut self.fixed[w], u);
    }

    /// Merges `fold` into `keep` along an unfixed edge. A merged edge is
    /// fixed if either of its originals was.
    fn contract(&mut self, keep: usize, fold: usize) {
        let row = std::mem::replace(&mut self.rows[fold], vec![0; self.words]);
        let fixed = std::mem::replace(&mut self.fixed[fold], vec![0; self.words]);
        let before = self.degree(keep);
        self.m -= count(&row);
        for w in ones(&row) {
            clear_bit(&mut self.rows[w], fold);
            clear_bit(&mut self.fixed[w], fold);
            if w != keep {
                set_bit(&mut self.rows[keep], w);
                set_bit(&mut self.rows[w], keep);
                if test_bit(&fixed, w) {
                    self.fix_edge(keep, w);
                }
            }
        }
        // `before` still counted the fold edge, which `row` also removed
        self.m += self.degree(keep) + 1 - before;
        clear_bit(&mut self.alive, fold);
        self.live -= 1;
        let moved = std::mem::take(&mut self.groups[fold]);
        self.groups[keep].extend(moved);
    }

    /// Reductions that cannot destroy a K_t minor: isolated vertices go, and
    /// for t >= 3 so do degree-1 vertices. For t >= 4 a degree-2 vertex with
    /// no fixed edge merges into a neighbor.
    fn reduce(&mut self, t: usize) {
        loop {
            let mut changed = false;
            let live: Vec<usize> = ones(&self.alive).collect();
            for v in live {
                if !test_bit(&self.alive, v) {
                    continue;
                }
                let deg = self.degree(v);
                if (deg == 0 && t >= 2) || (deg == 1 && t >= 3) {
                    self.delete_vertex(v);
                    changed = true;
                } else if deg == 2 && t >= 4 && count(&self.fixed[v]) == 0 {
                    let u = ones(&self.rows[v]).next().expect("has a neighbor");
                    self.contract(u, v);
                    changed = true;
                }
            }
            if !changed {
                return;
            }
        }
    }

    fn find_clique(&self, t: usize) -> Option<Vec<usize>> {
        let mut chosen = Vec::with_capacity(t);
        if self.clique_from(&self.alive.clone(), t, &mut chosen) {
            Some(chosen)
        } else {
            None
        }
    }

    fn clique_from(&self, cands: &[u64], need: usize, chosen: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if count(cands) < need {
            return false;
        }
        for v in ones(cands) {
            if self.degree(v) + 1 < need + chosen.len() {
                continue;
            }
            let mut next: Vec<u64> = cands.iter().zip(&self.rows[v]).map(|(a, b)| a & b).collect();
            // only later candidates, so each clique is tried once
            for i in 0..=v {
                clear_bit(&mut next, i);
            }
            chosen.push(v);
            if self.clique_from(&next, need - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn smallest_open_edge(&self) -> Option<(usize, usize)> {
        ones(&self.alive).find_map(|u| {
            let open: Vec<u64> = self.rows[u].iter().zip(&self.fixed[u]).map(|(r, f)| r & !f).collect();
            let first = ones(&open).next();
            first.map(|w| (u, w))
        })
    }

    fn key(&self) -> Vec<u64> {
        let mut key = self.alive.clone();
        for v in ones(&self.alive) {
            key.extend_from_slice(&self.rows[v]);
            key.extend_from_slice(&self.fixed[v]);
        }
        key
    }
}

fn search(mut state: State, t: usize, memo: &mut Option<FxHashSet<Vec<u64>>>) -> Option<(State, Vec<usize>)> {
    state.reduce(t);
    if state.live < t || state.m < t * (t - 1) / 2 {
        return None;
    }
    if let Some(clique) = state.find_clique(t) {
        return Some((state, clique));
    }
    let key = memo.as_ref().map(|_| state.key());
    if let (Some(seen), Some(k)) = (memo.as_ref(), key.as_ref()) {
        if seen.contains(k) {
            return None;
        }
    }
    // Either u and w share a branch set, or they never will.
    let (u, w) = state.smallest_open_edge()?;
    let mut contracted = state.clone();
    contracted.contract(u, w);
    if let Some(found) = search(contracted, t, memo) {
        return Some(found);
    }
    state.fix_edge(u, w);
    if let Some(found) = search(state, t, memo) {
        return Some(found);
    }
    if let (Some(seen), Some(k)) = (memo.as_mut(), key) {
        seen.insert(k);
    }
    None
}

/// Finds a K_t minor model of `g` if one exists.
///
/// Branches on the lexicographically smallest edge not yet ruled out for
/// contraction, contracting before ruling it out, and stops as soon as `t` pairwise adjacent vertices appear.
/// Exponential in general; intended for constant-size inputs. The model's
/// branch sets are expressed through `g`'s own branch sets, i.e. in
/// original vertex ids.
pub fn exhaustive_minor(g: &Graph, t: usize) -> Option<MinorModel> {
    exhaustive_minor_with(g, t, ExhaustiveOptions::default())
}

pub fn exhaustive_minor_with(g: &Graph, t: usize, opts: ExhaustiveOptions) -> Option<MinorModel> {
    if t == 0 {
        return Some(MinorModel::new(Vec::new()));
    }
    let (state, ids) = State::from_graph(g);
    let mut memo = opts.memo.then(FxHashSet::default);
    let (state, clique) = search(state, t, &mut memo)?;
    let sets = clique
        .iter()
        .map(|&v| state.groups[v].iter().flat_map(|&local| g.branches().members(ids[local as usize])).collect())
        .collect();
    Some(MinorModel::new(sets))
}

/// True iff `g` has `t` disjoint connected vertex sets that are pairwise
/// joined by an edge. Direct enumeration of all labelings of the vertices
/// by `{none, 1..t}` (up to renaming of labels).
pub fn partition_oracle(g: &Graph, t: usize) -> Result<bool, OracleError> {
    Ok(partition_oracle_model(g, t)?.is_some())
}

/// Like [`partition_oracle`], returning a witness over `g`'s vertex ids.
pub fn partition_oracle_model(g: &Graph, t: usize) -> Result<Option<MinorModel>, OracleError> {
    let ids: Vec<VertexId> = g.vertices().collect();
    let n = ids.len();
    if n > ORACLE_LIMIT {
        return Err(OracleError::SizeLimit { n, limit: ORACLE_LIMIT });
    }
    let mut nbr = vec![0u32; n];
    for i in 0..n {
        for j in 0..n {
            if i != j && g.has_edge(ids[i], ids[j]) {
                nbr[i] |= 1 << j;
            }
        }
    }
    let mut labels = vec![0usize; n];
    let found = label_vertices(&nbr, t, 0, 0, &mut labels);
    Ok(found.map(|masks| {
        MinorModel::new(
            masks.iter().map(|&mask| (0..n).filter(|&i| mask >> i & 1 == 1).map(|i| ids[i]).collect()).collect(),
        )
    }))
}

fn label_vertices(nbr: &[u32], t: usize, i: usize, used: usize, labels: &mut [usize]) -> Option<Vec<u32>> {
    let n = nbr.len();
    if used + (n - i) < t {
        return None;
    }
    if i == n {
        return check_labels(nbr, t, labels);
    }
    let top = if used < t { used + 1 } else { used };
    for label in 0..=top {
        labels[i] = label;
        let next_used = used.max(label);
        if let Some(found) = label_vertices(nbr, t, i + 1, next_used, labels) {
            return Some(found);
        }
    }
    labels[i] = 0;
    None
}

fn check_labels(nbr: &[u32], t: usize, labels: &[usize]) -> Option<Vec<u32>> {
    let mut masks = vec![0u32; t];
    for (i, &l) in labels.iter().enumerate() {
        if l > 0 {
            masks[l - 1] |= 1 << i;
        }
    }
    let reach = |mask: u32| {
        let mut out = 0u32;
        for (i, &row) in nbr.iter().enumerate() {
            if mask >> i & 1 == 1 {
                out |= row;
            }
        }
        out
    };
    for &mask in &masks {
        if mask == 0 {
            return None;
        }
        let mut comp = mask & mask.wrapping_neg();
        loop {
            let grown = (comp | reach(comp)) & mask;
            if grown == comp {
                break;
            }
            comp = grown;
        }
        if comp != mask {
            return None;
        }
    }
    for a in 0..t {
        let ra = reach(masks[a]);
        for &mb in &masks[a + 1..] {
            if ra & mb == 0 {
                return None;
            }
        }
    }
    Some(masks)
}
