//! Mutable simple graph with branch-set tracking.
//!
//! Vertex ids are stable for the lifetime of a [`Graph`]: deleting or
//! contracting never renumbers the survivors. Each live vertex carries the
//! set of original-input vertices that were merged into it (its branch
//! set), so any clique found in a working graph translates directly into a
//! minor model of the input.
//!
//! Neighbor sets are insertion-ordered hash sets, giving O(1) adjacency
//! tests, O(1) edge deletion and O(deg) iteration. Every neighbor visit
//! and mutation is charged to an operation counter used by the linearity
//! benchmarks.

use std::cell::Cell;

use indexmap::IndexSet;
use rustc_hash::FxBuildHasher;
use thiserror::Error;

use crate::driver::TraceEvent;
use crate::numeric::Rational;

pub type VertexId = u32;

type NeighborSet = IndexSet<VertexId, FxBuildHasher>;

const NIL: u32 = u32::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("invalid input: {0}")]
    InputError(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("stale reference: {0}")]
    StaleReference(String),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAnEdge(VertexId, VertexId),
}

/// Branch sets of the live vertices, stored as intrusive linked lists over
/// original vertex ids so that merging two sets is O(1).
#[derive(Clone, Debug)]
pub struct BranchMap {
    head: Vec<u32>,
    tail: Vec<u32>,
    size: Vec<u32>,
    next: Vec<u32>,
}

impl BranchMap {
    fn singletons(n: usize) -> Self {
        BranchMap { head: (0..n as u32).collect(), tail: (0..n as u32).collect(), size: vec![1; n], next: vec![NIL; n] }
    }

    pub fn len(&self, v: VertexId) -> usize {
        self.size[v as usize] as usize
    }

    pub fn is_empty(&self, v: VertexId) -> bool {
        self.size[v as usize] == 0
    }

    /// Original vertex ids in the branch set of `v`, in merge order.
    pub fn members(&self, v: VertexId) -> BranchIter<'_> {
        BranchIter { map: self, cur: self.head[v as usize] }
    }

    fn merge(&mut self, keep: VertexId, fold: VertexId) {
        let (k, f) = (keep as usize, fold as usize);
        if self.head[f] == NIL {
            return;
        }
        if self.head[k] == NIL {
            self.head[k] = self.head[f];
        } else {
            self.next[self.tail[k] as usize] = self.head[f];
        }
        self.tail[k] = self.tail[f];
        self.size[k] += self.size[f];
        self.clear(fold);
    }

    fn clear(&mut self, v: VertexId) {
        let v = v as usize;
        self.head[v] = NIL;
        self.tail[v] = NIL;
        self.size[v] = 0;
    }
}

pub struct BranchIter<'a> {
    map: &'a BranchMap,
    cur: u32,
}

impl Iterator for BranchIter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        if self.cur == NIL {
            return None;
        }
        let v = self.cur;
        self.cur = self.map.next[v as usize];
        Some(v)
    }
}

/// Duplicate edges and self-loops dropped while building a graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub duplicates: usize,
    pub self_loops: usize,
}

#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<NeighborSet>,
    alive: Vec<bool>,
    /// Ascending vertex ids; may still list dead vertices until `compact`.
    order: Vec<VertexId>,
    n: usize,
    m: usize,
    branch: BranchMap,
    ops: Cell<u64>,
    journal: Option<Vec<TraceEvent>>,
}

impl Graph {
    /// Edgeless graph on vertices `0..n`, each its own branch set.
    pub fn with_vertices(n: usize) -> Self {
        assert!(n < NIL as usize, "vertex count exceeds id space");
        Graph {
            adj: vec![NeighborSet::default(); n],
            alive: vec![true; n],
            order: (0..n as u32).collect(),
            n,
            m: 0,
            branch: BranchMap::singletons(n),
            ops: Cell::new(0),
            journal: None,
        }
    }

    /// Same live vertices and branch sets, no edges. The journal setting
    /// is inherited (with an empty journal).
    pub fn edgeless_copy(&self) -> Graph {
        self.charge(self.n as u64);
        Graph {
            adj: vec![NeighborSet::default(); self.adj.len()],
            alive: self.alive.clone(),
            order: self.vertices().collect(),
            n: self.n,
            m: 0,
            branch: self.branch.clone(),
            ops: Cell::new(0),
            journal: self.journal.as_ref().map(|_| Vec::new()),
        }
    }

    /// Builds a simple graph on `0..n`, dropping duplicates and self-loops.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<(Graph, BuildStats), GraphError> {
        let mut g = Graph::with_vertices(n);
        let mut stats = BuildStats::default();
        for (u, v) in edges {
            if u == v {
                g.check_live(u)?;
                stats.self_loops += 1;
            } else if !g.add_edge(u, v)? {
                stats.duplicates += 1;
            }
        }
        g.ops.set(0);
        Ok((g, stats))
    }

    /// Inserts edge `uv`. Returns `false` (and changes nothing) for a
    /// self-loop or an edge that is already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check_live(u)?;
        self.check_live(v)?;
        self.charge(1);
        if u == v || self.adj[u as usize].contains(&v) {
            return Ok(false);
        }
        self.adj[u as usize].insert(v);
        self.adj[v as usize].insert(u);
        self.m += 1;
        Ok(true)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Size of the vertex id space (live and dead).
    pub fn capacity(&self) -> usize {
        self.adj.len()
    }

    pub fn is_live(&self, v: VertexId) -> bool {
        self.alive.get(v as usize).copied().unwrap_or(false)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v as usize].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.charge(1);
        self.is_live(u) && self.adj[u as usize].contains(&v)
    }

    /// Neighbors of `v` in internal order. Charges `deg(v)` operations.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let set = &self.adj[v as usize];
        self.charge(set.len() as u64);
        set.iter().copied()
    }

    /// Neighbors of `v` in ascending id order.
    pub fn sorted_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        let mut nbrs: Vec<VertexId> = self.neighbors(v).collect();
        nbrs.sort_unstable();
        nbrs
    }

    /// Some neighbor of `v` that can be removed in O(1).
    pub fn last_neighbor(&self, v: VertexId) -> Option<VertexId> {
        self.adj[v as usize].last().copied()
    }

    /// `|N(v) ∩ N(w)|`, scanning the smaller neighborhood.
    pub fn common_neighbor_count(&self, v: VertexId, w: VertexId) -> usize {
        let (a, b) = if self.degree(v) <= self.degree(w) { (v, w) } else { (w, v) };
        let other = &self.adj[b as usize];
        self.neighbors(a).filter(|x| other.contains(x)).count()
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.order.iter().copied().filter(move |&v| self.alive[v as usize])
    }

    /// All live edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for v in self.sorted_neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Drops dead ids from the internal vertex order.
    pub fn compact(&mut self) {
        let alive = &self.alive;
        self.order.retain(|&v| alive[v as usize]);
        self.charge(self.order.len() as u64);
    }

    /// Exact average degree `2m / n`.
    pub fn average_degree(&self) -> Result<Rational, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(Rational::new(2 * self.m as i128, self.n as i128))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.vertices().map(|v| self.degree(v)).max()
    }

    pub fn delete_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        self.check_live(u)?;
        self.check_live(v)?;
        self.charge(2);
        if !self.adj[u as usize].swap_remove(&v) {
            return Err(GraphError::StaleReference(format!("edge {u}-{v} is not live")));
        }
        self.adj[v as usize].swap_remove(&u);
        self.m -= 1;
        self.record(TraceEvent::EdgeDeleted(u, v));
        Ok(())
    }

    pub fn delete_vertex(&mut self, v: VertexId) -> Result<(), GraphError> {
        self.check_live(v)?;
        let nbrs = std::mem::take(&mut self.adj[v as usize]);
        self.charge(1 + nbrs.len() as u64);
        for w in &nbrs {
            self.adj[*w as usize].swap_remove(&v);
        }
        self.m -= nbrs.len();
        self.n -= 1;
        self.alive[v as usize] = false;
        self.branch.clear(v);
        self.record(TraceEvent::VertexDeleted(v));
        Ok(())
    }

    /// Contracts edge `keep`–`fold` into `keep`. Parallel edges created by
    /// the merge are dropped; the branch set of `fold` joins that of `keep`.
    /// Costs O(deg(fold)).
    pub fn contract_edge(&mut self, keep: VertexId, fold: VertexId) -> Result<(), GraphError> {
        self.check_live(keep)?;
        self.check_live(fold)?;
        if keep == fold || !self.adj[keep as usize].contains(&fold) {
            return Err(GraphError::NotAnEdge(keep, fold));
        }
        let nbrs = std::mem::take(&mut self.adj[fold as usize]);
        self.charge(1 + nbrs.len() as u64);
        for &w in &nbrs {
            self.adj[w as usize].swap_remove(&fold);
            self.m -= 1;
            if w != keep && self.adj[keep as usize].insert(w) {
                self.adj[w as usize].insert(keep);
                self.m += 1;
            }
        }
        self.n -= 1;
        self.alive[fold as usize] = false;
        self.branch.merge(keep, fold);
        self.record(TraceEvent::Contracted { keep, fold });
        Ok(())
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in
    /// ascending order of the old ids. Branch sets carry over unchanged.
    /// Returns the new graph and the old id of each new vertex.
    pub fn induced_subgraph(&self, keep: &[VertexId]) -> Result<(Graph, Vec<VertexId>), GraphError> {
        let mut old_ids: Vec<VertexId> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        for &v in &old_ids {
            self.check_live(v)?;
        }
        let new_id: rustc_hash::FxHashMap<VertexId, VertexId> =
            old_ids.iter().enumerate().map(|(i, &v)| (v, i as VertexId)).collect();
        let k = old_ids.len();
        let mut sub = Graph::with_vertices(k);
        sub.branch = BranchMap {
            head: old_ids.iter().map(|&v| self.branch.head[v as usize]).collect(),
            tail: old_ids.iter().map(|&v| self.branch.tail[v as usize]).collect(),
            size: old_ids.iter().map(|&v| self.branch.size[v as usize]).collect(),
            next: self.branch.next.clone(),
        };
        for (i, &v) in old_ids.iter().enumerate() {
            for w in self.sorted_neighbors(v) {
                if let Some(&j) = new_id.get(&w) {
                    if (i as VertexId) < j {
                        sub.add_edge(i as VertexId, j)?;
                    }
                }
            }
        }
        sub.ops.set(0);
        Ok((sub, old_ids))
    }

    pub fn branches(&self) -> &BranchMap {
        &self.branch
    }

    /// Sorted branch set of `v` as original vertex ids.
    pub fn branch_set(&self, v: VertexId) -> Vec<VertexId> {
        let mut set: Vec<VertexId> = self.branch.members(v).collect();
        set.sort_unstable();
        set
    }

    /// Primitive operations performed so far.
    pub fn ops(&self) -> u64 {
        self.ops.get()
    }

    pub(crate) fn charge(&self, k: u64) {
        self.ops.set(self.ops.get() + k);
    }

    /// Starts recording mutations as trace events.
    pub fn enable_journal(&mut self) {
        if self.journal.is_none() {
            self.journal = Some(Vec::new());
        }
    }

    pub fn journal_enabled(&self) -> bool {
        self.journal.is_some()
    }

    pub fn take_journal(&mut self) -> Vec<TraceEvent> {
        self.journal.as_mut().map(std::mem::take).unwrap_or_default()
    }

    pub(crate) fn record(&mut self, ev: TraceEvent) {
        if let Some(j) = self.journal.as_mut() {
            j.push(ev);
        }
    }

    fn check_live(&self, v: VertexId) -> Result<(), GraphError> {
        if (v as usize) >= self.adj.len() {
            return Err(GraphError::StaleReference(format!("vertex {v} does not exist")));
        }
        if !self.alive[v as usize] {
            return Err(GraphError::StaleReference(format!("vertex {v} is deleted")));
        }
        Ok(())
    }

    /// Full scan of the structural invariants: simplicity, symmetry, count
    /// identities, non-empty and disjoint branch sets.
    pub fn audit(&self) -> Result<(), String> {
        let mut live = 0;
        let mut degree_sum = 0;
        let mut owner = vec![NIL; self.branch.next.len()];
        for v in 0..self.adj.len() as VertexId {
            if !self.alive[v as usize] {
                if !self.adj[v as usize].is_empty() {
                    return Err(format!("dead vertex {v} has neighbors"));
                }
                continue;
            }
            live += 1;
            degree_sum += self.degree(v);
            for &w in &self.adj[v as usize] {
                if w == v {
                    return Err(format!("self-loop at {v}"));
                }
                if !self.is_live(w) {
                    return Err(format!("edge {v}-{w} reaches a dead vertex"));
                }
                if !self.adj[w as usize].contains(&v) {
                    return Err(format!("edge {v}-{w} is not symmetric"));
                }
            }
            if self.branch.is_empty(v) {
                return Err(format!("vertex {v} has an empty branch set"));
            }
            let mut count = 0;
            for x in self.branch.members(v) {
                if owner[x as usize] != NIL {
                    return Err(format!("original vertex {x} lies in two branch sets"));
                }
                owner[x as usize] = v;
                count += 1;
            }
            if count != self.branch.len(v) {
                return Err(format!("branch size of {v} is stale"));
            }
        }
        if live != self.n {
            return Err(format!("n = {} but {live} vertices are live", self.n));
        }
        if degree_sum != 2 * self.m {
            return Err(format!("2m = {} but the degree sum is {degree_sum}", 2 * self.m));
        }
        Ok(())
    }

    /// Checks the branch sets against the original input: each induces a
    /// connected subgraph there, and every live edge is witnessed by an
    /// original edge between the two branch sets.
    pub fn audit_against(&self, original: &Graph) -> Result<(), String> {
        let mut owner = vec![NIL; original.capacity()];
        for v in self.vertices() {
            for x in self.branch.members(v) {
                owner[x as usize] = v;
            }
        }
        for v in self.vertices() {
            let members: Vec<VertexId> = self.branch.members(v).collect();
            if members.is_empty() {
                return Err(format!("vertex {v} has an empty branch set"));
            }
            let mut seen = rustc_hash::FxHashSet::default();
            let mut stack = vec![members[0]];
            seen.insert(members[0]);
            let mut touches = rustc_hash::FxHashSet::default();
            while let Some(x) = stack.pop() {
                for &y in &original.adj[x as usize] {
                    let o = owner[y as usize];
                    if o == v {
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    } else if o != NIL {
                        touches.insert(o);
                    }
                }
            }
            if seen.len() != members.len() {
                return Err(format!("branch set of {v} is disconnected in the original graph"));
            }
            for &w in &self.adj[v as usize] {
                if !touches.contains(&w) {
                    return Err(format!("edge {v}-{w} has no original witness"));
                }
            }
        }
        Ok(())
    }
}

/// Builds a graph from signed id pairs; vertex set is `0..=max id`.
pub fn build_graph(edges: &[(i64, i64)]) -> Result<Graph, GraphError> {
    let mut max_id: i64 = -1;
    for &(u, v) in edges {
        if u < 0 || v < 0 {
            return Err(GraphError::InputError(format!("negative vertex id in pair ({u}, {v})")));
        }
        if u >= NIL as i64 || v >= NIL as i64 {
            return Err(GraphError::InputError(format!("vertex id out of range in pair ({u}, {v})")));
        }
        max_id = max_id.max(u).max(v);
    }
    let n = (max_id + 1) as usize;
    let (g, _) = Graph::from_edges(n, edges.iter().map(|&(u, v)| (u as VertexId, v as VertexId)))?;
    Ok(g)
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::numeric::{frac, int};

    #[test]
    fn builds_triangle() {
        let g = build_graph(&[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.ops(), 0);
        assert_eq!(g.branch_set(1), vec![1]);
    }

    #[test]
    fn build_drops_duplicates_and_loops() {
        let (g, stats) = Graph::from_edges(2, [(0, 1), (1, 0), (0, 0)]).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert_eq!(stats, BuildStats { duplicates: 1, self_loops: 1 });
        assert!(build_graph(&[(0, 1), (1, 0), (0, 0)]).unwrap().has_edge(0, 1));
    }

    #[test]
    fn build_rejects_negative_ids() {
        assert!(matches!(build_graph(&[(0, -1)]), Err(GraphError::InputError(_))));
    }

    #[test]
    fn petersen_is_cubic() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert!(g.vertices().all(|v| g.degree(v) == 3));
        assert_eq!(g.average_degree().unwrap(), int(3));
    }

    #[test]
    fn average_degrees() {
        assert_eq!(complete(3).average_degree().unwrap(), int(2));
        assert_eq!(path(4).average_degree().unwrap(), frac(3, 2));
        assert_eq!(Graph::with_vertices(0).average_degree(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn deletions() {
        let mut g = complete(3);
        g.delete_edge(0, 1).unwrap();
        assert_eq!(g.m(), 2);
        assert_eq!(g.average_degree().unwrap(), frac(4, 3));
        assert!(matches!(g.delete_edge(0, 1), Err(GraphError::StaleReference(_))));

        let mut g = complete(3);
        g.delete_vertex(0).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(matches!(g.delete_vertex(0), Err(GraphError::StaleReference(_))));
        assert!(g.branches().is_empty(0));

        let mut star = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        star.delete_vertex(0).unwrap();
        assert_eq!((star.n(), star.m()), (4, 0));
        star.audit().unwrap();
    }

    #[test]
    fn contract_triangle() {
        let mut g = complete(3);
        g.contract_edge(0, 1).unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
        assert!(g.has_edge(0, 2));
        assert_eq!(g.branch_set(0), vec![0, 1]);
        g.audit().unwrap();
    }

    #[test]
    fn contract_path_middle() {
        let mut g = path(4);
        g.contract_edge(1, 2).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(g.edges(), vec![(0, 1), (1, 3)]);
        g.audit().unwrap();
    }

    #[test]
    fn contract_square_dedups() {
        let mut g = cycle(4);
        g.contract_edge(0, 1).unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 3), (2, 3)]);
        g.audit().unwrap();
        g.audit_against(&cycle(4)).unwrap();
    }

    #[test]
    fn contract_requires_edge() {
        let mut g = path(4);
        assert_eq!(g.contract_edge(0, 2), Err(GraphError::NotAnEdge(0, 2)));
        assert_eq!(g.contract_edge(1, 1), Err(GraphError::NotAnEdge(1, 1)));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4);
        let (tri, ids) = k4.induced_subgraph(&[3, 1, 0]).unwrap();
        assert_eq!(ids, vec![0, 1, 3]);
        assert_eq!((tri.n(), tri.m()), (3, 3));
        assert_eq!(tri.branch_set(2), vec![3]);

        let (c5, _) = petersen().induced_subgraph(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((c5.n(), c5.m()), (5, 5));
        assert!(c5.vertices().all(|v| c5.degree(v) == 2));

        let (empty, _) = petersen().induced_subgraph(&[]).unwrap();
        assert_eq!((empty.n(), empty.m()), (0, 0));

        let mut g = complete(4);
        g.delete_vertex(2).unwrap();
        assert!(matches!(g.induced_subgraph(&[1, 2]), Err(GraphError::StaleReference(_))));
    }

    #[test]
    fn induced_subgraph_keeps_merged_branches() {
        let mut g = cycle(6);
        g.contract_edge(0, 1).unwrap();
        g.contract_edge(3, 4).unwrap();
        let (sub, ids) = g.induced_subgraph(&[0, 3, 2]).unwrap();
        assert_eq!(ids, vec![0, 2, 3]);
        assert_eq!(sub.branch_set(0), vec![0, 1]);
        assert_eq!(sub.branch_set(2), vec![3, 4]);
        sub.audit().unwrap();
        sub.audit_against(&cycle(6)).unwrap();
    }

    #[test]
    fn ops_counter_moves_forward() {
        let mut g = complete(5);
        let before = g.ops();
        g.contract_edge(0, 1).unwrap();
        let after = g.ops();
        assert!(after > before && after - before <= 1 + 4);
    }

    #[test]
    fn journal_records_mutations() {
        let mut g = complete(4);
        g.enable_journal();
        g.delete_edge(0, 1).unwrap();
        g.contract_edge(2, 3).unwrap();
        g.delete_vertex(0).unwrap();
        assert_eq!(
            g.take_journal(),
            vec![
                TraceEvent::EdgeDeleted(0, 1),
                TraceEvent::Contracted { keep: 2, fold: 3 },
                TraceEvent::VertexDeleted(0),
            ]
        );
    }

    #[test]
    fn compact_keeps_order() {
        let mut g = path(6);
        g.delete_vertex(2).unwrap();
        g.delete_vertex(4).unwrap();
        g.compact();
        assert_eq!(g.vertices().collect::<Vec<_>>(), vec![0, 1, 3, 5]);
    }
}
