//! Small/big degree split, greedy maximal matching of good edges, and the
//! induced submatching whose contraction keeps the average degree.
//!
//! An edge `vw` is good when both endpoints have degree at most `d²` and
//! share at most `(d-2)/2` neighbors, `d` being the current average degree.
//! Contracting a good edge removes at most `d/2` edges and one vertex, and
//! contracting the edges of an induced matching does so independently.

use rustc_hash::FxHashMap;

use crate::error::{invariant, MinorError};
use crate::graph::{Graph, VertexId};
use crate::numeric::{floor, int, Rational};

/// Vertices split by degree against `d²`.
#[derive(Clone, Debug)]
pub struct DegreePartition {
    pub d: Rational,
    /// `⌊d²⌋`: a vertex is small iff its degree is at most this.
    pub small_limit: usize,
    /// `⌊(d-2)/2⌋` (negative when `d < 2`): the most common neighbors a
    /// good edge may have.
    pub common_limit: i128,
    pub small: Vec<VertexId>,
    pub big: Vec<VertexId>,
}

impl DegreePartition {
    /// Membership is recomputed from the stored degree.
    pub fn is_small(&self, g: &Graph, v: VertexId) -> bool {
        g.degree(v) <= self.small_limit
    }
}

pub fn classify(g: &Graph) -> Result<DegreePartition, MinorError> {
    let d = g.average_degree()?;
    let small_limit = floor(&(d * d)) as usize;
    let common_limit = floor(&((d - int(2)) / int(2)));
    let (small, big) = g.vertices().partition(|&v| g.degree(v) <= small_limit);
    g.charge(g.n() as u64);
    Ok(DegreePartition { d, small_limit, common_limit, small, big })
}

pub fn is_good_edge(g: &Graph, part: &DegreePartition, v: VertexId, w: VertexId) -> bool {
    if !part.is_small(g, v) || !part.is_small(g, w) {
        return false;
    }
    (g.common_neighbor_count(v, w) as i128) <= part.common_limit
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(VertexId, VertexId)>,
    mate: FxHashMap<VertexId, VertexId>,
}

impl Matching {
    pub fn new() -> Self {
        Matching::default()
    }

    /// Adds `vw`; panics if either endpoint is already matched.
    pub fn push(&mut self, v: VertexId, w: VertexId) {
        assert!(v != w && !self.is_matched(v) && !self.is_matched(w), "not a matching edge");
        let e = (v.min(w), v.max(w));
        self.edges.push(e);
        self.mate.insert(v, w);
        self.mate.insert(w, v);
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges as `(lower, higher)` in insertion order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate.contains_key(&v)
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate.get(&v).copied()
    }

    /// `V(M)`.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.edges.iter().flat_map(|&(a, b)| [a, b])
    }
}

/// Greedy maximal matching of good edges, scanning small vertices and then
/// their neighbors in ascending id order.
pub fn maximal_good_matching(g: &Graph, part: &DegreePartition) -> Matching {
    let mut m = Matching::new();
    for &v in &part.small {
        if m.is_matched(v) {
            continue;
        }
        for w in g.sorted_neighbors(v) {
            if !m.is_matched(w) && is_good_edge(g, part, v, w) {
                m.push(v, w);
                break;
            }
        }
    }
    m
}

/// Greedy maximal induced submatching: take the next surviving edge of
/// `matching`, then discard every edge with an endpoint adjacent to it.
pub fn induced_submatching(g: &Graph, matching: &Matching) -> Matching {
    let index: FxHashMap<VertexId, usize> =
        matching.edges().iter().enumerate().flat_map(|(i, &(a, b))| [(a, i), (b, i)]).collect();
    let mut alive = vec![true; matching.len()];
    let mut out = Matching::new();
    for (i, &(a, b)) in matching.edges().iter().enumerate() {
        if !alive[i] {
            continue;
        }
        out.push(a, b);
        for end in [a, b] {
            for x in g.neighbors(end) {
                if let Some(&j) = index.get(&x) {
                    if j != i {
                        alive[j] = false;
                    }
                }
            }
        }
    }
    out
}

/// Contracts every edge of an induced matching into its lower endpoint.
/// The average degree must not drop (checked).
pub fn contract_matching(g: &mut Graph, matching: &Matching) -> Result<(), MinorError> {
    if matching.is_empty() {
        return Ok(());
    }
    let before = g.average_degree()?;
    let n_before = g.n();
    for &(a, b) in matching.edges() {
        g.contract_edge(a, b)?;
    }
    let after = g.average_degree()?;
    invariant!(after >= before, "contracting the induced matching lowered the average degree from {before} to {after}");
    invariant!(g.n() + matching.len() == n_before, "contraction removed the wrong number of vertices");
    Ok(())
}

/// Every edge is good, and no good edge has both endpoints unmatched.
pub fn check_good_maximal(g: &Graph, part: &DegreePartition, m: &Matching) -> Result<(), String> {
    for &(a, b) in m.edges() {
        if !g.has_edge(a, b) || !is_good_edge(g, part, a, b) {
            return Err(format!("matching edge {a}-{b} is not a good edge"));
        }
    }
    for v in g.vertices() {
        if m.is_matched(v) {
            continue;
        }
        for w in g.neighbors(v) {
            if !m.is_matched(w) && is_good_edge(g, part, v, w) {
                return Err(format!("good edge {v}-{w} has both endpoints unmatched"));
            }
        }
    }
    Ok(())
}

/// `sub ⊆ m`, and no edge joins two `V(sub)` vertices except `sub` edges.
pub fn check_induced(g: &Graph, m: &Matching, sub: &Matching) -> Result<(), String> {
    for &(a, b) in sub.edges() {
        if m.mate(a) != Some(b) {
            return Err(format!("{a}-{b} is not in the parent matching"));
        }
    }
    for v in sub.vertices() {
        for w in g.neighbors(v) {
            if sub.is_matched(w) && sub.mate(v) != Some(w) {
                return Err(format!("edge {v}-{w} joins two submatching edges"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::numeric::frac;

    #[test]
    fn classify_examples() {
        let p = classify(&cycle(5)).unwrap();
        assert!(p.big.is_empty());
        assert_eq!(p.small_limit, 4);

        let star = graph(10, &(1..10).map(|i| (0, i)).collect::<Vec<_>>());
        let p = classify(&star).unwrap();
        assert_eq!(p.d, frac(9, 5));
        assert_eq!(p.small_limit, 3);
        assert_eq!(p.big, vec![0]);

        let p = classify(&complete(4)).unwrap();
        assert!(p.big.is_empty());
    }

    #[test]
    fn good_edges() {
        let c5 = cycle(5);
        let p = classify(&c5).unwrap();
        assert!(c5.edges().iter().all(|&(a, b)| is_good_edge(&c5, &p, a, b)));

        let k4 = complete(4);
        let p = classify(&k4).unwrap();
        assert!(k4.edges().iter().all(|&(a, b)| !is_good_edge(&k4, &p, a, b)));

        let star = graph(10, &(1..10).map(|i| (0, i)).collect::<Vec<_>>());
        let p = classify(&star).unwrap();
        assert!(!is_good_edge(&star, &p, 0, 1));
    }

    #[test]
    fn matchings() {
        let c5 = cycle(5);
        let p = classify(&c5).unwrap();
        let m = maximal_good_matching(&c5, &p);
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        check_good_maximal(&c5, &p, &m).unwrap();

        let k4 = complete(4);
        assert!(maximal_good_matching(&k4, &classify(&k4).unwrap()).is_empty());

        let empty = Graph::with_vertices(3);
        assert!(maximal_good_matching(&empty, &classify(&empty).unwrap()).is_empty());
    }

    #[test]
    fn induced_submatchings() {
        let c6 = cycle(6);
        let mut m = Matching::new();
        m.push(0, 1);
        assert_eq!(induced_submatching(&c6, &m), m);

        let mut m = Matching::new();
        m.push(0, 1);
        m.push(2, 3);
        m.push(4, 5);
        let sub = induced_submatching(&c6, &m);
        assert_eq!(sub.edges(), &[(0, 1)]);
        check_induced(&c6, &m, &sub).unwrap();
        // 2·d²·|M'| >= |M| with d = 2
        assert!(2 * 4 * sub.len() >= m.len());

        let two_triangles = graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
        let mut m = Matching::new();
        m.push(0, 1);
        m.push(3, 4);
        assert_eq!(induced_submatching(&two_triangles, &m), m);
    }

    #[test]
    fn contraction_keeps_density() {
        let mut c5 = cycle(5);
        let mut m = Matching::new();
        m.push(0, 1);
        contract_matching(&mut c5, &m).unwrap();
        assert_eq!((c5.n(), c5.m()), (4, 4));
        assert_eq!(c5.average_degree().unwrap(), int(2));

        let mut c6 = cycle(6);
        let mut m = Matching::new();
        m.push(0, 1);
        m.push(3, 4);
        contract_matching(&mut c6, &m).unwrap();
        assert_eq!((c6.n(), c6.m()), (4, 4));
        assert!(c6.vertices().all(|v| c6.degree(v) == 2));

        let mut g = cycle(5);
        contract_matching(&mut g, &Matching::new()).unwrap();
        assert_eq!(g.n(), 5);
    }
}
