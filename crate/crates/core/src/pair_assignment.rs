//! Assignment of small vertices to pairs of big neighbors, and the two
//! contraction constructions built on it: the dense core on the big side
//! and the clique in the big neighborhood of an unassigned vertex.

use rustc_hash::{FxHashMap, FxHashSet};

use crate::certificate::MinorModel;
use crate::dense_matching::{DegreePartition, Matching};
use crate::error::{invariant, MinorError};
use crate::graph::{Graph, VertexId};
use crate::numeric::int;

/// `B' = B ∪ V(M)` and `S' = S \ V(M)`, both sorted.
#[derive(Clone, Debug, Default)]
pub struct PrimePartition {
    pub big: Vec<VertexId>,
    pub small: Vec<VertexId>,
    big_set: FxHashSet<VertexId>,
}

impl PrimePartition {
    pub fn in_big(&self, v: VertexId) -> bool {
        self.big_set.contains(&v)
    }
}

pub fn build_prime_sets(part: &DegreePartition, matching: &Matching) -> Result<PrimePartition, MinorError> {
    let mut big: Vec<VertexId> = part.big.clone();
    for v in matching.vertices() {
        invariant!(part.big.binary_search(&v).is_err(), "matched vertex {v} is big");
        big.push(v);
    }
    big.sort_unstable();
    let small: Vec<VertexId> = part.small.iter().copied().filter(|&v| !matching.is_matched(v)).collect();
    let big_set = big.iter().copied().collect();
    Ok(PrimePartition { big, small, big_set })
}

/// Unordered pairs of `B'` vertices, each with at most one assigned `S'`
/// vertex.
#[derive(Clone, Debug, Default)]
pub struct PairRegistry {
    entries: Vec<((VertexId, VertexId), VertexId)>,
    by_pair: FxHashMap<(VertexId, VertexId), VertexId>,
    assigned: FxHashSet<VertexId>,
}

impl PairRegistry {
    /// Assignee of `{x, y}`, in either order.
    pub fn get(&self, x: VertexId, y: VertexId) -> Option<VertexId> {
        self.by_pair.get(&(x.min(y), x.max(y))).copied()
    }

    pub fn is_assigned(&self, z: VertexId) -> bool {
        self.assigned.contains(&z)
    }

    /// `|A|`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `((x, y), z)` with `x < y`, in assignment order.
    pub fn entries(&self) -> &[((VertexId, VertexId), VertexId)] {
        &self.entries
    }

    fn insert(&mut self, x: VertexId, y: VertexId, z: VertexId) {
        self.entries.push(((x, y), z));
        self.by_pair.insert((x, y), z);
        self.assigned.insert(z);
    }
}

/// Sorted `N(v) ∩ B'`.
pub fn big_neighbors(g: &Graph, pp: &PrimePartition, v: VertexId) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = g.neighbors(v).filter(|&w| pp.in_big(w)).collect();
    out.sort_unstable();
    out
}

/// Greedy maximal assignment: each `u ∈ S'` in ascending order claims the
/// lexicographically first unclaimed pair of its `B'` neighbors.
pub fn assign_pairs(g: &Graph, pp: &PrimePartition) -> PairRegistry {
    let mut reg = PairRegistry::default();
    if pp.big.len() < 2 {
        return reg;
    }
    for &u in &pp.small {
        let nb = big_neighbors(g, pp, u);
        'pairs: for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                g.charge(1);
                if reg.get(x, y).is_none() {
                    reg.insert(x, y, u);
                    break 'pairs;
                }
            }
        }
    }
    reg
}

/// Contracts each assignee into the lower vertex of its pair, then deletes
/// every vertex outside `B'`. Afterwards `g` is the core `G'[B']`, with
/// average degree at least `2|A|/|B'|`, itself at least the old `d(g)`.
pub fn dense_core(g: &mut Graph, pp: &PrimePartition, reg: &PairRegistry) -> Result<(), MinorError> {
    let d = g.average_degree()?;
    let (a, b) = (reg.len() as i128, pp.big.len() as i128);
    if b == 0 || int(2 * a) < d * int(b) {
        return Err(MinorError::GuardViolation(format!(
            "dense core needs 2|A| >= d|B'| with B' non-empty (|A| = {a}, |B'| = {b}, d = {d})"
        )));
    }
    for &((x, _), z) in reg.entries() {
        g.contract_edge(x, z)?;
    }
    let outside: Vec<VertexId> = g.vertices().filter(|&v| !pp.in_big(v)).collect();
    for v in outside {
        g.delete_vertex(v)?;
    }
    g.compact();
    invariant!(g.n() == pp.big.len(), "core has {} vertices, expected |B'| = {}", g.n(), b);
    invariant!(g.m() as i128 >= a, "core has {} edges, fewer than |A| = {a}", g.m());
    let core_d = g.average_degree()?;
    invariant!(core_d >= d, "core average degree {core_d} is below {d}");
    Ok(())
}

/// For `v ∈ S' \ A` with at least `t` neighbors in `B'`: contracts the
/// assignee of every pair among the first `t` such neighbors into the
/// pair's lower vertex, which turns those `t` vertices into a clique, and
/// returns their branch sets.
pub fn neighborhood_clique(
    g: &mut Graph,
    v: VertexId,
    pp: &PrimePartition,
    reg: &PairRegistry,
    t: usize,
) -> Result<MinorModel, MinorError> {
    let nb = big_neighbors(g, pp, v);
    invariant!(nb.len() >= t, "vertex {v} has only {} neighbors in B'", nb.len());
    invariant!(!reg.is_assigned(v), "vertex {v} is assigned");
    let chosen = &nb[..t];
    for (i, &x) in chosen.iter().enumerate() {
        for &y in &chosen[i + 1..] {
            let Some(z) = reg.get(x, y) else {
                return Err(MinorError::InternalInvariantViolation(format!(
                    "pair {{{x}, {y}}} has no assignee although {v} is unassigned"
                )));
            };
            g.contract_edge(x, z)?;
        }
    }
    for (i, &x) in chosen.iter().enumerate() {
        for &y in &chosen[i + 1..] {
            invariant!(g.has_edge(x, y), "{x} and {y} are still not adjacent after contraction");
        }
    }
    Ok(MinorModel::new(chosen.iter().map(|&x| g.branch_set(x)).collect()))
}

/// Registry entries are consistent, and no `u ∈ S' \ A` has an unclaimed
/// pair of `B'` neighbors.
pub fn check_registry(g: &Graph, pp: &PrimePartition, reg: &PairRegistry) -> Result<(), String> {
    let mut seen = FxHashSet::default();
    for &((x, y), z) in reg.entries() {
        if x >= y || !pp.in_big(x) || !pp.in_big(y) {
            return Err(format!("bad pair {{{x}, {y}}}"));
        }
        if pp.in_big(z) || !g.has_edge(z, x) || !g.has_edge(z, y) {
            return Err(format!("assignee {z} of {{{x}, {y}}} is not a common S' neighbor"));
        }
        if !seen.insert(z) {
            return Err(format!("vertex {z} is assigned twice"));
        }
    }
    for &u in &pp.small {
        if reg.is_assigned(u) {
            continue;
        }
        let nb = big_neighbors(g, pp, u);
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if reg.get(x, y).is_none() {
                    return Err(format!("unassigned {u} could claim {{{x}, {y}}}"));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense_matching::classify;
    use crate::graph::fixtures::*;

    fn prime(big: &[u32], small: &[u32]) -> PrimePartition {
        PrimePartition { big: big.to_vec(), small: small.to_vec(), big_set: big.iter().copied().collect() }
    }

    #[test]
    fn prime_sets() {
        let c5 = cycle(5);
        let part = classify(&c5).unwrap();
        let pp = build_prime_sets(&part, &Matching::new()).unwrap();
        assert!(pp.big.is_empty());
        assert_eq!(pp.small, vec![0, 1, 2, 3, 4]);

        let part = DegreePartition { big: vec![0], small: vec![1, 2, 3], ..part };
        let mut m = Matching::new();
        m.push(1, 2);
        let pp = build_prime_sets(&part, &m).unwrap();
        assert_eq!(pp.big, vec![0, 1, 2]);
        assert_eq!(pp.small, vec![3]);

        let mut bad = Matching::new();
        bad.push(0, 3);
        assert!(build_prime_sets(&part, &bad).is_err());
    }

    #[test]
    fn one_pair_one_assignee() {
        // a=0, b=1 big; u1=2, u2=3 both adjacent to a and b
        let g = graph(4, &[(2, 0), (2, 1), (3, 0), (3, 1)]);
        let pp = prime(&[0, 1], &[2, 3]);
        let reg = assign_pairs(&g, &pp);
        assert_eq!(reg.entries(), &[((0, 1), 2)]);
        assert!(!reg.is_assigned(3));
        check_registry(&g, &pp, &reg).unwrap();
    }

    #[test]
    fn no_big_side_no_assignment() {
        let g = cycle(5);
        assert!(assign_pairs(&g, &prime(&[], &[0, 1, 2, 3, 4])).is_empty());
        // a vertex with a single big neighbor never enters A
        let g = graph(3, &[(0, 1), (1, 2)]);
        assert!(assign_pairs(&g, &prime(&[0, 2], &[1])).len() == 1);
        assert!(assign_pairs(&g, &prime(&[0], &[1, 2])).is_empty());
    }

    #[test]
    fn core_of_single_pair() {
        // x=0, y=1, z=2 adjacent to both; 3 and 4 isolated so d = 4/5
        let mut g = graph(5, &[(2, 0), (2, 1)]);
        let pp = prime(&[0, 1], &[2, 3, 4]);
        let reg = assign_pairs(&g, &pp);
        dense_core(&mut g, &pp, &reg).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.branch_set(0), vec![0, 2]);
    }

    #[test]
    fn core_of_two_pairs() {
        // x=0, y=1, w=2; z1=3 on {0,1}, z2=4 on {0,2}; 5, 6 isolated
        // d = 8/7, so 2|A| = 4 >= 3d = 24/7
        let mut g = graph(7, &[(3, 0), (3, 1), (4, 0), (4, 2)]);
        let pp = prime(&[0, 1, 2], &[3, 4, 5, 6]);
        let reg = assign_pairs(&g, &pp);
        assert_eq!(reg.entries(), &[((0, 1), 3), ((0, 2), 4)]);
        dense_core(&mut g, &pp, &reg).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2)]);
        assert_eq!(g.branch_set(0), vec![0, 3, 4]);
    }

    #[test]
    fn core_keeps_existing_big_edges() {
        // as above plus edge 1-2 and one more isolated vertex: d = 10/8
        let mut g = graph(8, &[(3, 0), (3, 1), (4, 0), (4, 2), (1, 2)]);
        let pp = prime(&[0, 1, 2], &[3, 4, 5, 6, 7]);
        let reg = assign_pairs(&g, &pp);
        dense_core(&mut g, &pp, &reg).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn core_guard() {
        // d = 8/5 and 2|A| = 4 < 3d
        let mut g = graph(5, &[(3, 0), (3, 1), (4, 0), (4, 2)]);
        let pp = prime(&[0, 1, 2], &[3, 4]);
        let reg = assign_pairs(&g, &pp);
        assert!(matches!(dense_core(&mut g, &pp, &reg), Err(MinorError::GuardViolation(_))));
        let mut g = cycle(4);
        assert!(matches!(
            dense_core(&mut g, &prime(&[], &[0, 1, 2, 3]), &PairRegistry::default()),
            Err(MinorError::GuardViolation(_))
        ));
    }

    #[test]
    fn clique_from_three_assignees() {
        // v=6 adjacent to x=0, y=1, w=2; z1=3 {0,1}, z2=4 {0,2}, z3=5 {1,2}
        let mut g = graph(7, &[(6, 0), (6, 1), (6, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)]);
        let pp = prime(&[0, 1, 2], &[3, 4, 5, 6]);
        let reg = assign_pairs(&g, &pp);
        assert_eq!(reg.len(), 3);
        assert!(!reg.is_assigned(6));
        let original = g.clone();
        let model = neighborhood_clique(&mut g, 6, &pp, &reg, 3).unwrap();
        assert_eq!(model.branch_sets, vec![vec![0, 3, 4], vec![1, 5], vec![2]]);
        let verdict = crate::certificate::verify_model(&original, &model, 3).unwrap();
        assert!(verdict.is_valid());
    }

    #[test]
    fn clique_reports_missing_assignee() {
        let mut g = graph(4, &[(3, 0), (3, 1), (3, 2)]);
        let pp = prime(&[0, 1, 2], &[3]);
        let reg = PairRegistry::default();
        assert!(matches!(neighborhood_clique(&mut g, 3, &pp, &reg, 3), Err(MinorError::InternalInvariantViolation(_))));
    }
}
