//! Independent verification of complete-minor models.
//!
//! A family of `t` vertex sets is a K_t minor model of a graph when the
//! sets are non-empty, pairwise disjoint, each induces a connected
//! subgraph, and every two sets are joined by at least one edge. Sets need
//! not cover the graph. This check only reads the original graph, so it is
//! independent of how a model was produced.

use std::fmt;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::graph::{Graph, GraphError, VertexId};

/// Certificate of a K_t minor: `t` branch sets over original vertex ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorModel {
    pub branch_sets: Vec<Vec<VertexId>>,
}

impl MinorModel {
    /// Sorts each set; set order is kept.
    pub fn new(mut branch_sets: Vec<Vec<VertexId>>) -> Self {
        for set in &mut branch_sets {
            set.sort_unstable();
        }
        MinorModel { branch_sets }
    }

    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    /// Total number of vertices used by the model.
    pub fn size(&self) -> usize {
        self.branch_sets.iter().map(Vec::len).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongCount { expected: usize, found: usize },
    EmptySet(usize),
    Overlap { first: usize, second: usize, vertex: VertexId },
    Disconnected(usize),
    NotAdjacent(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongCount { expected, found } => {
                write!(f, "expected {expected} branch sets, found {found}")
            }
            Violation::EmptySet(i) => write!(f, "branch set B{} is empty", i + 1),
            Violation::Overlap { first, second, vertex } => {
                write!(f, "vertex {vertex} lies in both B{} and B{}", first + 1, second + 1)
            }
            Violation::Disconnected(i) => write!(f, "branch set B{} is not connected", i + 1),
            Violation::NotAdjacent(i, j) => {
                write!(f, "no edge joins B{} and B{}", i + 1, j + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Valid => &[],
            Verdict::Invalid(v) => v,
        }
    }
}

/// Checks `model` against `original` and reports every violation found.
///
/// Runs in time linear in the model size plus the degrees of its vertices.
pub fn verify_model(original: &Graph, model: &MinorModel, t: usize) -> Result<Verdict, GraphError> {
    for set in &model.branch_sets {
        for &v in set {
            if !original.is_live(v) {
                return Err(GraphError::InputError(format!("model references unknown vertex {v}")));
            }
        }
    }

    let sets = &model.branch_sets;
    let mut violations = Vec::new();
    if sets.len() != t {
        violations.push(Violation::WrongCount { expected: t, found: sets.len() });
    }
    for (i, set) in sets.iter().enumerate() {
        if set.is_empty() {
            violations.push(Violation::EmptySet(i));
        }
    }

    let mut owners: FxHashMap<VertexId, Vec<usize>> = FxHashMap::default();
    for (i, set) in sets.iter().enumerate() {
        for &v in set {
            let entry = owners.entry(v).or_default();
            if entry.last() != Some(&i) {
                entry.push(i);
            }
        }
    }
    let mut overlapping = FxHashSet::default();
    let mut sorted_owned: Vec<_> = owners.iter().filter(|(_, o)| o.len() > 1).collect();
    sorted_owned.sort_unstable_by_key(|(v, _)| **v);
    for (&v, owned) in sorted_owned {
        for a in 0..owned.len() {
            for b in a + 1..owned.len() {
                if overlapping.insert((owned[a], owned[b])) {
                    violations.push(Violation::Overlap { first: owned[a], second: owned[b], vertex: v });
                }
            }
        }
    }

    let k = sets.len();
    let mut joined = vec![false; k * k];
    for (i, set) in sets.iter().enumerate() {
        let Some(&start) = set.first() else { continue };
        let mut seen = FxHashSet::default();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for y in original.neighbors(x) {
                let Some(owned) = owners.get(&y) else { continue };
                for &j in owned {
                    if j == i {
                        if seen.insert(y) {
                            stack.push(y);
                        }
                    } else {
                        joined[i * k + j] = true;
                        joined[j * k + i] = true;
                    }
                }
            }
        }
        let distinct: FxHashSet<VertexId> = set.iter().copied().collect();
        if seen.len() != distinct.len() {
            violations.push(Violation::Disconnected(i));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if !sets[i].is_empty() && !sets[j].is_empty() && !joined[i * k + j] {
                violations.push(Violation::NotAdjacent(i, j));
            }
        }
    }

    if violations.is_empty() {
        Ok(Verdict::Valid)
    } else {
        Ok(Verdict::Invalid(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    fn model(sets: &[&[u32]]) -> MinorModel {
        MinorModel::new(sets.iter().map(|s| s.to_vec()).collect())
    }

    #[test]
    fn triangle_singletons_valid() {
        let v = verify_model(&complete(3), &model(&[&[0], &[1], &[2]]), 3).unwrap();
        assert!(v.is_valid());
    }

    #[test]
    fn disconnected_set_is_the_only_violation() {
        // K4 minus the edge 0-2
        let g = graph(4, &[(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let v = verify_model(&g, &model(&[&[0, 2], &[1], &[3]]), 3).unwrap();
        assert_eq!(v.violations(), &[Violation::Disconnected(0)]);
    }

    #[test]
    fn path_example_also_misses_an_adjacency() {
        // {1} and {3} share no edge in the path
        let v = verify_model(&path(4), &model(&[&[0, 2], &[1], &[3]]), 3).unwrap();
        assert_eq!(v.violations(), &[Violation::Disconnected(0), Violation::NotAdjacent(1, 2)]);
    }

    #[test]
    fn wrong_count() {
        let v = verify_model(&complete(4), &model(&[&[0], &[1], &[2]]), 4).unwrap();
        assert_eq!(v.violations(), &[Violation::WrongCount { expected: 4, found: 3 }]);
    }

    #[test]
    fn reports_all_failures() {
        let g = path(5);
        let v = verify_model(&g, &model(&[&[0, 1], &[1, 2], &[], &[4]]), 4).unwrap();
        let got = v.violations();
        assert!(got.contains(&Violation::EmptySet(2)));
        assert!(got.contains(&Violation::Overlap { first: 0, second: 1, vertex: 1 }));
        assert!(got.contains(&Violation::NotAdjacent(0, 3)));
        assert!(got.contains(&Violation::NotAdjacent(1, 3)));
    }

    #[test]
    fn partial_cover_is_fine() {
        let g = petersen();
        // contract each spoke: outer i with inner i+5
        let sets: Vec<Vec<u32>> = (0..5).map(|i| vec![i, i + 5]).collect();
        assert!(verify_model(&g, &MinorModel::new(sets), 5).unwrap().is_valid());
        let v = verify_model(&g, &model(&[&[0], &[1]]), 2).unwrap();
        assert!(v.is_valid());
    }

    #[test]
    fn unknown_vertex_is_an_input_error() {
        assert!(matches!(verify_model(&complete(3), &model(&[&[0], &[1], &[7]]), 3), Err(GraphError::InputError(_))));
    }
}
