//! Seeded graph generators. The same seed always gives the same graph.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphError, VertexId};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pair_count(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Maps `k < n(n-1)/2` to the `k`-th pair `(v, u)`, `v < u`, in the order
/// (0,1), (0,2), (1,2), (0,3), ...
fn unrank_pair(k: u64) -> (VertexId, VertexId) {
    let mut u = ((1.0 + (1.0 + 8.0 * k as f64).sqrt()) / 2.0) as u64;
    while u * (u - 1) / 2 > k {
        u -= 1;
    }
    while (u + 1) * u / 2 <= k {
        u += 1;
    }
    let v = k - u * (u - 1) / 2;
    (v as VertexId, u as VertexId)
}

fn build(n: usize, edges: Vec<(VertexId, VertexId)>) -> Graph {
    Graph::from_edges(n, edges).expect("generated ids are in range").0
}

/// A uniformly random simple graph on `0..n` with exactly `m` edges, listed
/// in random order.
pub fn gen_random(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    let total = pair_count(n);
    if m as u64 > total {
        return Err(GraphError::InputError(format!("{m} edges do not fit on {n} vertices (at most {total})")));
    }
    let mut rng = rng(seed);
    let edges = index::sample(&mut rng, total as usize, m).into_iter().map(|k| unrank_pair(k as u64)).collect();
    Ok(build(n, edges))
}

/// A graph with a planted K_t minor: `t·⌊n/t⌋` random vertices are split
/// into `t` blobs, each a random tree, with one random edge between every
/// two blobs, then `noise` further random edges. Returns the graph and the
/// blobs, which form a valid model.
pub fn gen_planted(n: usize, t: usize, noise: usize, seed: u64) -> Result<(Graph, Vec<Vec<VertexId>>), GraphError> {
    if t == 0 || n < t {
        return Err(GraphError::InputError(format!("need n >= t >= 1, got n = {n}, t = {t}")));
    }
    let mut rng = rng(seed);
    let mut ids: Vec<VertexId> = (0..n as VertexId).collect();
    ids.shuffle(&mut rng);
    let size = n / t;
    let blobs: Vec<Vec<VertexId>> = ids[..t * size].chunks(size).map(<[VertexId]>::to_vec).collect();

    let mut edges = Vec::new();
    for blob in &blobs {
        for i in 1..blob.len() {
            edges.push((blob[rng.gen_range(0..i)], blob[i]));
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            let a = *blobs[i].choose(&mut rng).unwrap();
            let b = *blobs[j].choose(&mut rng).unwrap();
            edges.push((a, b));
        }
    }
    let (mut g, _) = Graph::from_edges(n, edges).expect("generated ids are in range");
    let room = (pair_count(n) - g.m() as u64).min(noise as u64) as usize;
    let mut added = 0;
    while added < room {
        let u = rng.gen_range(0..n as VertexId);
        let v = rng.gen_range(0..n as VertexId);
        if g.add_edge(u, v)? {
            added += 1;
        }
    }
    let mut blobs = blobs;
    for blob in &mut blobs {
        blob.sort_unstable();
    }
    Ok((g, blobs))
}

/// Hubs `0..hubs` followed by `groups` leaf groups of `group_size`
/// vertices. Each group is a clique whose members are all joined to the
/// same `per_group` distinct random hubs. Hubs are not joined to each other.
/// Edges are listed group by group, so trimming drops whole groups.
///
/// With few leaves per hub this yields high-degree hubs in a graph of low
/// average degree, and with `group_size >= 2` no edge between two leaves is
/// cheap to contract. Useful for driving the search through its dense-core
/// and clique paths.
pub fn gen_hubs(
    hubs: usize,
    groups: usize,
    group_size: usize,
    per_group: usize,
    seed: u64,
) -> Result<Graph, GraphError> {
    if per_group > hubs {
        return Err(GraphError::InputError(format!("cannot join a group to {per_group} of {hubs} hubs")));
    }
    let mut rng = rng(seed);
    let mut edges = Vec::new();
    let mut next = hubs as VertexId;
    for _ in 0..groups {
        let members: Vec<VertexId> = (next..next + group_size as VertexId).collect();
        next += group_size as VertexId;
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
        for h in index::sample(&mut rng, hubs, per_group) {
            for &leaf in &members {
                edges.push((h as VertexId, leaf));
            }
        }
    }
    Ok(build(next as usize, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{verify_model, MinorModel};
    use crate::numeric::frac;
    use rustc_hash::FxHashSet;

    #[test]
    fn unrank_is_a_bijection() {
        let n = 40u64;
        let mut seen = FxHashSet::default();
        for k in 0..pair_count(n as usize) {
            let (v, u) = unrank_pair(k);
            assert!(v < u && (u as u64) < n);
            assert!(seen.insert((v, u)));
        }
        assert_eq!(unrank_pair(0), (0, 1));
        assert_eq!(unrank_pair(3), (0, 3));
    }

    #[test]
    fn random_examples() {
        let k5 = gen_random(5, 10, 1).unwrap();
        assert_eq!(k5.m(), 10);
        assert_eq!(gen_random(4, 0, 1).unwrap().m(), 0);
        let g = gen_random(1000, 8200, 7).unwrap();
        assert_eq!(g.average_degree().unwrap(), frac(164, 10));
        assert!(gen_random(5, 11, 1).is_err());
        assert_eq!(gen_random(50, 300, 9).unwrap().edges(), gen_random(50, 300, 9).unwrap().edges());
    }

    #[test]
    fn planted_examples() {
        let (g, blobs) = gen_planted(5, 5, 0, 3).unwrap();
        assert_eq!(g.m(), 10);
        assert_eq!(blobs.len(), 5);

        let (g, blobs) = gen_planted(9, 3, 0, 3).unwrap();
        assert!(verify_model(&g, &MinorModel::new(blobs), 3).unwrap().is_valid());

        let (g, blobs) = gen_planted(11, 4, 5, 8).unwrap();
        assert_eq!(blobs.iter().map(Vec::len).sum::<usize>(), 8);
        assert!(verify_model(&g, &MinorModel::new(blobs), 4).unwrap().is_valid());
        assert!(gen_planted(2, 3, 0, 0).is_err());

        // noise beyond the free pairs saturates
        let (g, _) = gen_planted(4, 2, 100, 1).unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn hubs_shape() {
        let g = gen_hubs(5, 20, 1, 3, 2).unwrap();
        assert_eq!((g.n(), g.m()), (25, 60));
        assert!((0..5).all(|h| (0..5).all(|k| !g.has_edge(h, k))));
        assert!((5..25).all(|leaf| g.degree(leaf) == 3));

        let twins = gen_hubs(6, 4, 2, 3, 2).unwrap();
        assert_eq!((twins.n(), twins.m()), (14, 4 * (1 + 6)));
        assert!(twins.has_edge(6, 7) && !twins.has_edge(7, 8));
        assert_eq!(twins.common_neighbor_count(6, 7), 3);
        assert!(gen_hubs(2, 1, 1, 3, 0).is_err());
    }
}
