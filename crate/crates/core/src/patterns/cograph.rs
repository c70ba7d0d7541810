//! Cocomponents, the depth-`i` decompositions `Π_i`, and the distance `d` on
//! graph powers.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

/// The chain `Π_0, Π_1, …` of vertex partitions.
///
/// `Π_0` is the set of connected components. `Π_{i+1}` splits each block of
/// `Π_i` into the components of its complement when `i` is even and of the
/// block itself when `i` is odd: the blocks of `Π_i` induce subgraphs of `G`
/// for even `i` and of the complement for odd `i`, and each step takes the
/// components of the complement of the current piece.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    /// `partitions[i]` is `Π_i`; blocks sorted, ordered by smallest vertex. The
    /// last entry is the stable partition.
    pub partitions: Vec<Vec<Vec<usize>>>,
    /// Least `i` with `Π_{i+1} = Π_i`.
    pub stabilization_depth: usize,
    #[serde(skip)]
    block_of: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn new(g: &Graph) -> Self {
        let mut partitions = vec![g.components()];
        loop {
            let i = partitions.len() - 1;
            let next: Vec<Vec<usize>> = {
                let mut blocks: Vec<Vec<usize>> = partitions[i]
                    .iter()
                    .flat_map(|b| g.components_within(b, i % 2 == 0))
                    .collect();
                blocks.sort_by_key(|b| b.first().copied());
                blocks
            };
            if next == partitions[i] {
                break;
            }
            partitions.push(next);
        }
        let stabilization_depth = partitions.len() - 1;
        let block_of = partitions
            .iter()
            .map(|p| {
                let mut idx = vec![0; g.n()];
                for (b, block) in p.iter().enumerate() {
                    for &v in block {
                        idx[v] = b;
                    }
                }
                idx
            })
            .collect();
        Decomposition {
            partitions,
            stabilization_depth,
            block_of,
        }
    }

    /// `Π_i`; for `i` past stabilization this is the stable partition.
    pub fn partition(&self, i: usize) -> &[Vec<usize>] {
        &self.partitions[i.min(self.stabilization_depth)]
    }

    /// The block of `Π_i` containing `v`.
    pub fn env(&self, i: usize, v: usize) -> &[usize] {
        let i = i.min(self.stabilization_depth);
        &self.partitions[i][self.block_of[i][v]]
    }

    pub fn same_env(&self, i: usize, u: usize, v: usize) -> bool {
        let i = i.min(self.stabilization_depth);
        self.block_of[i][u] == self.block_of[i][v]
    }

    /// The stable partition, i.e. the cocomponents.
    pub fn stable(&self) -> &[Vec<usize>] {
        &self.partitions[self.stabilization_depth]
    }
}

impl Graph {
    pub fn decomposition(&self) -> Decomposition {
        Decomposition::new(self)
    }
}

/// Vertex sets of the cocomponents.
pub fn cocomponents(g: &Graph) -> Vec<Vec<usize>> {
    Decomposition::new(g).stable().to_vec()
}

/// All cocomponents are single vertices.
pub fn is_cograph(g: &Graph) -> bool {
    Decomposition::new(g).stable().iter().all(|b| b.len() == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MetricError {
    #[error("metric table needs 2^{t} vertices, the graph has {n}")]
    WrongOrder { t: usize, n: usize },
    #[error("t = {t} is too large for a metric table (at most 20)")]
    TooLarge { t: usize },
}

/// `dbar(x, y)`: the largest `k ≤ t` with `x, y` in one block of `Π_k`;
/// `d(x, y) = t − dbar(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricTable {
    pub t: usize,
    pub n: usize,
    dbar: Vec<u8>,
}

impl MetricTable {
    /// For `h = power(K_1, t + 1)`, which has `2^t` vertices.
    pub fn new(h: &Graph, t: usize) -> Result<Self, MetricError> {
        if t > 20 {
            return Err(MetricError::TooLarge { t });
        }
        let n = h.n();
        if n != 1 << t {
            return Err(MetricError::WrongOrder { t, n });
        }
        let dec = Decomposition::new(h);
        let mut dbar = vec![0u8; n * n];
        for x in 0..n {
            for y in 0..n {
                dbar[x * n + y] = (0..=t).rev().find(|&k| dec.same_env(k, x, y)).unwrap_or(0) as u8;
            }
        }
        Ok(MetricTable { t, n, dbar })
    }

    pub fn dbar(&self, x: usize, y: usize) -> usize {
        self.dbar[x * self.n + y] as usize
    }

    pub fn d(&self, x: usize, y: usize) -> usize {
        self.t - self.dbar(x, y)
    }
}

pub fn metric_table(h: &Graph, t: usize) -> Result<MetricTable, MetricError> {
    MetricTable::new(h, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::contains_induced;

    fn h(t: usize) -> Graph {
        Graph::complete(1).power(t + 1).unwrap()
    }

    #[test]
    fn four_cycle_chain() {
        let c4 = Graph::cycle(4);
        let dec = c4.decomposition();
        assert_eq!(dec.partitions[0], vec![vec![0, 1, 2, 3]]);
        assert_eq!(dec.partitions[1], vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(dec.partitions[2], vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(dec.stabilization_depth, 2);
        assert_eq!(dec.env(1, 2), &[0, 2]);
        assert!(is_cograph(&c4));
        assert!(!is_cograph(&Graph::path(4)));
        assert_eq!(cocomponents(&Graph::path(4)), vec![vec![0, 1, 2, 3]]);
    }

    #[test]
    fn partitions_refine() {
        for seed in 0..50 {
            let g = Graph::gnp(12, 0.4, seed).unwrap();
            let dec = g.decomposition();
            for w in dec.partitions.windows(2) {
                for block in &w[1] {
                    assert!(w[0].iter().any(|b| block.iter().all(|v| b.contains(v))));
                }
            }
        }
    }

    /// Maximal complement-connected induced subgraphs, found by trying every
    /// vertex subset.
    fn brute_cocomponents(g: &Graph) -> Vec<Vec<usize>> {
        let n = g.n();
        let good: Vec<u32> = (1u32..1 << n)
            .filter(|&s| {
                let vs: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
                let sub = g.induced(&vs);
                sub.is_connected() && sub.complement().is_connected()
            })
            .collect();
        let mut out: Vec<Vec<usize>> = good
            .iter()
            .filter(|&&s| !good.iter().any(|&t| t != s && t & s == s))
            .map(|&s| (0..n).filter(|&v| s >> v & 1 == 1).collect())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn stable_partition_is_cocomponents() {
        for n in 1..=5 {
            for mask in 0..1u64 << (n * (n - 1) / 2) {
                let g = Graph::from_mask(n, mask);
                let mut got = cocomponents(&g);
                got.sort();
                assert_eq!(got, brute_cocomponents(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn cograph_iff_p4_free_up_to_seven() {
        use rayon::prelude::*;
        let p4 = Graph::path(4);
        for n in 0..=7usize {
            let bits = n * n.saturating_sub(1) / 2;
            let bad = (0..1u64 << bits)
                .into_par_iter()
                .filter(|&m| {
                    let g = Graph::from_mask(n, m);
                    is_cograph(&g) != contains_induced(&g, &p4).is_none()
                })
                .count();
            assert_eq!(bad, 0, "n = {n}");
        }
    }

    #[test]
    fn cographs_have_twins() {
        use rayon::prelude::*;
        for n in 2..=7usize {
            let bits = n * (n - 1) / 2;
            let bad = (0..1u64 << bits)
                .into_par_iter()
                .filter(|&m| {
                    let g = Graph::from_mask(n, m);
                    is_cograph(&g) && g.twins().is_empty()
                })
                .count();
            assert_eq!(bad, 0, "n = {n}");
        }
    }

    #[test]
    fn powers_of_k1() {
        for t in 0..=6 {
            let g = h(t);
            assert!(is_cograph(&g));
            let dec = g.decomposition();
            assert_eq!(dec.stabilization_depth, t);
            assert!(dec.partition(t).iter().all(|b| b.len() == 1));
        }
        assert!(is_cograph(&h(6).complement()));
        assert!(!crate::patterns::has_induced_p4(&Graph::complete(1).power(7).unwrap()));
    }

    #[test]
    fn metric_on_four_cycle() {
        // power(K_1, 3) is K_2 + K_2 complemented: twins {0, 1} and {2, 3}.
        assert!(h(2).is_isomorphic(&Graph::cycle(4)));
        let m = metric_table(&h(2), 2).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                let want = if x == y { 0 } else if x / 2 == y / 2 { 1 } else { 2 };
                assert_eq!(m.d(x, y), want, "({x},{y})");
            }
        }
        assert_eq!(
            metric_table(&Graph::cycle(5), 2),
            Err(MetricError::WrongOrder { t: 2, n: 5 })
        );
    }

    #[test]
    fn metric_claims() {
        for t in 1..=6 {
            let g = h(t);
            let m = metric_table(&g, t).unwrap();
            let n = g.n();
            let twins: std::collections::BTreeSet<(usize, usize)> = g
                .twins()
                .into_iter()
                .map(|p| (p.u.min(p.v), p.u.max(p.v)))
                .collect();
            for x in 0..n {
                for y in 0..n {
                    assert_eq!(m.d(x, y) == 0, x == y);
                    assert_eq!(m.d(x, y), m.d(y, x));
                    if x < y {
                        assert_eq!(m.d(x, y) == 1, twins.contains(&(x, y)));
                    }
                    for z in 0..n {
                        assert!(m.d(x, y) <= m.d(x, z).max(m.d(z, y)));
                        if x != y && y != z && x != z {
                            assert!(!(m.d(x, y) == m.d(x, z) && m.d(x, z) == m.d(y, z)));
                        }
                        if m.d(x, y) < m.d(x, z) {
                            assert_eq!(m.d(y, z), m.d(x, z));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn paley_blowups_are_complement_connected() {
        let a = Graph::paley(13).unwrap();
        for i in 1..=3 {
            let g = a.lex_product(&h(i - 1));
            assert!(g.is_connected() && g.complement().is_connected(), "i = {i}");
        }
    }
}
