//! Distance tables `f_{i,j}(d)`, distance-regularity and similarity.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use super::Graph;

/// Marker for "no path" in [`distance_matrix`].
pub const UNREACHABLE: usize = usize::MAX;

/// All-pairs BFS distances; row-major `n × n`, [`UNREACHABLE`] across components.
pub fn distance_matrix(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut dist = vec![UNREACHABLE; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if row[v] == UNREACHABLE {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    dist
}

/// The table of counts `f(i, j, d)`: how many vertices `w` lie at distance `i`
/// from `u` and `j` from `v`, for a pair `u, v` at distance `d`.
///
/// Only finite distances are tabulated. The table is taken from the first pair
/// (in row-major order) realizing each `d`; `well_defined` records whether every
/// other pair at that distance produces the same counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceProfile {
    pub connected: bool,
    /// `None` for a disconnected graph.
    pub diameter: Option<usize>,
    pub f: BTreeMap<(usize, usize, usize), usize>,
    pub well_defined: bool,
}

impl DistanceProfile {
    pub fn compute(g: &Graph) -> Self {
        let n = g.n();
        let dist = distance_matrix(g);
        let mut reps: BTreeMap<usize, BTreeMap<(usize, usize), usize>> = BTreeMap::new();
        let mut well_defined = true;
        let mut connected = true;
        for u in 0..n {
            for v in 0..n {
                let d = dist[u * n + v];
                if d == UNREACHABLE {
                    connected = false;
                    continue;
                }
                let mut counts: BTreeMap<(usize, usize), usize> = BTreeMap::new();
                for w in 0..n {
                    let (i, j) = (dist[u * n + w], dist[v * n + w]);
                    if i != UNREACHABLE && j != UNREACHABLE {
                        *counts.entry((i, j)).or_default() += 1;
                    }
                }
                match reps.get(&d) {
                    Some(seen) => well_defined &= *seen == counts,
                    None => {
                        reps.insert(d, counts);
                    }
                }
            }
        }
        let diameter = if connected { reps.keys().copied().max() } else { None };
        let f = reps
            .into_iter()
            .flat_map(|(d, counts)| counts.into_iter().map(move |((i, j), c)| ((i, j, d), c)))
            .collect();
        DistanceProfile {
            connected,
            diameter,
            f,
            well_defined,
        }
    }

    /// `f(i, j, d)`, zero when not realized.
    pub fn get(&self, i: usize, j: usize, d: usize) -> usize {
        self.f.get(&(i, j, d)).copied().unwrap_or(0)
    }

    /// Distances `d` realized by some pair.
    pub fn realized(&self) -> BTreeSet<usize> {
        self.f.keys().map(|&(_, _, d)| d).collect()
    }
}

/// A connected graph whose table depends only on `(i, j, d)`.
pub fn is_distance_regular(g: &Graph) -> bool {
    let p = DistanceProfile::compute(g);
    p.connected && p.well_defined
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("similarity is defined for connected distance-regular graphs; the {which} graph is not one")]
pub struct NotDistanceRegular {
    pub which: &'static str,
}

/// Two distance-regular graphs are similar when `f^G(i,j,d) = 0 ⇔ f^H(i,j,d) = 0`
/// over every index realized in either table.
pub fn similar(g: &Graph, h: &Graph) -> Result<bool, NotDistanceRegular> {
    let pg = DistanceProfile::compute(g);
    if !(pg.connected && pg.well_defined) {
        return Err(NotDistanceRegular { which: "first" });
    }
    let ph = DistanceProfile::compute(h);
    if !(ph.connected && ph.well_defined) {
        return Err(NotDistanceRegular { which: "second" });
    }
    let keys: BTreeSet<(usize, usize, usize)> = pg.f.keys().chain(ph.f.keys()).copied().collect();
    let agree = keys
        .into_iter()
        .all(|(i, j, d)| (pg.get(i, j, d) == 0) == (ph.get(i, j, d) == 0));
    Ok(agree)
}

impl Graph {
    pub fn distance_profile(&self) -> DistanceProfile {
        DistanceProfile::compute(self)
    }

    pub fn is_distance_regular(&self) -> bool {
        is_distance_regular(self)
    }

    pub fn similar(&self, other: &Graph) -> Result<bool, NotDistanceRegular> {
        similar(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight recount of f over every pair, independent of the table code.
    fn brute_f(g: &Graph, i: usize, j: usize, d: usize) -> BTreeSet<usize> {
        let n = g.n();
        let dist = distance_matrix(g);
        let mut values = BTreeSet::new();
        for u in 0..n {
            for v in 0..n {
                if dist[u * n + v] == d {
                    values.insert(
                        (0..n)
                            .filter(|&w| dist[u * n + w] == i && dist[v * n + w] == j)
                            .count(),
                    );
                }
            }
        }
        values
    }

    #[test]
    fn six_cycle() {
        let c6 = Graph::cycle(6);
        let p = c6.distance_profile();
        assert!(p.well_defined && p.connected);
        assert_eq!(p.diameter, Some(3));
        assert_eq!(p.get(1, 1, 2), 1);
        assert_eq!(brute_f(&c6, 1, 1, 2), BTreeSet::from([1]));
        assert_eq!(p.get(1, 1, 0), 2);
    }

    #[test]
    fn profile_symmetry_and_row_sums() {
        for g in [Graph::cycle(6), Graph::hypercube(3), Graph::rook(3), Graph::paley(13).unwrap()] {
            let p = g.distance_profile();
            assert!(p.well_defined);
            for (&(i, j, d), &c) in &p.f {
                assert_eq!(p.get(j, i, d), c);
            }
            for d in p.realized() {
                let total: usize = p.f.iter().filter(|(k, _)| k.2 == d).map(|(_, c)| c).sum();
                assert_eq!(total, g.n());
            }
        }
    }

    #[test]
    fn paw_is_not_distance_regular() {
        assert!(!Graph::paw().is_distance_regular());
        assert!(!Graph::complete(2).copies(2).is_distance_regular());
    }

    #[test]
    fn cube_similar_to_six_cycle() {
        let q3 = Graph::hypercube(3);
        let c6 = Graph::cycle(6);
        assert!(q3.is_distance_regular() && c6.is_distance_regular());
        // Zero patterns agree entry by entry on the brute-force recount too.
        for i in 0..=3 {
            for j in 0..=3 {
                for d in 0..=3 {
                    let a = brute_f(&q3, i, j, d);
                    let b = brute_f(&c6, i, j, d);
                    assert_eq!(a.contains(&0), b.contains(&0), "({i},{j},{d})");
                }
            }
        }
        assert_eq!(similar(&q3, &c6), Ok(true));
        assert_eq!(similar(&c6, &Graph::cycle(5)), Ok(false));
        assert!(similar(&Graph::paw(), &c6).is_err());
    }

    #[test]
    fn similarity_is_reflexive() {
        for g in [Graph::cycle(7), Graph::hypercube(4), Graph::rook(4), Graph::complete(5)] {
            assert_eq!(similar(&g, &g), Ok(true));
        }
    }
}
