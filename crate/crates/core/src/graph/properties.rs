//! Structural invariants: strong regularity, vertex connectivity, chromatic
//! number, twins and automorphism extension.

use std::collections::VecDeque;

use serde::Serialize;

use super::{distance_matrix, Graph, GraphError};

pub const CHROMATIC_MAX_VERTICES: usize = 16;
pub const AUTOMORPHISM_MAX_VERTICES: usize = 64;

/// Parameters `(n, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// Accepts only parameter sets satisfying `k(k − λ − 1) = (n − k − 1)μ`.
    pub fn new(n: usize, k: usize, lambda: usize, mu: usize) -> Result<Self, GraphError> {
        // Both an adjacent and a non-adjacent pair must exist to witness λ and μ.
        let feasible =
            k >= 1 && k + 1 < n && lambda < k && k * (k - lambda - 1) == (n - k - 1) * mu;
        if !feasible {
            return Err(GraphError::InvalidParameter(format!(
                "({n}, {k}, {lambda}, {mu}) violates k(k - λ - 1) = (n - k - 1)μ"
            )));
        }
        Ok(SrgParams { n, k, lambda, mu })
    }

    /// Non-trivial exactly when `0 < μ < k < n − 1`; the trivial ones are
    /// `sK_t` and complete multipartite graphs with equal parts.
    pub fn is_nontrivial(&self) -> bool {
        0 < self.mu && self.mu < self.k && self.k + 1 < self.n
    }
}

/// Outcome of [`is_strongly_regular`] for a regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Srg {
    Proper(SrgParams),
    /// Complete or edgeless (or tiny) graphs: one of λ, μ has no witness pair.
    Degenerate {
        n: usize,
        k: usize,
        lambda: Option<usize>,
        mu: Option<usize>,
    },
}

/// `Some` iff `g` is regular with constant λ over adjacent pairs and constant
/// μ over non-adjacent pairs.
pub fn is_strongly_regular(g: &Graph) -> Option<Srg> {
    let n = g.n();
    let k = if n == 0 { 0 } else { g.degree(0) };
    if (0..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbors(u, v);
            let slot = if g.adjacent(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(prev) if prev != c => return None,
                Some(_) => {}
            }
        }
    }
    match (lambda, mu) {
        (Some(lambda), Some(mu)) => Some(Srg::Proper(
            SrgParams::new(n, k, lambda, mu).expect("counted parameters are feasible"),
        )),
        (lambda, mu) => Some(Srg::Degenerate { n, k, lambda, mu }),
    }
}

struct FlowNet {
    head: Vec<usize>,
    to: Vec<usize>,
    next: Vec<usize>,
    cap: Vec<u8>,
    base_cap: Vec<u8>,
}

const NIL: usize = usize::MAX;

impl FlowNet {
    /// Vertex-split network: `v_in = 2v`, `v_out = 2v + 1`, unit capacities.
    fn split(g: &Graph) -> Self {
        let n = g.n();
        let mut net = FlowNet {
            head: vec![NIL; 2 * n],
            to: Vec::new(),
            next: Vec::new(),
            cap: Vec::new(),
            base_cap: Vec::new(),
        };
        for v in 0..n {
            net.arc(2 * v, 2 * v + 1);
        }
        for (u, v) in g.edges() {
            net.arc(2 * u + 1, 2 * v);
            net.arc(2 * v + 1, 2 * u);
        }
        net.cap = net.base_cap.clone();
        net
    }

    fn arc(&mut self, a: usize, b: usize) {
        for (from, to, c) in [(a, b, 1), (b, a, 0)] {
            self.to.push(to);
            self.next.push(self.head[from]);
            self.base_cap.push(c);
            self.head[from] = self.to.len() - 1;
        }
    }

    /// Number of internally vertex-disjoint `s`–`t` paths, stopping at `limit`.
    fn local(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base_cap);
        let (src, sink) = (2 * s + 1, 2 * t);
        let nodes = self.head.len();
        let mut via = vec![NIL; nodes];
        let mut flow = 0;
        while flow < limit {
            via.iter_mut().for_each(|x| *x = NIL);
            let mut queue = VecDeque::from([src]);
            let mut seen = vec![false; nodes];
            seen[src] = true;
            while let Some(x) = queue.pop_front() {
                if x == sink {
                    break;
                }
                let mut e = self.head[x];
                while e != NIL {
                    let y = self.to[e];
                    if self.cap[e] > 0 && !seen[y] {
                        seen[y] = true;
                        via[y] = e;
                        queue.push_back(y);
                    }
                    e = self.next[e];
                }
            }
            if !seen[sink] {
                break;
            }
            let mut y = sink;
            while y != src {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            flow += 1;
        }
        flow
    }
}

/// `min(κ(G), cap)` by Even's algorithm with capped unit-capacity flows.
fn connectivity_capped(g: &Graph, cap: usize) -> usize {
    let n = g.n();
    if n <= 1 || !g.is_connected() {
        return 0;
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return (n - 1).min(cap);
    }
    let mut best = g.degrees().into_iter().min().unwrap().min(cap);
    let mut net = FlowNet::split(g);
    let mut i = 0;
    while i <= best && i < n {
        for j in i + 1..n {
            if !g.adjacent(i, j) {
                best = best.min(net.local(i, j, best));
            }
        }
        i += 1;
    }
    best
}

/// κ(G): the least number of vertices whose removal disconnects `G` or leaves
/// one vertex. `κ(K_n) = n − 1`; disconnected and single-vertex graphs give 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    connectivity_capped(g, g.n())
}

/// Whether `G` is `s`-connected, i.e. `κ(G) ≥ s`.
pub fn vertex_connectivity_at_least(g: &Graph, s: usize) -> bool {
    s == 0 || connectivity_capped(g, s) >= s
}

/// Exact chromatic number by backtracking; refuses graphs above
/// [`CHROMATIC_MAX_VERTICES`] vertices.
pub fn chromatic_number(g: &Graph) -> Result<usize, GraphError> {
    let n = g.n();
    if n > CHROMATIC_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            operation: "chromatic_number",
            n,
            limit: CHROMATIC_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));

    fn extend(g: &Graph, order: &[usize], colors: &mut [usize], idx: usize, k: usize, used: usize) -> bool {
        if idx == order.len() {
            return true;
        }
        let v = order[idx];
        // Symmetry breaking: a vertex may open at most one new colour.
        for c in 1..=k.min(used + 1) {
            if g.neighbors(v).all(|u| colors[u] != c) {
                colors[v] = c;
                if extend(g, order, colors, idx + 1, k, used.max(c)) {
                    return true;
                }
                colors[v] = 0;
            }
        }
        false
    }

    let mut colors = vec![0; n];
    Ok((1..=n)
        .find(|&k| {
            colors.iter_mut().for_each(|c| *c = 0);
            extend(g, &order, &mut colors, 0, k, 0)
        })
        .unwrap())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TwinKind {
    Adjacent,
    NonAdjacent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TwinPair {
    pub u: usize,
    pub v: usize,
    pub kind: TwinKind,
}

/// All pairs `u < v` with `N(u) \ {v} = N(v) \ {u}`.
pub fn twins(g: &Graph) -> Vec<TwinPair> {
    let n = g.n();
    let w = g.words();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let same = (0..w).all(|k| {
                let mut mask = !0u64;
                if u / 64 == k {
                    mask &= !(1 << (u % 64));
                }
                if v / 64 == k {
                    mask &= !(1 << (v % 64));
                }
                g.row(u)[k] & mask == g.row(v)[k] & mask
            });
            if same {
                let kind = if g.adjacent(u, v) {
                    TwinKind::Adjacent
                } else {
                    TwinKind::NonAdjacent
                };
                out.push(TwinPair { u, v, kind });
            }
        }
    }
    out
}

/// Whether the partial map `partial` (pairs `x -> y`) extends to an
/// automorphism of `g`. Backtracks with degree and distance pruning; refuses
/// graphs above [`AUTOMORPHISM_MAX_VERTICES`].
pub fn automorphism_exists(g: &Graph, partial: &[(usize, usize)]) -> Result<bool, GraphError> {
    let n = g.n();
    if n > AUTOMORPHISM_MAX_VERTICES {
        return Err(GraphError::TooLarge {
            operation: "automorphism_exists",
            n,
            limit: AUTOMORPHISM_MAX_VERTICES,
        });
    }
    let dist = distance_matrix(g);
    let deg = g.degrees();
    let mut image = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    let mut assigned = Vec::new();
    for &(x, y) in partial {
        if x >= n || y >= n {
            return Err(GraphError::InvalidParameter(format!(
                "pair ({x}, {y}) out of range for {n} vertices"
            )));
        }
        if image[x] == y {
            continue;
        }
        if image[x] != usize::MAX || taken[y] {
            return Ok(false);
        }
        image[x] = y;
        taken[y] = true;
        assigned.push(x);
    }
    let consistent = |image: &[usize], assigned: &[usize], x: usize, y: usize| {
        deg[x] == deg[y]
            && assigned
                .iter()
                .all(|&a| dist[x * n + a] == dist[y * n + image[a]])
    };
    for (i, &x) in assigned.iter().enumerate() {
        if !consistent(&image, &assigned[..i], x, image[x]) {
            return Ok(false);
        }
    }
    // Remaining vertices in BFS order from the fixed ones, so each new vertex
    // has assigned neighbours constraining it.
    let mut order = Vec::new();
    let mut placed = vec![false; n];
    let mut queue: VecDeque<usize> = assigned.iter().copied().collect();
    for &a in &assigned {
        placed[a] = true;
    }
    loop {
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if !placed[v] {
                    placed[v] = true;
                    order.push(v);
                    queue.push_back(v);
                }
            }
        }
        match (0..n).find(|&v| !placed[v]) {
            Some(v) => {
                placed[v] = true;
                order.push(v);
                queue.push_back(v);
            }
            None => break,
        }
    }

    fn search(
        idx: usize,
        order: &[usize],
        image: &mut [usize],
        taken: &mut [bool],
        assigned: &mut Vec<usize>,
        ok: &dyn Fn(&[usize], &[usize], usize, usize) -> bool,
    ) -> bool {
        let Some(&x) = order.get(idx) else {
            return true;
        };
        for y in 0..image.len() {
            if taken[y] || !ok(image, assigned, x, y) {
                continue;
            }
            image[x] = y;
            taken[y] = true;
            assigned.push(x);
            if search(idx + 1, order, image, taken, assigned, ok) {
                return true;
            }
            assigned.pop();
            taken[y] = false;
            image[x] = usize::MAX;
        }
        false
    }

    Ok(search(0, &order, &mut image, &mut taken, &mut assigned, &consistent))
}

impl Graph {
    pub fn is_strongly_regular(&self) -> Option<Srg> {
        is_strongly_regular(self)
    }

    pub fn vertex_connectivity(&self) -> usize {
        vertex_connectivity(self)
    }

    pub fn chromatic_number(&self) -> Result<usize, GraphError> {
        chromatic_number(self)
    }

    pub fn twins(&self) -> Vec<TwinPair> {
        twins(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proper(g: &Graph) -> Option<(usize, usize, usize, usize)> {
        match is_strongly_regular(g)? {
            Srg::Proper(p) => Some((p.n, p.k, p.lambda, p.mu)),
            Srg::Degenerate { .. } => None,
        }
    }

    #[test]
    fn strongly_regular_examples() {
        assert_eq!(proper(&Graph::rook(3)), Some((9, 4, 1, 2)));
        for m in 3..=5 {
            assert_eq!(proper(&Graph::rook(m)), Some((m * m, 2 * m - 2, m - 2, 2)));
        }
        assert_eq!(proper(&Graph::cycle(5)), Some((5, 2, 0, 1)));
        assert_eq!(proper(&Graph::paley(13).unwrap()), Some((13, 6, 2, 3)));
        assert_eq!(is_strongly_regular(&Graph::path(4)), None);
        assert_eq!(is_strongly_regular(&Graph::cycle(6)), None);
        assert!(matches!(
            is_strongly_regular(&Graph::complete(5)),
            Some(Srg::Degenerate { lambda: Some(3), mu: None, .. })
        ));
        assert!(matches!(
            is_strongly_regular(&Graph::empty(4)),
            Some(Srg::Degenerate { lambda: None, mu: Some(0), .. })
        ));
        let two_k3 = Graph::complete(3).copies(2);
        let p = match is_strongly_regular(&two_k3) { Some(Srg::Proper(p)) => p, other => panic!("{other:?}") };
        assert!(!p.is_nontrivial());
        assert!(SrgParams::new(9, 4, 1, 2).unwrap().is_nontrivial());
        assert!(SrgParams::new(9, 4, 1, 3).is_err());
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&Graph::rook(3)), 4);
        assert_eq!(vertex_connectivity(&Graph::path(4)), 1);
        assert_eq!(vertex_connectivity(&Graph::complete(5)), 4);
        assert_eq!(vertex_connectivity(&Graph::cycle(6)), 2);
        assert_eq!(vertex_connectivity(&Graph::hypercube(3)), 3);
        assert_eq!(vertex_connectivity(&Graph::complete(2).copies(2)), 0);
        assert_eq!(vertex_connectivity(&Graph::empty(1)), 0);
        assert_eq!(vertex_connectivity(&Graph::complete_bipartite(3, 5)), 3);
        assert!(vertex_connectivity_at_least(&Graph::rook(4), 6));
        assert!(!vertex_connectivity_at_least(&Graph::rook(4), 7));
    }

    /// κ by deleting every vertex subset, for cross-checking on small graphs.
    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.n();
        if n <= 1 {
            return 0;
        }
        let mut best = n - 1;
        for mask in 0u32..1 << n {
            let keep: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if keep.len() >= 2 && !g.induced(&keep).is_connected() {
                best = best.min(n - keep.len());
            }
        }
        best
    }

    #[test]
    fn connectivity_matches_subset_deletion() {
        for seed in 0..60 {
            let g = Graph::gnp(7, 0.5, seed).unwrap();
            assert_eq!(vertex_connectivity(&g), brute_connectivity(&g), "{g:?}");
        }
    }

    #[test]
    fn chromatic_examples() {
        for l in 0..=8 {
            assert_eq!(chromatic_number(&Graph::complete(l)).unwrap(), l);
        }
        assert_eq!(chromatic_number(&Graph::paw()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::cycle(4)).unwrap(), 2);
        assert_eq!(chromatic_number(&Graph::paley(13).unwrap()).unwrap(), 5);
        assert!(matches!(
            chromatic_number(&Graph::empty(17)),
            Err(GraphError::TooLarge { .. })
        ));
    }

    #[test]
    fn twin_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(
            twins(&c4),
            vec![
                TwinPair { u: 0, v: 2, kind: TwinKind::NonAdjacent },
                TwinPair { u: 1, v: 3, kind: TwinKind::NonAdjacent },
            ]
        );
        assert!(twins(&Graph::path(4)).is_empty());
        assert_eq!(twins(&Graph::complete(3)).len(), 3);
        assert!(twins(&Graph::complete(3)).iter().all(|t| t.kind == TwinKind::Adjacent));
    }

    #[test]
    fn automorphisms() {
        let h = Graph::empty(1).power(4).unwrap();
        for x in 0..h.n() {
            for y in 0..h.n() {
                assert!(automorphism_exists(&h, &[(x, y)]).unwrap());
            }
        }
        // The paw has only the swap of its two degree-2 vertices.
        let paw = Graph::paw();
        assert!(automorphism_exists(&paw, &[(0, 1)]).unwrap());
        assert!(!automorphism_exists(&paw, &[(0, 3)]).unwrap());
        assert!(!automorphism_exists(&paw, &[(0, 1), (1, 1)]).unwrap());
        assert!(automorphism_exists(&Graph::empty(65), &[]).is_err());
    }
}
