//! Induced-subgraph detection.
//!
//! [`contains_induced`] is the generic backtracking search and the reference
//! every specialized detector is tested against. The specialized detectors
//! rely on structure theorems: P₄-freeness is cograph recognition, and
//! paw-freeness is Olariu's characterization (every component triangle-free
//! or complete multipartite).

mod cograph;

pub use cograph::{cocomponents, is_cograph, metric_table, Decomposition, MetricError, MetricTable};

use crate::graph::Graph;

/// Finds an induced copy of `f` in `g`.
///
/// Returns `w` with `w[i]` the vertex of `g` playing the role of vertex `i`
/// of `f`, or `None`. Candidates are filtered by degree and co-degree and by
/// intersecting adjacency rows of the vertices already placed.
pub fn contains_induced(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
    let (n, l) = (g.n(), f.n());
    if l > n {
        return None;
    }
    if l == 0 {
        return Some(Vec::new());
    }
    // Place high-degree pattern vertices first, then their neighbours.
    let mut order = Vec::with_capacity(l);
    let mut placed = vec![false; l];
    while order.len() < l {
        let start = (0..l)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (f.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[start] = true;
        order.push(start);
        let mut i = order.len() - 1;
        while i < order.len() {
            let u = order[i];
            let mut next: Vec<usize> = f.neighbors(u).filter(|&v| !placed[v]).collect();
            next.sort_by_key(|&v| std::cmp::Reverse(f.degree(v)));
            for v in next {
                placed[v] = true;
                order.push(v);
            }
            i += 1;
        }
    }

    let w = g.words();
    let mut full = vec![!0u64; w];
    if n % 64 != 0 {
        full[w - 1] = (1u64 << (n % 64)) - 1;
    }
    let g_deg = g.degrees();
    let f_deg = f.degrees();
    let mut image = vec![usize::MAX; l];

    struct Ctx<'a> {
        g: &'a Graph,
        f: &'a Graph,
        order: &'a [usize],
        full: &'a [u64],
        g_deg: &'a [usize],
        f_deg: &'a [usize],
    }

    fn extend(ctx: &Ctx, idx: usize, image: &mut [usize], used: &mut [u64]) -> bool {
        let Some(&p) = ctx.order.get(idx) else {
            return true;
        };
        let (n, l) = (ctx.g.n(), ctx.f.n());
        let mut cand: Vec<u64> = ctx.full.iter().zip(used.iter()).map(|(a, b)| a & !b).collect();
        for &q in &ctx.order[..idx] {
            let row = ctx.g.row(image[q]);
            if ctx.f.adjacent(p, q) {
                cand.iter_mut().zip(row).for_each(|(c, r)| *c &= r);
            } else {
                cand.iter_mut().zip(row).for_each(|(c, r)| *c &= !r);
            }
        }
        let need_deg = ctx.f_deg[p];
        let need_codeg = l - 1 - need_deg;
        for v in crate::graph::Ones::new(&cand).collect::<Vec<_>>() {
            if ctx.g_deg[v] < need_deg || n - 1 - ctx.g_deg[v] < need_codeg {
                continue;
            }
            image[p] = v;
            used[v / 64] |= 1 << (v % 64);
            if extend(ctx, idx + 1, image, used) {
                return true;
            }
            used[v / 64] &= !(1 << (v % 64));
        }
        image[p] = usize::MAX;
        false
    }

    let ctx = Ctx {
        g,
        f,
        order: &order,
        full: &full,
        g_deg: &g_deg,
        f_deg: &f_deg,
    };
    let mut used = vec![0u64; w];
    extend(&ctx, 0, &mut image, &mut used).then_some(image)
}

/// A triangle `[a, b, c]` with `a < b < c`, found by intersecting adjacency rows.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for u in 0..g.n() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            let common = g
                .row(u)
                .iter()
                .zip(g.row(v))
                .enumerate()
                .find_map(|(k, (a, b))| {
                    let mut m = a & b;
                    // Only third vertices above v, so each triangle is reported sorted.
                    while m != 0 {
                        let x = k * 64 + m.trailing_zeros() as usize;
                        if x > v {
                            return Some(x);
                        }
                        m &= m - 1;
                    }
                    None
                });
            if let Some(x) = common {
                return Some([u, v, x]);
            }
        }
    }
    None
}

fn is_complete_multipartite(g: &Graph, comp: &[usize]) -> bool {
    // Non-adjacency must be an equivalence relation on the component: two
    // non-adjacent vertices see exactly the same vertices.
    let mut mask = vec![0u64; g.words()];
    for &v in comp {
        mask[v / 64] |= 1 << (v % 64);
    }
    let same_row = |u: usize, v: usize| {
        g.row(u)
            .iter()
            .zip(g.row(v))
            .zip(&mask)
            .all(|((a, b), m)| a & m == b & m)
    };
    comp.iter().enumerate().all(|(i, &u)| {
        comp[i + 1..]
            .iter()
            .all(|&v| g.adjacent(u, v) || same_row(u, v))
    })
}

/// Paw-freeness by Olariu's characterization: every connected component is
/// triangle-free or complete multipartite.
pub fn is_paw_free(g: &Graph) -> bool {
    g.components().into_iter().all(|comp| {
        find_triangle(&g.induced(&comp)).is_none() || is_complete_multipartite(g, &comp)
    })
}

pub fn has_induced_p4(g: &Graph) -> bool {
    !is_cograph(g)
}

pub fn has_induced_paw(g: &Graph) -> bool {
    !is_paw_free(g)
}

/// A vertex whose neighbourhood contains three pairwise non-adjacent vertices.
pub fn has_induced_claw(g: &Graph) -> bool {
    (0..g.n()).any(|c| {
        let nb: Vec<usize> = g.neighbors(c).collect();
        nb.iter().enumerate().any(|(i, &a)| {
            nb[i + 1..].iter().enumerate().any(|(j, &b)| {
                !g.adjacent(a, b)
                    && nb[i + 1 + j + 1..]
                        .iter()
                        .any(|&x| !g.adjacent(a, x) && !g.adjacent(b, x))
            })
        })
    })
}

/// An edge whose endpoints have two non-adjacent common neighbours.
pub fn has_induced_diamond(g: &Graph) -> bool {
    g.edges().into_iter().any(|(u, v)| {
        let common: Vec<usize> = g.neighbors(u).filter(|&x| g.adjacent(v, x)).collect();
        common
            .iter()
            .enumerate()
            .any(|(i, &a)| common[i + 1..].iter().any(|&b| !g.adjacent(a, b)))
    })
}

/// Patterns with a dedicated detector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    Triangle,
    P4,
    Paw,
    Claw,
    Diamond,
}

impl Pattern {
    pub fn graph(self) -> Graph {
        match self {
            Pattern::Triangle => Graph::complete(3),
            Pattern::P4 => Graph::path(4),
            Pattern::Paw => Graph::paw(),
            Pattern::Claw => Graph::claw(),
            Pattern::Diamond => Graph::diamond(),
        }
    }

    pub fn detect(self, g: &Graph) -> bool {
        match self {
            Pattern::Triangle => find_triangle(g).is_some(),
            Pattern::P4 => has_induced_p4(g),
            Pattern::Paw => has_induced_paw(g),
            Pattern::Claw => has_induced_claw(g),
            Pattern::Diamond => has_induced_diamond(g),
        }
    }
}

impl std::str::FromStr for Pattern {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "triangle" | "k3" => Ok(Pattern::Triangle),
            "p4" => Ok(Pattern::P4),
            "paw" => Ok(Pattern::Paw),
            "claw" => Ok(Pattern::Claw),
            "diamond" => Ok(Pattern::Diamond),
            other => Err(format!("unknown pattern '{other}'")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Induced containment by trying every injective map; the oracle for the
    /// backtracking search.
    fn brute_contains(g: &Graph, f: &Graph) -> bool {
        fn go(g: &Graph, f: &Graph, image: &mut Vec<usize>) -> bool {
            let i = image.len();
            if i == f.n() {
                return true;
            }
            for v in 0..g.n() {
                if image.contains(&v) {
                    continue;
                }
                if (0..i).all(|j| f.adjacent(i, j) == g.adjacent(v, image[j])) {
                    image.push(v);
                    if go(g, f, image) {
                        return true;
                    }
                    image.pop();
                }
            }
            false
        }
        go(g, f, &mut Vec::new())
    }

    fn is_induced_copy(g: &Graph, f: &Graph, w: &[usize]) -> bool {
        (0..f.n()).all(|i| (0..f.n()).all(|j| i == j || f.adjacent(i, j) == g.adjacent(w[i], w[j])))
            && {
                let mut s = w.to_vec();
                s.sort_unstable();
                s.dedup();
                s.len() == w.len()
            }
    }

    #[test]
    fn containment_examples() {
        let paw = Graph::paw();
        let mut w = contains_induced(&paw, &paw).unwrap();
        w.sort_unstable();
        assert_eq!(w, vec![0, 1, 2, 3]);
        assert_eq!(contains_induced(&Graph::cycle(6), &Graph::cycle(4)), None);
        let q3 = Graph::hypercube(3);
        let face = contains_induced(&q3, &Graph::cycle(4)).unwrap();
        assert!(is_induced_copy(&q3, &Graph::cycle(4), &face));
        assert_eq!(contains_induced(&Graph::empty(3), &Graph::empty(0)), Some(vec![]));
        assert_eq!(contains_induced(&Graph::empty(2), &Graph::empty(3)), None);
    }

    #[test]
    fn containment_agrees_with_brute_force() {
        let patterns: Vec<Graph> = (0..1u64 << 6).map(|m| Graph::from_mask(4, m)).collect();
        for seed in 0..40 {
            let g = Graph::gnp(7, 0.5, seed).unwrap();
            for f in &patterns {
                let got = contains_induced(&g, f);
                assert_eq!(got.is_some(), brute_contains(&g, f));
                if let Some(w) = got {
                    assert!(is_induced_copy(&g, f, &w));
                }
            }
        }
    }

    #[test]
    fn triangles() {
        assert_eq!(find_triangle(&Graph::complete(3)), Some([0, 1, 2]));
        assert_eq!(find_triangle(&Graph::cycle(6)), None);
        assert_eq!(find_triangle(&Graph::paw()), Some([0, 1, 2]));
    }

    #[test]
    fn paw_freeness() {
        assert!(is_paw_free(&Graph::cycle(5)));
        assert!(!is_paw_free(&Graph::paw()));
        assert!(is_paw_free(&Graph::complete(4)));
        assert!(is_paw_free(&Graph::turan(3, 2)));
        assert!(!is_paw_free(&Graph::paw().disjoint_union(&Graph::empty(1))));
    }

    #[test]
    fn rook_three_is_claw_and_diamond_free() {
        let r = Graph::rook(3);
        assert!(!has_induced_claw(&r));
        assert!(!has_induced_diamond(&r));
        assert!(has_induced_claw(&Graph::claw()));
        assert!(has_induced_diamond(&Graph::diamond()));
    }

    #[test]
    fn detectors_agree_with_search_on_all_graphs_up_to_six() {
        let kinds = [Pattern::Triangle, Pattern::P4, Pattern::Paw, Pattern::Claw, Pattern::Diamond];
        for n in 0..=6usize {
            for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_mask(n, mask);
                for k in kinds {
                    assert_eq!(
                        k.detect(&g),
                        contains_induced(&g, &k.graph()).is_some(),
                        "{k:?} on {g:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn complement_duality_exhaustive() {
        let patterns = [Graph::path(3), Graph::paw(), Graph::cycle(4), Graph::claw(), Graph::path(4)];
        for n in 0..=6usize {
            for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_mask(n, mask);
                let gc = g.complement();
                for f in &patterns {
                    assert_eq!(
                        contains_induced(&g, f).is_some(),
                        contains_induced(&gc, &f.complement()).is_some()
                    );
                }
            }
        }
    }
}
