//! The graph families built from powers of `K_1`.
//!
//! Vertex numbering follows the core crate: in `X^{i+1} = complement(X^i + X^i)`
//! the second copy is offset by `|X^i|`, and in a lexicographic product `A·B`
//! the vertex `(a, b)` is `a·|B| + b`. With these conventions the identities
//! below hold as equalities of labeled graphs, not merely up to isomorphism.

use fowidth::extension::{check_ea, ExtensionError};
use fowidth::graph::{Graph, GraphError};
use fowidth::patterns::has_induced_p4;
use thiserror::Error;

/// Largest `i` accepted by [`build_h`]; `H_8` has 128 vertices.
pub const MAX_H: usize = 8;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("H_i is limited to 1 <= i <= {MAX_H}, got {0}")]
    HRange(usize),
    #[error("G_i needs an odd i, got {0}")]
    EvenIndex(usize),
    #[error("the base graph fails the 3-extension axiom")]
    NotExtending,
    #[error("the base graph has no induced P4")]
    NoP4,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
}

/// `H_i = (K_1)^i`, on `2^{i-1}` vertices.
pub fn build_h(i: usize) -> Result<Graph, ConstructError> {
    if !(1..=MAX_H).contains(&i) {
        return Err(ConstructError::HRange(i));
    }
    Ok(Graph::empty(1).power(i)?)
}

/// `G_i = H_i · (A · H_i)` for odd `i`. `a` must satisfy the 3-extension
/// axiom and contain an induced `P_4`; both are checked.
pub fn build_g(i: usize, a: &Graph) -> Result<Graph, ConstructError> {
    if i % 2 == 0 {
        return Err(ConstructError::EvenIndex(i));
    }
    let h = build_h(i)?;
    if !check_ea(a, 3)?.holds {
        return Err(ConstructError::NotExtending);
    }
    if !has_induced_p4(a) {
        return Err(ConstructError::NoP4);
    }
    Ok(h.lex_product(&a.lex_product(&h)))
}

/// `f(X) = complement(X + X)`.
pub fn f_step(x: &Graph) -> Graph {
    x.disjoint_union(x).complement()
}

/// `f^j(X)`.
pub fn f_iterate(x: &Graph, j: usize) -> Graph {
    (0..j).fold(x.clone(), |acc, _| f_step(&acc))
}

/// The closed form of `f^j(X)`: `(K_1)^{j+1} · X` for even `j`, and
/// `(K_1)^{j+1} · complement(X)` for odd `j`.
pub fn f_closed_form(x: &Graph, j: usize) -> Result<Graph, GraphError> {
    let factor = if j % 2 == 0 { x.clone() } else { x.complement() };
    Ok(Graph::empty(1).power(j + 1)?.lex_product(&factor))
}

/// `G·K_s` (`adjacent`) or `G·complement(K_s)`.
pub fn blowup(g: &Graph, s: usize, adjacent: bool) -> Graph {
    let part = if adjacent {
        Graph::complete(s)
    } else {
        Graph::empty(s)
    };
    g.lex_product(&part)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fowidth::patterns::is_cograph;

    #[test]
    fn small_powers() {
        assert_eq!(build_h(1).unwrap(), Graph::empty(1));
        assert_eq!(build_h(2).unwrap(), Graph::complete(2));
        assert!(build_h(3).unwrap().is_isomorphic(&Graph::cycle(4)));
        for i in 1..=7 {
            let h = build_h(i).unwrap();
            assert_eq!(h.n(), 1 << (i - 1));
            assert!(is_cograph(&h));
        }
        assert!(matches!(build_h(0), Err(ConstructError::HRange(0))));
        assert!(matches!(build_h(9), Err(ConstructError::HRange(9))));
    }

    #[test]
    fn base_graph_is_checked() {
        let p13 = Graph::paley(13).unwrap();
        let g = build_g(3, &p13).unwrap();
        assert_eq!(g.n(), 4 * 13 * 4);
        assert!(has_induced_p4(&g));
        assert!(matches!(build_g(2, &p13), Err(ConstructError::EvenIndex(2))));
        assert!(matches!(build_g(3, &Graph::cycle(5)), Err(ConstructError::NotExtending)));
    }

    #[test]
    fn f_chain_on_a_path() {
        let x = Graph::path(3);
        for j in 0..=3 {
            assert_eq!(f_iterate(&x, j), f_closed_form(&x, j).unwrap());
        }
    }

    #[test]
    fn trivial_blowup() {
        let g = Graph::paw();
        assert_eq!(blowup(&g, 1, true), g);
        assert_eq!(blowup(&g, 1, false), g);
        assert_eq!(blowup(&g, 3, false).n(), 12);
    }
}
