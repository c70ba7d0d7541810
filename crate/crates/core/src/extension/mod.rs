//! Extension axioms and lower bounds on the extension index.
//!
//! A graph has the `k`-extension property (`ea_k`) when for all disjoint
//! vertex sets `X`, `Y` with `|X ∪ Y| < k` some vertex outside `X ∪ Y` is
//! adjacent to everything in `X` and to nothing in `Y`; `ea_1` just says the
//! graph is nonempty. A graph `H` with `ea_{k-1}` and no induced `F` shows
//! that the extension index of `F` is at least `k`.

mod bounds;
mod search;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, Ones};
use crate::patterns::contains_induced;

pub use bounds::{
    alice_lower_bound, least_n_below, successor_ratio, turan_tail_bound, turan_tail_peak, BoundReport,
};
pub use search::{search_witness, SearchOutcome, Strategy, SIZE_LADDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtensionError {
    #[error("k must be at least {min}, got {k}")]
    BadK { k: usize, min: usize },
    #[error(
        "check_ea on {n} vertices with k = {k} needs {work} subset patterns, over the limit of {limit}"
    )]
    Guard { n: usize, k: usize, work: u128, limit: u128 },
    #[error("the extension-index bound needs patterns with at least 16 vertices, got {ell}")]
    SmallEll { ell: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// `C(a, b)` in `u128`, saturating.
pub(crate) fn binom(a: usize, b: usize) -> u128 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut c: u128 = 1;
    for i in 0..b {
        c = c.saturating_mul((a - i) as u128) / (i as u128 + 1);
    }
    c
}

/// Work limit for [`check_ea`]: subsets of size 4 of 200 vertices, times
/// their 16 bipartitions.
pub fn ea_work_limit() -> u128 {
    binom(200, 4) * 16
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EaCounterexample {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EaReport {
    pub k: usize,
    pub holds: bool,
    pub counterexample: Option<EaCounterexample>,
}

fn search_from(
    g: &Graph,
    m: usize,
    stack: &mut Vec<usize>,
    sets: Vec<Vec<u64>>,
) -> Option<EaCounterexample> {
    if let Some(p) = sets.iter().position(|s| s.iter().all(|&w| w == 0)) {
        let (mut x, mut y) = (Vec::new(), Vec::new());
        for (i, &v) in stack.iter().enumerate() {
            if p >> i & 1 == 1 {
                x.push(v);
            } else {
                y.push(v);
            }
        }
        return Some(EaCounterexample { x, y });
    }
    if stack.len() == m {
        return None;
    }
    let last = *stack.last().unwrap();
    for s in last + 1..g.n() {
        let row = g.row(s);
        let (word, bit) = (s / 64, 1u64 << (s % 64));
        let mut next = vec![Vec::new(); 2 * sets.len()];
        for (p, set) in sets.iter().enumerate() {
            let mut non: Vec<u64> = set.iter().zip(row).map(|(a, r)| a & !r).collect();
            non[word] &= !bit;
            next[p] = non;
            next[p | sets.len()] = set.iter().zip(row).map(|(a, r)| a & r).collect();
        }
        stack.push(s);
        let found = search_from(g, m, stack, next);
        stack.pop();
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Checks `ea_k`, returning the first violating `(X, Y)` in lexicographic
/// order of `X ∪ Y` when it fails.
///
/// With at least `k` vertices only sets of size exactly `k - 1` need to be
/// examined: an extender of a superset extends the subset too.
pub fn check_ea(g: &Graph, k: usize) -> Result<EaReport, ExtensionError> {
    if k == 0 {
        return Err(ExtensionError::BadK { k, min: 1 });
    }
    let n = g.n();
    let work = binom(n, k - 1).saturating_mul(1 << (k - 1).min(100));
    if work > ea_work_limit() {
        return Err(ExtensionError::Guard {
            n,
            k,
            work,
            limit: ea_work_limit(),
        });
    }
    let fail = |c: EaCounterexample| EaReport {
        k,
        holds: false,
        counterexample: Some(c),
    };
    if n < k {
        return Ok(fail(EaCounterexample {
            x: (0..n).collect(),
            y: Vec::new(),
        }));
    }
    let m = k - 1;
    let counterexample = if m == 0 {
        None
    } else {
        let w = g.words();
        let mut full = vec![!0u64; w];
        if n % 64 != 0 {
            full[w - 1] = (1u64 << (n % 64)) - 1;
        }
        (0..n).into_par_iter().find_map_first(|s| {
            let row = g.row(s);
            let mut non: Vec<u64> = full.iter().zip(row).map(|(a, r)| a & !r).collect();
            non[s / 64] &= !(1u64 << (s % 64));
            let adj = row.to_vec();
            search_from(g, m, &mut vec![s], vec![non, adj])
        })
    };
    Ok(match counterexample {
        Some(c) => fail(c),
        None => EaReport {
            k,
            holds: true,
            counterexample: None,
        },
    })
}

/// Whether a proposed `(X, Y)` really violates `ea_k` in `g`; used to audit
/// counterexamples.
pub fn violates(g: &Graph, k: usize, c: &EaCounterexample) -> bool {
    let both: Vec<usize> = c.x.iter().chain(&c.y).copied().collect();
    let mut sorted = both.clone();
    sorted.sort_unstable();
    sorted.dedup();
    sorted.len() == both.len()
        && both.len() < k
        && both.iter().all(|&v| v < g.n())
        && !(0..g.n()).any(|z| {
            !both.contains(&z)
                && c.x.iter().all(|&x| g.adjacent(z, x))
                && c.y.iter().all(|&y| !g.adjacent(z, y))
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCertificate {
    pub pattern: Graph,
    /// The claimed lower bound on the extension index of `pattern`.
    pub k: usize,
    pub witness: Graph,
    /// Result of checking `ea_{k-1}` on the witness.
    pub extension: EaReport,
    /// An induced copy of the pattern in the witness, if there is one.
    pub induced_copy: Option<Vec<usize>>,
    pub valid: bool,
}

/// Checks that `h` satisfies `ea_{k-1}` and has no induced `f`.
pub fn certify_extension_lower(f: &Graph, k: usize, h: &Graph) -> Result<WitnessCertificate, ExtensionError> {
    if k < 2 {
        return Err(ExtensionError::BadK { k, min: 2 });
    }
    let extension = check_ea(h, k - 1)?;
    let induced_copy = if extension.holds {
        contains_induced(h, f)
    } else {
        None
    };
    let valid = extension.holds && induced_copy.is_none();
    Ok(WitnessCertificate {
        pattern: f.clone(),
        k,
        witness: h.clone(),
        extension,
        induced_copy,
        valid,
    })
}

/// `χ(F)`, a lower bound on the extension index (and so on the infinitary width).
pub fn chi_lower(f: &Graph) -> Result<usize, ExtensionError> {
    Ok(f.chromatic_number()?)
}

/// Fraction of `G(n, 1/2)` samples satisfying `ea_k`; sample `i` uses RNG
/// stream `i`.
pub fn empirical_ea_rate(n: usize, k: usize, samples: usize, seed: u64) -> Result<f64, ExtensionError> {
    if samples == 0 {
        return Ok(0.0);
    }
    let passed = (0..samples as u64)
        .into_par_iter()
        .map(|i| {
            let g = Graph::gnp_stream(n, 0.5, seed, i)?;
            Ok(check_ea(&g, k)?.holds as usize)
        })
        .collect::<Result<Vec<usize>, ExtensionError>>()?
        .into_iter()
        .sum::<usize>();
    Ok(passed as f64 / samples as f64)
}

/// Vertices adjacent to all of `x` and none of `y`, outside both.
pub fn extenders(g: &Graph, x: &[usize], y: &[usize]) -> Vec<usize> {
    let w = g.words();
    let n = g.n();
    let mut set = vec![!0u64; w];
    if n % 64 != 0 && w > 0 {
        set[w - 1] = (1u64 << (n % 64)) - 1;
    }
    for &v in x {
        set.iter_mut().zip(g.row(v)).for_each(|(a, r)| *a &= r);
    }
    for &v in y {
        set.iter_mut().zip(g.row(v)).for_each(|(a, r)| *a &= !r);
        set[v / 64] &= !(1u64 << (v % 64));
    }
    Ones::new(&set).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// `ea_k` straight from the definition: every disjoint `(X, Y)` with
    /// `|X ∪ Y| < k` has an extender.
    pub(crate) fn brute_ea(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if k == 1 {
            return n > 0;
        }
        // Assign each vertex to X, Y or neither.
        let mut assign = vec![0u8; n];
        loop {
            let x: Vec<usize> = (0..n).filter(|&v| assign[v] == 1).collect();
            let y: Vec<usize> = (0..n).filter(|&v| assign[v] == 2).collect();
            if x.len() + y.len() < k
                && !(0..n).any(|z| {
                    assign[z] == 0
                        && x.iter().all(|&a| g.adjacent(z, a))
                        && y.iter().all(|&b| !g.adjacent(z, b))
                })
            {
                return false;
            }
            let mut i = 0;
            while i < n && assign[i] == 2 {
                assign[i] = 0;
                i += 1;
            }
            if i == n {
                return true;
            }
            assign[i] += 1;
        }
    }

    #[test]
    fn small_examples() {
        let two_k2 = Graph::complete(2).copies(2);
        assert!(check_ea(&two_k2, 2).unwrap().holds);
        assert!(check_ea(&Graph::cycle(4), 2).unwrap().holds);
        assert!(check_ea(&Graph::rook(3), 3).unwrap().holds);
        assert!(!check_ea(&Graph::complete(5), 2).unwrap().holds);
        assert!(check_ea(&Graph::empty(1), 1).unwrap().holds);
        assert!(!check_ea(&Graph::empty(0), 1).unwrap().holds);
        let r = check_ea(&Graph::path(3), 2).unwrap();
        let c = r.counterexample.unwrap();
        assert!(violates(&Graph::path(3), 2, &c));
    }

    #[test]
    fn agrees_with_definition() {
        for n in 0..=5usize {
            for mask in 0..1u64 << (n * n.saturating_sub(1) / 2) {
                let g = Graph::from_mask(n, mask);
                for k in 1..=4 {
                    let r = check_ea(&g, k).unwrap();
                    assert_eq!(r.holds, brute_ea(&g, k), "{g:?} k={k}");
                    if let Some(c) = &r.counterexample {
                        assert!(violates(&g, k, c), "{g:?} k={k} {c:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn random_agreement_up_to_seven() {
        for seed in 0..200 {
            let g = Graph::gnp(7, 0.5, seed).unwrap();
            for k in 1..=4 {
                assert_eq!(check_ea(&g, k).unwrap().holds, brute_ea(&g, k));
            }
        }
    }

    #[test]
    fn guard() {
        let g = Graph::empty(201);
        assert!(matches!(check_ea(&g, 5), Err(ExtensionError::Guard { .. })));
        assert!(check_ea(&Graph::empty(200), 5).is_ok());
        assert_eq!(check_ea(&g, 0), Err(ExtensionError::BadK { k: 0, min: 1 }));
    }

    #[test]
    fn known_certificates() {
        let two_k2 = Graph::complete(2).copies(2);
        let c4 = Graph::cycle(4);
        let rook = Graph::rook(3);
        for (f, k, h) in [
            (Graph::path(3), 3, &two_k2),
            (Graph::complete(3), 3, &two_k2),
            (Graph::complete(3), 3, &c4),
            (Graph::paw(), 3, &c4),
            (Graph::claw(), 4, &rook),
            (Graph::diamond(), 4, &rook),
        ] {
            assert!(certify_extension_lower(&f, k, h).unwrap().valid, "{f:?}");
        }
        let bad = certify_extension_lower(&Graph::path(3), 3, &c4).unwrap();
        assert!(!bad.valid && bad.induced_copy.is_some());
        let bad = certify_extension_lower(&Graph::complete(3), 3, &Graph::path(3)).unwrap();
        assert!(!bad.valid && !bad.extension.holds);
    }

    #[test]
    fn chromatic_bounds() {
        for l in 1..=6 {
            assert_eq!(chi_lower(&Graph::complete(l)).unwrap(), l);
        }
        assert_eq!(chi_lower(&Graph::paw()).unwrap(), 3);
        assert_eq!(chi_lower(&Graph::cycle(4)).unwrap(), 2);
    }

    #[test]
    fn empirical_rates() {
        assert_eq!(empirical_ea_rate(4, 3, 50, 1).unwrap(), 0.0);
        assert_eq!(empirical_ea_rate(5, 1, 20, 1).unwrap(), 1.0);
        let a = empirical_ea_rate(20, 2, 30, 9).unwrap();
        assert_eq!(a, empirical_ea_rate(20, 2, 30, 9).unwrap());
    }

    #[test]
    fn extender_sets() {
        let c4 = Graph::cycle(4);
        assert_eq!(extenders(&c4, &[0], &[1]), vec![3]);
        assert_eq!(extenders(&c4, &[], &[0]), vec![2]);
    }
}
