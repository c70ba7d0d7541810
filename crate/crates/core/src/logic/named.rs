use super::{parse, Formula, LogicError};

/// A vertex `x1` in a triangle, a vertex `x2` at distance two from it, and a
/// neighbour of `x1` not adjacent to `x2`. Three variables, depth three; true
/// exactly on graphs with an induced paw.
pub const PAW_SENTENCE: &str = "E x1 (E x2 (E x3 (x1 ~ x2 & x1 ~ x3 & x2 ~ x3)) \
     & E x2 (!(x1 ~ x2) & E x3 (x1 ~ x3 & x3 ~ x2) & E x3 (x3 ~ x1 & !(x3 ~ x2))))";

pub fn paw_sentence() -> Formula {
    parse(PAW_SENTENCE).expect("paw sentence parses")
}

pub const EA_FORMULA_MAX_K: usize = 5;

/// The `k`-extension axiom as a sentence of depth `k` and width `k`.
///
/// For `k >= 2` it reads
/// `E z (z = z) & A x1 … A x_{k-1} (⋀_S (consistent_S -> E z (fresh & pattern_S)))`
/// where `S` ranges over the subsets of the variables that `z` must be adjacent
/// to. Variables may coincide, which covers the smaller sets; `consistent_S`
/// rules out a vertex being required on both sides.
pub fn ea_formula(k: usize) -> Result<Formula, LogicError> {
    if k == 0 || k > EA_FORMULA_MAX_K {
        return Err(LogicError::Guard {
            k,
            max: EA_FORMULA_MAX_K,
        });
    }
    let nonempty = Formula::exists("z", Formula::eq("z", "z"));
    if k == 1 {
        return Ok(nonempty);
    }
    let m = k - 1;
    let xs: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let conjuncts = (0u32..1 << m)
        .map(|s| {
            let inside = |i: usize| s >> i & 1 == 1;
            let mut body: Vec<Formula> = xs.iter().map(|x| Formula::eq("z", x).not()).collect();
            body.extend(xs.iter().enumerate().map(|(i, x)| {
                let a = Formula::adj("z", x);
                if inside(i) {
                    a
                } else {
                    a.not()
                }
            }));
            let witness = Formula::exists("z", Formula::and(body));
            let distinct: Vec<Formula> = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .filter(|&(i, j)| inside(i) != inside(j))
                .map(|(i, j)| Formula::eq(&xs[i], &xs[j]).not())
                .collect();
            if distinct.is_empty() {
                witness
            } else {
                Formula::and(distinct).implies(witness)
            }
        })
        .collect();
    let universal = xs
        .iter()
        .rev()
        .fold(Formula::and(conjuncts), |body, x| Formula::forall(x, body));
    Ok(Formula::And(vec![nonempty, universal]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::logic::Sentence;
    use crate::patterns::contains_induced;
    use rayon::prelude::*;

    #[test]
    fn paw_sentence_metrics() {
        let s = Sentence::new(paw_sentence()).unwrap();
        assert_eq!((s.depth(), s.width()), (3, 3));
        assert_eq!(s.to_string(), paw_sentence().to_string());
        assert!(s.eval(&Graph::paw()));
        assert!(s.eval(&Graph::paw().disjoint_union(&Graph::empty(1))));
        assert!(!s.eval(&Graph::cycle(5)));
        assert!(!s.eval(&Graph::complete(4)));
    }

    #[test]
    fn paw_sentence_matches_search_up_to_six() {
        let s = Sentence::new(paw_sentence()).unwrap();
        let paw = Graph::paw();
        for n in 0..=6usize {
            let bits = n * n.saturating_sub(1) / 2;
            let bad = (0..1u64 << bits)
                .into_par_iter()
                .filter(|&m| {
                    let g = Graph::from_mask(n, m);
                    s.eval(&g) != contains_induced(&g, &paw).is_some()
                })
                .count();
            assert_eq!(bad, 0);
        }
    }

    #[test]
    fn ea_formula_shape() {
        assert!(ea_formula(1)
            .unwrap()
            .alpha_equivalent(&parse("E x (x = x)").unwrap()));
        for k in 1..=5 {
            let f = ea_formula(k).unwrap();
            assert_eq!(f.quantifier_depth(), k);
            assert_eq!(f.variable_width(), k);
            assert!(Sentence::new(f.clone()).is_ok());
            assert_eq!(parse(&f.to_string()).unwrap(), f);
        }
        assert_eq!(ea_formula(6), Err(LogicError::Guard { k: 6, max: 5 }));
        assert!(ea_formula(0).is_err());
    }

    #[test]
    fn ea_formula_examples() {
        let ea2 = Sentence::new(ea_formula(2).unwrap()).unwrap();
        assert!(ea2.eval(&Graph::complete(2).copies(2)));
        assert!(!ea2.eval(&Graph::complete(5)));
        assert!(ea2.eval(&Graph::cycle(4)));
        assert!(!ea2.eval(&Graph::empty(0)));
    }
}
