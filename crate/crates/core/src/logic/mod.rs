//! First-order sentences over the vocabulary of graphs: adjacency `~` and
//! equality `=`.
//!
//! Formulas are written in a small ASCII syntax:
//!
//! ```text
//! E x (E y (x ~ y & !(x = y)))      there is an edge
//! A x (E y (x ~ y))                 no isolated vertex
//! ```
//!
//! `E` and `A` are the quantifiers, `!`, `&`, `|`, `->` the connectives in
//! decreasing order of binding strength (`->` associates to the right). A
//! quantifier takes the next unary formula as its body, so `E x (φ) & ψ` is a
//! conjunction.
//!
//! ```
//! use fowidth::graph::Graph;
//! use fowidth::logic::Sentence;
//!
//! let edge = Sentence::parse("E x (E y (x ~ y))").unwrap();
//! assert!(edge.eval(&Graph::path(2)));
//! assert!(!edge.eval(&Graph::empty(3)));
//! assert_eq!((edge.depth(), edge.width()), (2, 2));
//! ```

mod eval;
mod named;
mod parse;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use eval::{eval_formula, Sentence};
pub use named::{ea_formula, paw_sentence, EA_FORMULA_MAX_K, PAW_SENTENCE};
pub use parse::{parse, parse_open};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("syntax error at offset {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable '{name}' is not bound by any quantifier")]
    Unbound { name: String },
    #[error("conjunctions and disjunctions need at least two operands")]
    EmptyConnective,
    #[error("ea_formula is limited to k <= {max}, requested k = {k}")]
    Guard { k: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Adj(String, String),
    Eq(String, String),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn adj(x: &str, y: &str) -> Self {
        Formula::Adj(x.into(), y.into())
    }

    pub fn eq(x: &str, y: &str) -> Self {
        Formula::Eq(x.into(), y.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        Formula::Not(Box::new(self))
    }

    /// Conjunction; a single operand is returned unchanged.
    ///
    /// # Panics
    /// On an empty list.
    pub fn and(mut parts: Vec<Formula>) -> Self {
        assert!(!parts.is_empty(), "empty conjunction");
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Formula::And(parts)
        }
    }

    /// Disjunction; a single operand is returned unchanged.
    ///
    /// # Panics
    /// On an empty list.
    pub fn or(mut parts: Vec<Formula>) -> Self {
        assert!(!parts.is_empty(), "empty disjunction");
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Formula::Or(parts)
        }
    }

    pub fn implies(self, then: Formula) -> Self {
        Formula::Implies(Box::new(self), Box::new(then))
    }

    pub fn exists(x: &str, body: Formula) -> Self {
        Formula::Exists(x.into(), Box::new(body))
    }

    pub fn forall(x: &str, body: Formula) -> Self {
        Formula::Forall(x.into(), Box::new(body))
    }

    /// Maximum nesting of quantifiers.
    pub fn quantifier_depth(&self) -> usize {
        match self {
            Formula::Adj(..) | Formula::Eq(..) => 0,
            Formula::Not(f) => f.quantifier_depth(),
            Formula::And(fs) | Formula::Or(fs) => {
                fs.iter().map(Formula::quantifier_depth).max().unwrap_or(0)
            }
            Formula::Implies(a, b) => a.quantifier_depth().max(b.quantifier_depth()),
            Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.quantifier_depth(),
        }
    }

    /// Number of distinct variable names, bound or free.
    pub fn variable_width(&self) -> usize {
        let mut names = BTreeSet::new();
        self.collect_variables(&mut names);
        names.len()
    }

    fn collect_variables<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::Adj(x, y) | Formula::Eq(x, y) => {
                out.insert(x);
                out.insert(y);
            }
            Formula::Not(f) => f.collect_variables(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_variables(out)),
            Formula::Implies(a, b) => {
                a.collect_variables(out);
                b.collect_variables(out);
            }
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                out.insert(x);
                f.collect_variables(out);
            }
        }
    }

    /// Free variables, sorted.
    pub fn free_variables(&self) -> Vec<String> {
        fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                Formula::Adj(x, y) | Formula::Eq(x, y) => {
                    for v in [x, y] {
                        if !bound.contains(v) {
                            out.insert(v.clone());
                        }
                    }
                }
                Formula::Not(g) => go(g, bound, out),
                Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| go(g, bound, out)),
                Formula::Implies(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Formula::Exists(x, g) | Formula::Forall(x, g) => {
                    bound.push(x.clone());
                    go(g, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out.into_iter().collect()
    }

    pub fn is_closed(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// A formula that holds in the complement of a graph exactly when `self`
    /// holds in the graph: every `x ~ y` becomes `!(x = y) & !(x ~ y)`.
    pub fn dual(&self) -> Formula {
        match self {
            Formula::Adj(x, y) => Formula::And(vec![
                Formula::eq(x, y).not(),
                Formula::adj(x, y).not(),
            ]),
            Formula::Eq(..) => self.clone(),
            Formula::Not(f) => f.dual().not(),
            Formula::And(fs) => Formula::And(fs.iter().map(Formula::dual).collect()),
            Formula::Or(fs) => Formula::Or(fs.iter().map(Formula::dual).collect()),
            Formula::Implies(a, b) => a.dual().implies(b.dual()),
            Formula::Exists(x, f) => Formula::exists(x, f.dual()),
            Formula::Forall(x, f) => Formula::forall(x, f.dual()),
        }
    }

    /// Equality up to renaming of bound variables.
    pub fn alpha_equivalent(&self, other: &Formula) -> bool {
        fn var_eq(x: &str, y: &str, env: &[(&str, &str)]) -> bool {
            match (
                env.iter().rposition(|p| p.0 == x),
                env.iter().rposition(|p| p.1 == y),
            ) {
                (Some(i), Some(j)) => i == j,
                (None, None) => x == y,
                _ => false,
            }
        }
        fn go<'a>(a: &'a Formula, b: &'a Formula, env: &mut Vec<(&'a str, &'a str)>) -> bool {
            match (a, b) {
                (Formula::Adj(x1, y1), Formula::Adj(x2, y2))
                | (Formula::Eq(x1, y1), Formula::Eq(x2, y2)) => {
                    var_eq(x1, x2, env) && var_eq(y1, y2, env)
                }
                (Formula::Not(f), Formula::Not(g)) => go(f, g, env),
                (Formula::And(fs), Formula::And(gs)) | (Formula::Or(fs), Formula::Or(gs)) => {
                    fs.len() == gs.len() && fs.iter().zip(gs).all(|(f, g)| go(f, g, env))
                }
                (Formula::Implies(f1, f2), Formula::Implies(g1, g2)) => {
                    go(f1, g1, env) && go(f2, g2, env)
                }
                (Formula::Exists(x, f), Formula::Exists(y, g))
                | (Formula::Forall(x, f), Formula::Forall(y, g)) => {
                    env.push((x, y));
                    let r = go(f, g, env);
                    env.pop();
                    r
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new())
    }

    fn is_binary(&self) -> bool {
        matches!(self, Formula::And(_) | Formula::Or(_) | Formula::Implies(..))
    }

    fn check_connectives(&self) -> Result<(), LogicError> {
        match self {
            Formula::Adj(..) | Formula::Eq(..) => Ok(()),
            Formula::Not(f) | Formula::Exists(_, f) | Formula::Forall(_, f) => f.check_connectives(),
            Formula::And(fs) | Formula::Or(fs) => {
                if fs.len() < 2 {
                    return Err(LogicError::EmptyConnective);
                }
                fs.iter().try_for_each(Formula::check_connectives)
            }
            Formula::Implies(a, b) => {
                a.check_connectives()?;
                b.check_connectives()
            }
        }
    }
}

/// Prints in the input syntax; binary operands and quantifier bodies are
/// always parenthesized, so the output parses back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let operand = |f: &mut fmt::Formatter<'_>, g: &Formula| {
            if g.is_binary() {
                write!(f, "({g})")
            } else {
                write!(f, "{g}")
            }
        };
        match self {
            Formula::Adj(x, y) => write!(f, "{x} ~ {y}"),
            Formula::Eq(x, y) => write!(f, "{x} = {y}"),
            Formula::Not(g) => match **g {
                Formula::Not(_) | Formula::Exists(..) | Formula::Forall(..) => write!(f, "!{g}"),
                _ => write!(f, "!({g})"),
            },
            Formula::And(gs) | Formula::Or(gs) => {
                let sep = if matches!(self, Formula::And(_)) { " & " } else { " | " };
                for (i, g) in gs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(sep)?;
                    }
                    operand(f, g)?;
                }
                Ok(())
            }
            Formula::Implies(a, b) => {
                operand(f, a)?;
                f.write_str(" -> ")?;
                operand(f, b)
            }
            Formula::Exists(x, g) => write!(f, "E {x} ({g})"),
            Formula::Forall(x, g) => write!(f, "A {x} ({g})"),
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::graph::Graph;
    use proptest::prelude::*;

    const VARS: [&str; 4] = ["x", "y", "z", "w"];

    pub(crate) fn arb_formula() -> impl Strategy<Value = Formula> {
        let var = prop::sample::select(&VARS[..]);
        let atom = (var.clone(), var.clone(), any::<bool>()).prop_map(|(x, y, adj)| {
            if adj {
                Formula::adj(x, y)
            } else {
                Formula::eq(x, y)
            }
        });
        let body = atom.prop_recursive(5, 40, 3, move |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                prop::collection::vec(inner.clone(), 2..4).prop_map(Formula::And),
                prop::collection::vec(inner.clone(), 2..4).prop_map(Formula::Or),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| a.implies(b)),
                (var.clone(), inner.clone()).prop_map(|(x, f)| Formula::exists(x, f)),
                (var.clone(), inner).prop_map(|(x, f)| Formula::forall(x, f)),
            ]
        });
        (body, prop::collection::vec(any::<bool>(), 4)).prop_map(|(f, ex)| {
            let free = f.free_variables();
            free.iter().zip(ex).fold(f, |acc, (x, e)| {
                if e {
                    Formula::exists(x, acc)
                } else {
                    Formula::forall(x, acc)
                }
            })
        })
    }

    #[test]
    fn depth_and_width() {
        let atom = Formula::adj("x", "y");
        assert_eq!(atom.variable_width(), 2);
        assert_eq!(atom.quantifier_depth(), 0);
        let f = parse("E x (A y (x ~ y | x = y) & E y (x ~ y))").unwrap();
        assert_eq!(f.quantifier_depth(), 2);
        assert_eq!(f.variable_width(), 2);
    }

    #[test]
    fn alpha_equivalence() {
        let a = parse("E x (E y (x ~ y))").unwrap();
        let b = parse("E u (E v (u ~ v))").unwrap();
        let c = parse("E u (E v (v ~ u))").unwrap();
        assert!(a.alpha_equivalent(&b));
        assert!(!a.alpha_equivalent(&c));
    }

    #[test]
    fn dual_on_fixed_examples() {
        let edge = Sentence::parse("E x (E y (x ~ y))").unwrap();
        let dual = Sentence::new(edge.formula().dual()).unwrap();
        // K_3 has an edge; its complement does not, and the dual sees that.
        assert!(edge.eval(&Graph::complete(3)));
        assert!(!dual.eval(&Graph::complete(3)));
        assert!(dual.eval(&Graph::empty(3)));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn print_parse_round_trip(f in arb_formula()) {
            let text = f.to_string();
            prop_assert_eq!(parse(&text).unwrap(), f);
        }

        #[test]
        fn dual_evaluates_on_complement(f in arb_formula(), n in 0usize..6, seed in any::<u64>()) {
            let g = Graph::gnp(n, 0.5, seed).unwrap();
            let s = Sentence::new(f.clone()).unwrap();
            let d = Sentence::new(f.dual()).unwrap();
            prop_assert_eq!(s.eval(&g), d.eval(&g.complement()));
        }

        #[test]
        fn cached_metrics_match_tree(f in arb_formula()) {
            let s = Sentence::new(f.clone()).unwrap();
            prop_assert_eq!(s.depth(), f.quantifier_depth());
            prop_assert_eq!(s.width(), f.variable_width());
        }
    }
}
