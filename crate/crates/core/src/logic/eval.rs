use std::collections::HashMap;
use std::fmt;

use super::{parse, Formula, LogicError};
use crate::graph::Graph;

#[derive(Debug, Clone)]
enum Node {
    Adj(usize, usize),
    Eq(usize, usize),
    Not(Box<Node>),
    And(Vec<Node>),
    Or(Vec<Node>),
    Implies(Box<Node>, Box<Node>),
    Exists(usize, Box<Node>),
    Forall(usize, Box<Node>),
}

fn compile(f: &Formula, slots: &mut HashMap<String, usize>) -> Node {
    let mut slot = |x: &String| {
        let next = slots.len();
        *slots.entry(x.clone()).or_insert(next)
    };
    match f {
        Formula::Adj(x, y) => Node::Adj(slot(x), slot(y)),
        Formula::Eq(x, y) => Node::Eq(slot(x), slot(y)),
        Formula::Exists(x, g) => {
            let s = slot(x);
            Node::Exists(s, Box::new(compile(g, slots)))
        }
        Formula::Forall(x, g) => {
            let s = slot(x);
            Node::Forall(s, Box::new(compile(g, slots)))
        }
        Formula::Not(g) => Node::Not(Box::new(compile(g, slots))),
        Formula::And(gs) => Node::And(gs.iter().map(|g| compile(g, slots)).collect()),
        Formula::Or(gs) => Node::Or(gs.iter().map(|g| compile(g, slots)).collect()),
        Formula::Implies(a, b) => Node::Implies(Box::new(compile(a, slots)), Box::new(compile(b, slots))),
    }
}

fn eval(node: &Node, g: &Graph, asg: &mut [usize]) -> bool {
    match node {
        Node::Adj(a, b) => g.adjacent(asg[*a], asg[*b]),
        Node::Eq(a, b) => asg[*a] == asg[*b],
        Node::Not(f) => !eval(f, g, asg),
        Node::And(fs) => fs.iter().all(|f| eval(f, g, asg)),
        Node::Or(fs) => fs.iter().any(|f| eval(f, g, asg)),
        Node::Implies(a, b) => !eval(a, g, asg) || eval(b, g, asg),
        Node::Exists(s, f) | Node::Forall(s, f) => {
            let want = matches!(node, Node::Exists(..));
            let saved = asg[*s];
            let mut result = !want;
            for v in 0..g.n() {
                asg[*s] = v;
                if eval(f, g, asg) == want {
                    result = want;
                    break;
                }
            }
            asg[*s] = saved;
            result
        }
    }
}

/// A closed formula with its depth and width cached and its variables
/// compiled to assignment slots.
#[derive(Debug, Clone)]
pub struct Sentence {
    formula: Formula,
    depth: usize,
    width: usize,
    compiled: Node,
}

impl Sentence {
    pub fn new(formula: Formula) -> Result<Self, LogicError> {
        formula.check_connectives()?;
        if let Some(name) = formula.free_variables().into_iter().next() {
            return Err(LogicError::Unbound { name });
        }
        let mut slots = HashMap::new();
        let compiled = compile(&formula, &mut slots);
        Ok(Sentence {
            depth: formula.quantifier_depth(),
            width: slots.len(),
            formula,
            compiled,
        })
    }

    pub fn parse(text: &str) -> Result<Self, LogicError> {
        Sentence::new(parse(text)?)
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn eval(&self, g: &Graph) -> bool {
        let mut asg = vec![0; self.width];
        eval(&self.compiled, g, &mut asg)
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.formula.fmt(f)
    }
}

/// Evaluates a closed formula.
pub fn eval_formula(g: &Graph, phi: &Formula) -> Result<bool, LogicError> {
    Ok(Sentence::new(phi.clone())?.eval(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ea_one_on_tiny_graphs() {
        let ea1 = Sentence::parse("E x (x = x)").unwrap();
        assert!(ea1.eval(&Graph::empty(1)));
        assert!(!ea1.eval(&Graph::empty(0)));
    }

    #[test]
    fn rejects_open_and_degenerate() {
        assert!(matches!(
            Sentence::new(Formula::adj("x", "y")),
            Err(LogicError::Unbound { .. })
        ));
        assert_eq!(
            Sentence::new(Formula::exists("x", Formula::And(vec![Formula::eq("x", "x")]))).err(),
            Some(LogicError::EmptyConnective)
        );
    }

    #[test]
    fn shadowing_restores_outer_binding() {
        // x is re-bound inside; the outer x must be visible again afterwards.
        let s = Sentence::parse("E x (E y (x ~ y & E x (!(x ~ y) & !(x = y)) & x ~ y))").unwrap();
        assert!(s.eval(&Graph::path(3)));
        assert!(!s.eval(&Graph::complete(3)));
        assert_eq!(s.width(), 2);
    }
}
