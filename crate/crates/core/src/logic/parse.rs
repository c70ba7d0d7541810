use super::{Formula, LogicError};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Exists,
    Forall,
    Not,
    And,
    Or,
    Arrow,
    Tilde,
    Equals,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("variable '{s}'"),
            Tok::Exists => "'E'".into(),
            Tok::Forall => "'A'".into(),
            Tok::Not => "'!'".into(),
            Tok::And => "'&'".into(),
            Tok::Or => "'|'".into(),
            Tok::Arrow => "'->'".into(),
            Tok::Tilde => "'~'".into(),
            Tok::Equals => "'='".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, LogicError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'!' => Tok::Not,
            b'&' => Tok::And,
            b'|' => Tok::Or,
            b'~' => Tok::Tilde,
            b'=' => Tok::Equals,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i + 1 < bytes.len() && (bytes[i + 1].is_ascii_alphanumeric() || bytes[i + 1] == b'_') {
                    i += 1;
                }
                match &text[start..=i] {
                    "E" => Tok::Exists,
                    "A" => Tok::Forall,
                    name => Tok::Ident(name.to_string()),
                }
            }
            _ => {
                let ch = text[start..].chars().next().unwrap();
                return Err(LogicError::Syntax {
                    position: start,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        };
        out.push((start, tok));
        i += 1;
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if t != Tok::End {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> Result<T, LogicError> {
        Err(LogicError::Syntax {
            position: self.pos(),
            message: format!("expected {expected}, found {}", self.peek().describe()),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), LogicError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(&tok.describe())
        }
    }

    fn var(&mut self) -> Result<String, LogicError> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name)
            }
            _ => self.error("a variable"),
        }
    }

    fn implication(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.disjunction()?;
        if *self.peek() == Tok::Arrow {
            self.bump();
            let rhs = self.implication()?;
            return Ok(lhs.implies(rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, LogicError> {
        let mut parts = vec![self.conjunction()?];
        while *self.peek() == Tok::Or {
            self.bump();
            parts.push(self.conjunction()?);
        }
        Ok(Formula::or(parts))
    }

    fn conjunction(&mut self) -> Result<Formula, LogicError> {
        let mut parts = vec![self.unary()?];
        while *self.peek() == Tok::And {
            self.bump();
            parts.push(self.unary()?);
        }
        Ok(Formula::and(parts))
    }

    fn unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Tok::Not => {
                self.bump();
                Ok(self.unary()?.not())
            }
            Tok::Exists | Tok::Forall => {
                let q = self.bump();
                let x = self.var()?;
                let body = self.unary()?;
                Ok(if q == Tok::Exists {
                    Formula::exists(&x, body)
                } else {
                    Formula::forall(&x, body)
                })
            }
            Tok::LParen => {
                self.bump();
                let f = self.implication()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(_) => {
                let x = self.var()?;
                let rel = self.bump();
                let y = match rel {
                    Tok::Tilde | Tok::Equals => self.var()?,
                    _ => {
                        self.at -= 1;
                        return self.error("'~' or '='");
                    }
                };
                Ok(if rel == Tok::Tilde {
                    Formula::Adj(x, y)
                } else {
                    Formula::Eq(x, y)
                })
            }
            _ => self.error("a formula"),
        }
    }
}

/// Parses a formula that may have free variables.
pub fn parse_open(text: &str) -> Result<Formula, LogicError> {
    let mut p = Parser {
        toks: lex(text)?,
        at: 0,
    };
    let f = p.implication()?;
    if *p.peek() != Tok::End {
        return p.error("end of input");
    }
    Ok(f)
}

/// Parses a sentence; free variables are an error naming the first one.
pub fn parse(text: &str) -> Result<Formula, LogicError> {
    let f = parse_open(text)?;
    match f.free_variables().into_iter().next() {
        Some(name) => Err(LogicError::Unbound { name }),
        None => Ok(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ea_one() {
        assert_eq!(
            parse("E x (x = x)").unwrap(),
            Formula::exists("x", Formula::eq("x", "x"))
        );
    }

    #[test]
    fn unbound_variable() {
        assert_eq!(
            parse("E x (x ~ y)"),
            Err(LogicError::Unbound { name: "y".into() })
        );
        assert!(parse_open("E x (x ~ y)").is_ok());
    }

    #[test]
    fn precedence() {
        let f = parse_open("!a ~ b & c = d | a ~ c -> b = b -> c ~ c").unwrap();
        let want = Formula::or(vec![
            Formula::and(vec![Formula::adj("a", "b").not(), Formula::eq("c", "d")]),
            Formula::adj("a", "c"),
        ])
        .implies(Formula::eq("b", "b").implies(Formula::adj("c", "c")));
        assert_eq!(f, want);
        // A quantifier body is a single unary formula.
        let g = parse_open("E x (x ~ y) & y = y").unwrap();
        assert!(matches!(g, Formula::And(_)));
    }

    #[test]
    fn syntax_errors_have_positions() {
        let err = |s: &str| match parse(s) {
            Err(LogicError::Syntax { position, .. }) => position,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("E x (x ~ )"), 9);
        assert_eq!(err("E x (x # x)"), 7);
        assert_eq!(err("E x (x = x"), 10);
        assert_eq!(err("E (x = x)"), 2);
        assert_eq!(err("E x (x x)"), 7);
        assert_eq!(err("E x (x = x))"), 11);
        assert_eq!(err(""), 0);
    }

    #[test]
    fn identifiers_may_extend_keywords() {
        let f = parse("E Ex (A Ax (Ex ~ Ax))").unwrap();
        assert_eq!(f.variable_width(), 2);
    }
}
