//! Turning command-line graph arguments into graphs.
//!
//! A graph argument is one of
//!
//! * a constructor string `name` or `name:p1,p2,...` (see [`CONSTRUCTORS`]),
//! * a path to a file whose first non-empty line is graph6,
//! * a graph6 literal.
//!
//! Files take precedence over constructor names, which take precedence over
//! graph6 literals (several short names, such as `paw`, are also valid graph6).

use std::io::BufRead;
use std::path::Path;

use fowidth::graph::{decode_graph6, Graph, Graph6Error, GraphError};
use thiserror::Error;

use crate::construct::{build_g, build_h, ConstructError};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("constructor '{name}' expects {expected}, got '{got}'")]
    Arity {
        name: String,
        expected: &'static str,
        got: String,
    },
    #[error("'{0}' is not a number")]
    Number(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error("'{text}' is neither a file, a constructor, nor graph6: {source}")]
    Graph6 { text: String, source: Graph6Error },
    #[error("line {line}: {source}")]
    Line { line: usize, source: Graph6Error },
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{0} contains no graph")]
    EmptyFile(String),
}

/// `(name, parameters)` for every constructor accepted by [`parse_graph`].
pub const CONSTRUCTORS: &[(&str, &str)] = &[
    ("complete", "n"),
    ("empty", "n"),
    ("path", "n"),
    ("cycle", "n"),
    ("claw", ""),
    ("paw", ""),
    ("diamond", ""),
    ("2k2", ""),
    ("bipartite", "a,b"),
    ("rook", "m"),
    ("turan", "k,n"),
    ("hypercube", "d"),
    ("paley", "q"),
    ("gnp", "n,p,seed"),
    ("turan-random", "k,n,seed"),
    ("power", "i  (powers of K1)"),
    ("H", "i"),
    ("G", "i[,q]  (H_i·(paley(q)·H_i), q defaults to 13)"),
];

fn num<T: std::str::FromStr>(s: &str) -> Result<T, InputError> {
    s.trim().parse().map_err(|_| InputError::Number(s.to_string()))
}

fn constructor(name: &str, args: &[&str]) -> Option<Result<Graph, InputError>> {
    let expected = CONSTRUCTORS.iter().find(|(n, _)| *n == name)?.1;
    let arity = |want: usize| -> Result<(), InputError> {
        if args.len() == want {
            Ok(())
        } else {
            Err(InputError::Arity {
                name: name.to_string(),
                expected: if expected.is_empty() { "no parameters" } else { expected },
                got: args.join(","),
            })
        }
    };
    let build = || -> Result<Graph, InputError> {
        Ok(match name {
            "complete" | "empty" | "path" | "cycle" | "rook" | "hypercube" | "paley" | "power" | "H" => {
                arity(1)?;
                let n: usize = num(args[0])?;
                match name {
                    "complete" => Graph::complete(n),
                    "empty" => Graph::empty(n),
                    "path" => Graph::path(n),
                    "cycle" => Graph::try_cycle(n)?,
                    "rook" => Graph::rook(n),
                    "hypercube" => Graph::hypercube(n),
                    "paley" => Graph::paley(n)?,
                    "power" => Graph::empty(1).power(n)?,
                    _ => build_h(n)?,
                }
            }
            "claw" | "paw" | "diamond" | "2k2" => {
                arity(0)?;
                match name {
                    "claw" => Graph::claw(),
                    "paw" => Graph::paw(),
                    "diamond" => Graph::diamond(),
                    _ => Graph::complete(2).copies(2),
                }
            }
            "bipartite" | "turan" => {
                arity(2)?;
                let (a, b) = (num(args[0])?, num(args[1])?);
                if name == "turan" {
                    Graph::turan(a, b)
                } else {
                    Graph::complete_bipartite(a, b)
                }
            }
            "gnp" => {
                arity(3)?;
                Graph::gnp(num(args[0])?, num(args[1])?, num(args[2])?)?
            }
            "turan-random" => {
                arity(3)?;
                Graph::turan_random(num(args[0])?, num(args[1])?, num(args[2])?)?
            }
            "G" => {
                let q = match args.len() {
                    1 => 13,
                    2 => num(args[1])?,
                    _ => {
                        arity(1)?;
                        unreachable!()
                    }
                };
                build_g(num(args[0])?, &Graph::paley(q)?)?
            }
            _ => unreachable!("every listed constructor is handled"),
        })
    };
    Some(build())
}

/// Parses a single graph argument.
pub fn parse_graph(text: &str) -> Result<Graph, InputError> {
    let text = text.trim();
    if text != "-" && Path::new(text).is_file() {
        return read_graphs(text)?
            .into_iter()
            .next()
            .ok_or_else(|| InputError::EmptyFile(text.to_string()));
    }
    let (name, args) = match text.split_once(':') {
        Some((name, rest)) => (name, rest.split(',').collect::<Vec<_>>()),
        None => (text, Vec::new()),
    };
    if let Some(result) = constructor(name, &args) {
        return result;
    }
    decode_graph6(text).map_err(|source| InputError::Graph6 {
        text: text.to_string(),
        source,
    })
}

/// Reads one graph6 string per non-empty line from a file, or from stdin for `-`.
pub fn read_graphs(path: &str) -> Result<Vec<Graph>, InputError> {
    let io = |source| InputError::Io {
        path: path.to_string(),
        source,
    };
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(std::io::stdin().lock())
    } else {
        Box::new(std::io::BufReader::new(std::fs::File::open(path).map_err(io)?))
    };
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io)?;
        let line = line.trim();
        if line.is_empty() || line.starts_with(">>graph6<<") && line.len() == 10 {
            continue;
        }
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        out.push(decode_graph6(line).map_err(|source| InputError::Line { line: i + 1, source })?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fowidth::graph::encode_graph6;

    #[test]
    fn constructors() {
        assert_eq!(parse_graph("rook:3").unwrap(), Graph::rook(3));
        assert_eq!(parse_graph("gnp:20,0.5,12345").unwrap(), Graph::gnp(20, 0.5, 12345).unwrap());
        assert_eq!(parse_graph("paw").unwrap(), Graph::paw());
        assert_eq!(parse_graph("H:3").unwrap().n(), 4);
        assert_eq!(parse_graph("G:3").unwrap().n(), 208);
        assert!(matches!(parse_graph("rook"), Err(InputError::Arity { .. })));
        assert!(matches!(parse_graph("paley:7"), Err(InputError::Graph(_))));
        assert!(matches!(parse_graph("cycle:x"), Err(InputError::Number(_))));
    }

    #[test]
    fn graph6_literals_and_files() {
        let g = Graph::cycle(5);
        let code = encode_graph6(&g);
        assert_eq!(parse_graph(&code).unwrap(), g);
        let dir = std::env::temp_dir().join(format!("fowidth-input-{}", std::process::id()));
        std::fs::write(&dir, format!(">>graph6<<{code}\n\n{}\n", encode_graph6(&Graph::paw()))).unwrap();
        let path = dir.to_str().unwrap();
        assert_eq!(read_graphs(path).unwrap(), vec![g.clone(), Graph::paw()]);
        assert_eq!(parse_graph(path).unwrap(), g);
        std::fs::remove_file(&dir).unwrap();
        assert!(matches!(parse_graph("~~~~"), Err(InputError::Graph6 { .. })));
    }
}
