//! The graph6 text format.
//!
//! A graph6 string is `N(n)` followed by the upper triangle of the adjacency
//! matrix read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed six bits per byte, each byte offset by 63. `N(n)` is one byte for
//! `n <= 62`, `~` plus three bytes for `n <= 258047`, and `~~` plus six bytes
//! above that. An optional `>>graph6<<` header is accepted on input.

use thiserror::Error;

use super::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6: empty input")]
    Empty,
    #[error("graph6: byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6: input ends at offset {offset} inside the vertex count")]
    TruncatedHeader { offset: usize },
    #[error("graph6: expected {expected} adjacency bytes after offset {offset}, found {found}")]
    WrongLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6: nonzero padding bits in the final byte at offset {offset}")]
    Padding { offset: usize },
}

fn encode_size(n: usize, out: &mut String) {
    let push = |out: &mut String, v: usize| out.push((v as u8 + BIAS) as char);
    if n <= 62 {
        push(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push(out, (n >> shift) & 63);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push(out, (n >> shift) & 63);
        }
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.adjacent(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + BIAS) as char);
    }
    out
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(Graph6Error::BadByte {
                offset: base + i,
                byte: b,
            });
        }
    }
    let six = |i: usize| -> Result<usize, Graph6Error> {
        body.get(i)
            .map(|&b| (b - BIAS) as usize)
            .ok_or(Graph6Error::TruncatedHeader { offset: base + i })
    };
    let (n, header_len) = if body[0] != b'~' {
        (six(0)?, 1)
    } else if body.get(1) != Some(&b'~') {
        let n = (1..4).try_fold(0, |acc, i| Ok::<_, Graph6Error>(acc << 6 | six(i)?))?;
        (n, 4)
    } else {
        let n = (2..8).try_fold(0, |acc, i| Ok::<_, Graph6Error>(acc << 6 | six(i)?))?;
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            offset: base + header_len,
            expected,
            found: data.len(),
        });
    }
    if bits % 6 != 0 {
        let last = data[expected - 1] - BIAS;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding {
                offset: base + header_len + expected - 1,
            });
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_vertex() {
        assert_eq!(encode_graph6(&Graph::empty(1)), "@");
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn known_strings() {
        // Reference strings from the format description: C_4 labeled 0-1-2-3-0
        // has bits x01 x02 x12 x03 x13 x23 = 1 0 1 1 0 1 -> 45 + 63 = 'l'.
        assert_eq!(encode_graph6(&Graph::cycle(4)), "Cl");
        assert_eq!(encode_graph6(&Graph::complete(5)), "D~{");
        assert_eq!(decode_graph6("Cl").unwrap(), Graph::cycle(4));
        assert_eq!(decode_graph6(">>graph6<<Cl\n").unwrap(), Graph::cycle(4));
    }

    #[test]
    fn complement_of_two_k2_round_trips_to_c4() {
        let g = Graph::complete(2).copies(2).complement();
        let back = decode_graph6(&encode_graph6(&g)).unwrap();
        assert_eq!(back, g);
        assert!(back.is_isomorphic(&Graph::cycle(4)));
    }

    #[test]
    fn large_size_headers() {
        let g = Graph::path(63);
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(decode_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            decode_graph6("C l"),
            Err(Graph6Error::BadByte { offset: 1, byte: b' ' })
        );
        assert_eq!(
            decode_graph6("C"),
            Err(Graph6Error::WrongLength { offset: 1, expected: 1, found: 0 })
        );
        assert_eq!(decode_graph6("~?"), Err(Graph6Error::TruncatedHeader { offset: 2 }));
        // n = 2 has one adjacency bit; the other five must be zero.
        assert_eq!(decode_graph6("A@"), Err(Graph6Error::Padding { offset: 1 }));
        assert_eq!(decode_graph6("A_").unwrap(), Graph::complete(2));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]
        #[test]
        fn round_trip(n in 0usize..=30, seed in any::<u64>(), p in 0.0f64..=1.0) {
            let g = Graph::gnp(n, p, seed).unwrap();
            prop_assert_eq!(decode_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }
}
