use std::collections::HashMap;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{certify_extension_lower, ExtensionError, WitnessCertificate};
use crate::graph::Graph;

/// Sizes tried, in order, by the sampling strategies.
pub const SIZE_LADDER: [usize; 13] = [4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128, 160, 200];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Every labeled graph on `1..=max_n` vertices (`max_n ≤ 8`), one per
    /// isomorphism class.
    ExhaustiveSmall { max_n: usize },
    /// `G(n, 1/2)` samples along [`SIZE_LADDER`].
    GnpSampling,
    /// Random subgraphs of the Turán graph with `parts` classes; `None` uses
    /// `χ(F) − 1` classes, which keeps every sample `F`-free.
    TuranRandomSampling { parts: Option<usize> },
}

impl FromStr for Strategy {
    type Err = String;

    /// `exhaustive-small[:max_n]`, `gnp-sampling`, `turan-random-sampling[:parts]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num = |a: Option<&str>| -> Result<Option<usize>, String> {
            a.map(|x| x.parse().map_err(|_| format!("bad strategy parameter '{x}'")))
                .transpose()
        };
        match name {
            "exhaustive-small" => Ok(Strategy::ExhaustiveSmall {
                max_n: num(arg)?.unwrap_or(8),
            }),
            "gnp-sampling" if arg.is_none() => Ok(Strategy::GnpSampling),
            "turan-random-sampling" => Ok(Strategy::TuranRandomSampling { parts: num(arg)? }),
            _ => Err(format!(
                "unknown strategy '{s}' (expected exhaustive-small, gnp-sampling or turan-random-sampling)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub strategy: Strategy,
    pub certificate: Option<WitnessCertificate>,
    /// Candidate graphs generated, duplicates included.
    pub candidates: u64,
    /// Candidates actually certified.
    pub checked: u64,
}

type Key = (usize, Vec<usize>, usize);

fn invariant_key(g: &Graph) -> Key {
    let mut deg = g.degrees();
    deg.sort_unstable();
    let triangles = (0..g.n())
        .flat_map(|u| g.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
        .map(|(u, v)| g.neighbors(u).filter(|&w| w > v && g.adjacent(v, w)).count())
        .sum();
    (g.n(), deg, triangles)
}

/// Searches for `H` with `ea_{k-1}` and no induced `f`, stopping at the first
/// one found or after `budget` candidates.
pub fn search_witness(
    f: &Graph,
    k: usize,
    strategy: Strategy,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome, ExtensionError> {
    if k < 2 {
        return Err(ExtensionError::BadK { k, min: 2 });
    }
    let mut out = SearchOutcome {
        strategy,
        certificate: None,
        candidates: 0,
        checked: 0,
    };
    match strategy {
        Strategy::ExhaustiveSmall { max_n } => {
            let max_n = max_n.min(8);
            let mut seen: HashMap<Key, Vec<Graph>> = HashMap::new();
            for n in 1..=max_n {
                for mask in 0..1u64 << (n * (n - 1) / 2) {
                    if out.candidates >= budget {
                        return Ok(out);
                    }
                    out.candidates += 1;
                    let h = Graph::from_mask(n, mask);
                    let bucket = seen.entry(invariant_key(&h)).or_default();
                    if bucket.iter().any(|r| r.is_isomorphic(&h)) {
                        continue;
                    }
                    bucket.push(h.clone());
                    out.checked += 1;
                    let cert = certify_extension_lower(f, k, &h)?;
                    if cert.valid {
                        out.certificate = Some(cert);
                        return Ok(out);
                    }
                }
            }
        }
        Strategy::GnpSampling | Strategy::TuranRandomSampling { .. } => {
            let parts = match strategy {
                Strategy::TuranRandomSampling { parts: Some(p) } => Some(p.max(1)),
                Strategy::TuranRandomSampling { parts: None } => {
                    Some(f.chromatic_number()?.saturating_sub(1).max(1))
                }
                _ => None,
            };
            let sizes: Vec<usize> = match parts {
                Some(p) => SIZE_LADDER.iter().copied().filter(|&m| p * m <= 200).collect(),
                None => SIZE_LADDER.to_vec(),
            };
            if sizes.is_empty() {
                return Ok(out);
            }
            let per_size = (budget / sizes.len() as u64).max(1);
            for &size in &sizes {
                let take = per_size.min(budget.saturating_sub(out.candidates));
                if take == 0 {
                    break;
                }
                let first = out.candidates;
                let results: Vec<Option<WitnessCertificate>> = (0..take)
                    .into_par_iter()
                    .map(|i| {
                        let stream = first + i;
                        let h = match parts {
                            Some(p) => Graph::turan_random_stream(p, size, seed, stream)?,
                            None => Graph::gnp_stream(size, 0.5, seed, stream)?,
                        };
                        let cert = certify_extension_lower(f, k, &h)?;
                        Ok(cert.valid.then_some(cert))
                    })
                    .collect::<Result<_, ExtensionError>>()?;
                match results.iter().position(Option::is_some) {
                    Some(i) => {
                        out.candidates = first + i as u64 + 1;
                        out.checked = out.candidates;
                        out.certificate = results.into_iter().nth(i).flatten();
                        return Ok(out);
                    }
                    None => {
                        out.candidates = first + take;
                        out.checked = out.candidates;
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_by_exhaustion() {
        let out = search_witness(&Graph::complete(3), 3, Strategy::ExhaustiveSmall { max_n: 8 }, 1 << 20, 0).unwrap();
        let cert = out.certificate.unwrap();
        assert!(cert.valid);
        let h = &cert.witness;
        assert!(h.is_isomorphic(&Graph::cycle(4)) || h.is_isomorphic(&Graph::complete(2).copies(2)));
    }

    #[test]
    fn edge_by_exhaustion() {
        let out = search_witness(&Graph::complete(2), 2, Strategy::ExhaustiveSmall { max_n: 4 }, 100, 0).unwrap();
        let h = out.certificate.unwrap().witness;
        assert!(h.n() >= 1 && h.edge_count() == 0);
    }

    #[test]
    fn budget_stops_search() {
        let out = search_witness(&Graph::complete(3), 3, Strategy::ExhaustiveSmall { max_n: 8 }, 5, 0).unwrap();
        assert!(out.certificate.is_none());
        assert_eq!(out.candidates, 5);
    }

    #[test]
    fn dedup_is_sound() {
        // Every isomorphism class on four vertices is certified exactly once.
        let out = search_witness(&Graph::empty(1), 2, Strategy::ExhaustiveSmall { max_n: 4 }, 1 << 20, 0).unwrap();
        assert!(out.certificate.is_none());
        assert_eq!(out.checked, 1 + 2 + 4 + 11);
    }

    #[test]
    fn strategy_names() {
        assert_eq!("gnp-sampling".parse(), Ok(Strategy::GnpSampling));
        assert_eq!(
            "turan-random-sampling:3".parse(),
            Ok(Strategy::TuranRandomSampling { parts: Some(3) })
        );
        assert_eq!(
            "exhaustive-small".parse(),
            Ok(Strategy::ExhaustiveSmall { max_n: 8 })
        );
        assert!("bogus".parse::<Strategy>().is_err());
    }

    #[test]
    fn gnp_sampling_is_deterministic() {
        let run = || search_witness(&Graph::complete(3), 3, Strategy::GnpSampling, 26, 5).unwrap();
        assert_eq!(run(), run());
    }
}
