//! Scans over every labeled graph on a given number of vertices.

use fowidth::graph::Graph;
use rayon::prelude::*;
use serde::Serialize;

/// Aggregate of a corpus scan; `first_mismatch` is the graph6 string of the
/// lowest-numbered disagreeing graph, so the summary is schedule independent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub max_n: usize,
    pub graphs: u64,
    pub mismatches: u64,
    pub first_mismatch: Option<String>,
}

impl ScanSummary {
    pub fn clean(&self) -> bool {
        self.mismatches == 0
    }
}

/// Number of labeled graphs on `n` vertices.
pub fn labeled_count(n: usize) -> u64 {
    1u64 << (n * n.saturating_sub(1) / 2)
}

/// Runs `agrees` on every labeled graph with `0..=max_n` vertices.
pub fn scan<F>(max_n: usize, agrees: F) -> ScanSummary
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut summary = ScanSummary {
        max_n,
        graphs: 0,
        mismatches: 0,
        first_mismatch: None,
    };
    for n in 0..=max_n {
        let (count, first) = (0..labeled_count(n))
            .into_par_iter()
            .filter(|&mask| !agrees(&Graph::from_mask(n, mask)))
            .fold(|| (0u64, u64::MAX), |(c, m), mask| (c + 1, m.min(mask)))
            .reduce(|| (0, u64::MAX), |a, b| (a.0 + b.0, a.1.min(b.1)));
        summary.graphs += labeled_count(n);
        summary.mismatches += count;
        if count > 0 && summary.first_mismatch.is_none() {
            summary.first_mismatch = Some(Graph::from_mask(n, first).to_string());
        }
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_and_first_mismatch() {
        let s = scan(4, |g| g.edge_count() < 6);
        assert_eq!(s.graphs, 1 + 1 + 2 + 8 + 64);
        assert_eq!(s.mismatches, 1);
        assert_eq!(s.first_mismatch.as_deref(), Some(Graph::complete(4).to_string().as_str()));
        assert!(scan(3, |_| true).clean());
    }
}
