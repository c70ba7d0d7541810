//! The `k`-pebble Ehrenfeucht–Fraïssé game on two graphs.
//!
//! A position is a set of at most `k` pairs `(g, h)`; Duplicator loses as soon
//! as the pairs fail to define a partial isomorphism. In each round Spoiler
//! picks a vertex on either side (first lifting one pair if all `k` are on the
//! board) and Duplicator answers on the other side.
//!
//! [`solve`] computes `D^k(G, H)`, the least number of rounds in which Spoiler
//! forces a win, by backward induction over all positions: a position is won
//! in `r + 1` rounds if Spoiler has a placement all of whose legal answers lead
//! to positions won in at most `r`. Iteration stops when the empty position is
//! won or a round adds nothing new (Duplicator survives forever).
//!
//! Only positions with fewer than `k` pairs are stored. A full position is won
//! exactly as fast as the best of its `k` sub-positions, because Spoiler's move
//! from it lifts one pair and then plays as from that sub-position. Spoiler
//! never gains by lifting a pair while capacity remains: an extra pair only
//! constrains Duplicator, and can be lifted later when its pebble is needed.
//!
//! ```
//! use fowidth::graph::Graph;
//! use fowidth::pebble::{dk, GameOutcome};
//!
//! let (k4, k3) = (Graph::complete(4), Graph::complete(3));
//! assert_eq!(dk(&k4, &k3, 3, None).unwrap(), GameOutcome::Infinity);
//! assert_eq!(dk(&k4, &k3, 4, None).unwrap(), GameOutcome::Rounds(4));
//! ```

mod naive;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub use naive::spoiler_wins_naive;

pub const DEFAULT_BUDGET: u64 = 100_000_000;
pub const MAX_PEBBLES: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum GameOutcome {
    /// Spoiler wins in exactly this many rounds and not fewer.
    Rounds(usize),
    /// Duplicator survives the unbounded game.
    Infinity,
    /// The round cap was reached: Spoiler needs at least `lower_bound` rounds
    /// or cannot win at all.
    Unknown { lower_bound: usize },
}

impl GameOutcome {
    pub fn rounds(self) -> Option<usize> {
        match self {
            GameOutcome::Rounds(value) => Some(value),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        self.rounds().is_some()
    }
}

impl std::fmt::Display for GameOutcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GameOutcome::Rounds(value) => write!(f, "{value}"),
            GameOutcome::Infinity => f.write_str("infinity"),
            GameOutcome::Unknown { lower_bound } => write!(f, "unknown (>= {lower_bound})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PebbleError {
    #[error("the game needs at least one pebble")]
    NoPebbles,
    #[error("at most {MAX_PEBBLES} pebbles are supported, requested {k}")]
    TooManyPebbles { k: usize },
    #[error("refusing to solve: {positions} canonical positions exceed the budget of {budget}")]
    Budget { positions: u128, budget: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Stop after this many rounds without a verdict.
    pub round_cap: Option<usize>,
    /// Maximum number of canonical positions (sets of at most `k` pairs).
    pub budget: u64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            round_cap: None,
            budget: DEFAULT_BUDGET,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PebbleReport {
    pub k: usize,
    pub outcome: GameOutcome,
    /// Number of rounds the fixpoint iteration ran.
    pub rounds: usize,
    pub positions_explored: u64,
    /// Seconds.
    pub wall_time: f64,
}

/// Whether the pairs define a partial isomorphism from `g` to `h`.
pub fn is_partial_iso(pairs: &[(usize, usize)], g: &Graph, h: &Graph) -> bool {
    pairs.iter().enumerate().all(|(i, &(a, x))| {
        pairs[..i]
            .iter()
            .all(|&(b, y)| (a == b) == (x == y) && g.adjacent(a, b) == h.adjacent(x, y))
    })
}

/// `Σ_{s ≤ k} C(N, s)`, saturating.
pub fn canonical_positions(n_pairs: usize, k: usize) -> u128 {
    let mut total: u128 = 0;
    let mut c: u128 = 1;
    for s in 0..=k.min(n_pairs) {
        total = total.saturating_add(c);
        c = c.saturating_mul((n_pairs - s) as u128) / (s as u128 + 1);
    }
    total
}

const UNRESOLVED: u16 = u16::MAX;

struct Space<'a> {
    g: &'a Graph,
    h: &'a Graph,
    nh: usize,
    k: usize,
    /// `binom[x][i] = C(x, i)` for `x ≤ N`, `i < k`.
    binom: Vec<Vec<u64>>,
    /// Index of the first position of each size.
    offset: Vec<u64>,
}

impl Space<'_> {
    fn pair(&self, id: u32) -> (usize, usize) {
        (id as usize / self.nh, id as usize % self.nh)
    }

    fn index(&self, set: &[u32]) -> usize {
        let rank: u64 = set
            .iter()
            .enumerate()
            .map(|(i, &c)| self.binom[c as usize][i + 1])
            .sum();
        (self.offset[set.len()] + rank) as usize
    }

    fn decode(&self, index: u64, out: &mut [u32; MAX_PEBBLES]) -> usize {
        let s = self.offset.partition_point(|&o| o <= index) - 1;
        let mut rank = index - self.offset[s];
        let mut hi = self.binom.len();
        for i in (1..=s).rev() {
            // Largest c < hi with C(c, i) <= rank; C(·, i) is non-decreasing.
            let (mut lo, mut top) = (0, hi);
            while top - lo > 1 {
                let mid = (lo + top) / 2;
                if self.binom[mid][i] <= rank {
                    lo = mid;
                } else {
                    top = mid;
                }
            }
            let c = lo;
            out[i - 1] = c as u32;
            rank -= self.binom[c][i];
            hi = c;
        }
        s
    }

    fn is_partial_iso(&self, set: &[u32]) -> bool {
        set.iter().enumerate().all(|(i, &p)| {
            let (a, x) = self.pair(p);
            set[..i].iter().all(|&q| {
                let (b, y) = self.pair(q);
                (a == b) == (x == y) && self.g.adjacent(a, b) == self.h.adjacent(x, y)
            })
        })
    }

    /// Value of a partial-isomorphism position of any size up to `k`.
    fn value(&self, values: &[u16], set: &[u32]) -> u16 {
        if set.len() < self.k {
            return values[self.index(set)];
        }
        let mut sub = [0u32; MAX_PEBBLES];
        (0..set.len())
            .map(|skip| {
                let mut m = 0;
                for (i, &p) in set.iter().enumerate() {
                    if i != skip {
                        sub[m] = p;
                        m += 1;
                    }
                }
                values[self.index(&sub[..m])]
            })
            .min()
            .unwrap()
    }

    /// Does Spoiler win from `set` within `r + 1` rounds, given all values up
    /// to `r`?
    fn spoiler_wins(&self, values: &[u16], set: &[u32], r: u16) -> bool {
        let pairs: Vec<(usize, usize)> = set.iter().map(|&p| self.pair(p)).collect();
        let mut next = [0u32; MAX_PEBBLES];
        for spoiler_in_g in [true, false] {
            let (own, other) = if spoiler_in_g { (self.g, self.h) } else { (self.h, self.g) };
            'moves: for v in 0..own.n() {
                if pairs.iter().any(|&(a, x)| (if spoiler_in_g { a } else { x }) == v) {
                    continue;
                }
                for w in 0..other.n() {
                    let legal = pairs.iter().all(|&(a, x)| {
                        let (mine, theirs) = if spoiler_in_g { (a, x) } else { (x, a) };
                        theirs != w && own.adjacent(v, mine) == other.adjacent(w, theirs)
                    });
                    if !legal {
                        continue;
                    }
                    let id = if spoiler_in_g { v * self.nh + w } else { w * self.nh + v } as u32;
                    let at = set.partition_point(|&p| p < id);
                    next[..at].copy_from_slice(&set[..at]);
                    next[at] = id;
                    next[at + 1..=set.len()].copy_from_slice(&set[at..]);
                    if self.value(values, &next[..=set.len()]) > r {
                        continue 'moves;
                    }
                }
                return true;
            }
        }
        false
    }
}

/// Solves the `k`-pebble game on `g` and `h`.
pub fn solve(g: &Graph, h: &Graph, k: usize, config: &SolverConfig) -> Result<PebbleReport, PebbleError> {
    let start = Instant::now();
    if k == 0 {
        return Err(PebbleError::NoPebbles);
    }
    if k > MAX_PEBBLES {
        return Err(PebbleError::TooManyPebbles { k });
    }
    let n_pairs = g.n() * h.n();
    let positions = canonical_positions(n_pairs, k);
    if positions > config.budget as u128 || positions > u32::MAX as u128 {
        return Err(PebbleError::Budget {
            positions,
            budget: config.budget,
        });
    }
    let binom: Vec<Vec<u64>> = (0..=n_pairs)
        .map(|x| {
            let mut row = vec![0u64; k + 1];
            row[0] = 1;
            for i in 1..=k {
                row[i] = if i > x { 0 } else { row[i - 1] * (x - i + 1) as u64 / i as u64 };
            }
            row
        })
        .collect();
    let mut offset = vec![0u64];
    for s in 0..k.min(n_pairs + 1) {
        offset.push(offset[s] + binom[n_pairs][s]);
    }
    let stored = *offset.last().unwrap();
    let space = Space {
        g,
        h,
        nh: h.n(),
        k,
        binom,
        offset,
    };

    let mut values: Vec<u16> = (0..stored)
        .into_par_iter()
        .map(|idx| {
            let mut buf = [0u32; MAX_PEBBLES];
            let s = space.decode(idx, &mut buf);
            if space.is_partial_iso(&buf[..s]) {
                UNRESOLVED
            } else {
                0
            }
        })
        .collect();
    let mut pending: Vec<u32> = (0..stored as u32)
        .filter(|&i| values[i as usize] == UNRESOLVED)
        .collect();

    let cap = config.round_cap.unwrap_or(usize::MAX).min(UNRESOLVED as usize - 1);
    let mut r = 0usize;
    let outcome = loop {
        if values[0] != UNRESOLVED {
            break GameOutcome::Rounds(values[0] as usize);
        }
        if r >= cap {
            break GameOutcome::Unknown { lower_bound: cap + 1 };
        }
        let won: Vec<u32> = pending
            .par_iter()
            .copied()
            .filter(|&idx| {
                let mut buf = [0u32; MAX_PEBBLES];
                let s = space.decode(idx as u64, &mut buf);
                space.spoiler_wins(&values, &buf[..s], r as u16)
            })
            .collect();
        r += 1;
        if won.is_empty() {
            break GameOutcome::Infinity;
        }
        for &idx in &won {
            values[idx as usize] = r as u16;
        }
        pending.retain(|&idx| values[idx as usize] == UNRESOLVED);
    };
    Ok(PebbleReport {
        k,
        outcome,
        rounds: r,
        positions_explored: stored,
        wall_time: start.elapsed().as_secs_f64(),
    })
}

/// `D^k(G, H)` with the default budget.
pub fn dk(g: &Graph, h: &Graph, k: usize, round_cap: Option<usize>) -> Result<GameOutcome, PebbleError> {
    let config = SolverConfig {
        round_cap,
        ..SolverConfig::default()
    };
    Ok(solve(g, h, k, &config)?.outcome)
}

/// `D(G, H)`: the least `d ≤ cap` such that Spoiler wins the `d`-pebble game
/// within `d` rounds.
pub fn distinguishing_depth(g: &Graph, h: &Graph, cap: usize, budget: u64) -> Result<GameOutcome, PebbleError> {
    for d in 1..=cap {
        let config = SolverConfig {
            round_cap: Some(d),
            budget,
        };
        match solve(g, h, d, &config)?.outcome {
            GameOutcome::Rounds(value) if value <= d => return Ok(GameOutcome::Rounds(d)),
            // With d pebbles Duplicator survives forever, so also with fewer
            // rounds; keep looking at larger d.
            _ => {}
        }
    }
    if g.is_isomorphic(h) {
        return Ok(GameOutcome::Infinity);
    }
    Ok(GameOutcome::Unknown { lower_bound: cap + 1 })
}

/// `W(G, H)`: the least `k ≤ k_max` for which Spoiler wins the `k`-pebble
/// game at all. `None` if Duplicator survives for every `k ≤ k_max`, which
/// includes isomorphic inputs (where the value is undefined).
pub fn width(g: &Graph, h: &Graph, k_max: usize, budget: u64) -> Result<Option<usize>, PebbleError> {
    let config = SolverConfig {
        round_cap: None,
        budget,
    };
    for k in 1..=k_max {
        if solve(g, h, k, &config)?.outcome.is_finite() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn out(g: &Graph, h: &Graph, k: usize) -> GameOutcome {
        dk(g, h, k, None).unwrap()
    }

    fn order(o: GameOutcome) -> usize {
        o.rounds().unwrap_or(usize::MAX)
    }

    #[test]
    fn partial_isomorphisms() {
        let (g, h) = (Graph::path(3), Graph::complete(3));
        assert!(is_partial_iso(&[], &g, &h));
        assert!(is_partial_iso(&[(1, 2)], &g, &h));
        assert!(!is_partial_iso(&[(0, 1), (2, 1)], &g, &h));
        assert!(!is_partial_iso(&[(0, 0), (2, 1)], &g, &h));
        assert!(is_partial_iso(&[(0, 0), (1, 1)], &g, &h));
    }

    #[test]
    fn position_counts() {
        assert_eq!(canonical_positions(12, 4), 1 + 12 + 66 + 220 + 495);
        assert_eq!(canonical_positions(2, 5), 4);
    }

    #[test]
    fn cliques() {
        let (k4, k3) = (Graph::complete(4), Graph::complete(3));
        assert_eq!(out(&k4, &k3, 3), GameOutcome::Infinity);
        assert_eq!(out(&k4, &k3, 4), GameOutcome::Rounds(4));
        assert_eq!(out(&k3, &k4, 4), GameOutcome::Rounds(4));
        assert_eq!(width(&k4, &k3, 5, DEFAULT_BUDGET).unwrap(), Some(4));
        assert_eq!(
            distinguishing_depth(&k3, &k4, 5, DEFAULT_BUDGET).unwrap(),
            GameOutcome::Rounds(4)
        );
    }

    #[test]
    fn edge_against_independent_pair() {
        let (k2, e2) = (Graph::complete(2), Graph::empty(2));
        assert_eq!(out(&k2, &e2, 1), GameOutcome::Infinity);
        assert_eq!(out(&k2, &e2, 2), GameOutcome::Rounds(2));
        assert_eq!(
            distinguishing_depth(&k2, &e2, 4, DEFAULT_BUDGET).unwrap(),
            GameOutcome::Rounds(2)
        );
    }

    #[test]
    fn cube_and_six_cycle() {
        let (q3, c6) = (Graph::hypercube(3), Graph::cycle(6));
        assert_eq!(out(&q3, &c6, 3), GameOutcome::Infinity);
        assert!(out(&q3, &c6, 4).is_finite());
        assert_eq!(width(&q3, &c6, 5, DEFAULT_BUDGET).unwrap(), Some(4));
    }

    #[test]
    fn small_widths() {
        let w = |a: &Graph, b: &Graph| width(a, b, 5, DEFAULT_BUDGET).unwrap();
        assert_eq!(w(&Graph::complete(3), &Graph::complete(2)), Some(3));
        assert_eq!(w(&Graph::path(3), &Graph::complete(2)), Some(2));
        assert_eq!(w(&Graph::cycle(4), &Graph::complete(2).copies(2)), Some(3));
    }

    #[test]
    fn isomorphic_inputs() {
        let g = Graph::cycle(5);
        let h = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        for k in 1..=3 {
            assert_eq!(out(&g, &h, k), GameOutcome::Infinity);
        }
        assert_eq!(width(&g, &h, 3, DEFAULT_BUDGET).unwrap(), None);
        assert_eq!(
            distinguishing_depth(&g, &h, 3, DEFAULT_BUDGET).unwrap(),
            GameOutcome::Infinity
        );
    }

    #[test]
    fn budget_and_cap() {
        let g = Graph::complete(20);
        let err = solve(&g, &g, 4, &SolverConfig { round_cap: None, budget: 1000 }).unwrap_err();
        assert_eq!(
            err,
            PebbleError::Budget {
                positions: canonical_positions(400, 4),
                budget: 1000
            }
        );
        assert!(err.to_string().contains(&canonical_positions(400, 4).to_string()));
        let (k4, k3) = (Graph::complete(4), Graph::complete(3));
        assert_eq!(dk(&k4, &k3, 4, Some(2)).unwrap(), GameOutcome::Unknown { lower_bound: 3 });
        assert_eq!(dk(&k4, &k3, 4, Some(4)).unwrap(), GameOutcome::Rounds(4));
        assert_eq!(dk(&k4, &k3, 0, None), Err(PebbleError::NoPebbles));
    }

    #[test]
    fn empty_graphs() {
        let e = Graph::empty(0);
        assert_eq!(out(&e, &e, 1), GameOutcome::Infinity);
        assert_eq!(out(&e, &Graph::empty(1), 1), GameOutcome::Rounds(1));
    }

    #[test]
    fn outcome_json() {
        let j = |o: GameOutcome| serde_json::to_string(&o).unwrap();
        assert_eq!(j(GameOutcome::Rounds(4)), r#"{"kind":"rounds","value":4}"#);
        assert_eq!(j(GameOutcome::Infinity), r#"{"kind":"infinity"}"#);
        assert_eq!(
            j(GameOutcome::Unknown { lower_bound: 3 }),
            r#"{"kind":"unknown","value":{"lower_bound":3}}"#
        );
    }

    #[test]
    fn extension_shield_small() {
        // 2K_2 and C_4 both have neither isolated nor universal vertices.
        let (a, b) = (Graph::complete(2).copies(2), Graph::cycle(4));
        assert_eq!(out(&a, &b, 2), GameOutcome::Infinity);
        assert_eq!(out(&a, &b, 3), GameOutcome::Rounds(3));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(60))]
        #[test]
        fn symmetric_monotone_complement_invariant(
            n in 1usize..=6, m in 1usize..=6, s1 in any::<u64>(), s2 in any::<u64>()
        ) {
            let g = Graph::gnp(n, 0.5, s1).unwrap();
            let h = Graph::gnp(m, 0.5, s2).unwrap();
            let mut prev = usize::MAX;
            for k in 1..=3 {
                let o = out(&g, &h, k);
                prop_assert_eq!(o, out(&h, &g, k));
                prop_assert_eq!(o, out(&g.complement(), &h.complement(), k));
                prop_assert!(order(o) <= prev);
                prev = order(o);
            }
        }
    }
}
