//! Plain game-tree search with labeled pebbles, kept deliberately simple so
//! it can serve as an independent check on the fixpoint solver.

use crate::graph::Graph;

fn consistent(pebbles: &[Option<(usize, usize)>], g: &Graph, h: &Graph) -> bool {
    let placed: Vec<(usize, usize)> = pebbles.iter().flatten().copied().collect();
    super::is_partial_iso(&placed, g, h)
}

fn wins(pebbles: &mut [Option<(usize, usize)>], g: &Graph, h: &Graph, d: usize) -> bool {
    if d == 0 {
        return false;
    }
    for i in 0..pebbles.len() {
        let saved = pebbles[i];
        for in_g in [true, false] {
            let (own, other) = if in_g { (g, h) } else { (h, g) };
            for v in 0..own.n() {
                let mut forced = true;
                for w in 0..other.n() {
                    pebbles[i] = Some(if in_g { (v, w) } else { (w, v) });
                    if consistent(pebbles, g, h) && !wins(pebbles, g, h, d - 1) {
                        forced = false;
                        break;
                    }
                }
                pebbles[i] = saved;
                if forced {
                    return true;
                }
            }
        }
    }
    false
}

/// Can Spoiler, with `k` labeled pebble pairs, force a loss within `d` rounds
/// from the empty position? Exponential in `d`; meant for tiny graphs.
pub fn spoiler_wins_naive(g: &Graph, h: &Graph, k: usize, d: usize) -> bool {
    wins(&mut vec![None; k], g, h, d)
}
