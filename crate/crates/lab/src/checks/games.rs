//! Checks driven by the pebble-game solver.

use fowidth::extension::{certify_extension_lower, check_ea};
use fowidth::graph::Graph;
use fowidth::patterns::contains_induced;
use fowidth::pebble::{distinguishing_depth, spoiler_wins_naive, GameOutcome, PebbleError};
use rayon::prelude::*;
use serde_json::{json, Value};

use super::{game, width_in};
use crate::construct::{build_g, build_h};
use crate::corpus::labeled_count;
use crate::registry::{Ctx, Run};

/// `D^3(P_4, H_i)` for `i = 1..=6`. Not stated in the literature; frozen here
/// so that solver changes are noticed.
pub const P4_VS_H_ROUNDS: [usize; 6] = [2, 2, 3, 3, 3, 3];

/// `D^3(G_3, H_3)` with `A = paley(13)`; a regression value, not a published one.
pub const G3_H3_ROUNDS: usize = 3;

pub fn w_k4_k3(ctx: &Ctx) -> anyhow::Result<Run> {
    let (k4, k3) = (Graph::complete(4), Graph::complete(3));
    let d3 = game(ctx, &k4, &k3, 3)?;
    let d4 = game(ctx, &k4, &k3, 4)?;
    let w = width_in(ctx, &k4, &k3, 5)?;
    let budget = ctx.profile.pebble_budget();
    let dd = distinguishing_depth(&k3, &k4, 6, budget)?;
    let dd_edge = distinguishing_depth(&Graph::complete(2), &Graph::empty(2), 4, budget)?;
    Ok(Run::new(
        d3 == GameOutcome::Infinity
            && d4 == GameOutcome::Rounds(4)
            && w == Some(4)
            && dd == GameOutcome::Rounds(4)
            && dd_edge == GameOutcome::Rounds(2),
        json!({
            "d3_k4_k3": d3,
            "d4_k4_k3": d4,
            "width": w,
            "depth_k3_k4": dd,
            "depth_k2_2k1": dd_edge,
        }),
    ))
}

pub fn c4_witness(ctx: &Ctx) -> anyhow::Result<Run> {
    let (q3, c6, c4) = (Graph::hypercube(3), Graph::cycle(6), Graph::cycle(4));
    let dr = (q3.is_distance_regular(), c6.is_distance_regular());
    let sim = q3.similar(&c6).map_err(|e| anyhow::anyhow!("{e}"))?;
    let d3 = game(ctx, &q3, &c6, 3)?;
    let d4 = game(ctx, &q3, &c6, 4)?;
    let w = width_in(ctx, &q3, &c6, 5)?;
    let face = contains_induced(&q3, &c4);
    let in_c6 = contains_induced(&c6, &c4);
    Ok(Run::new(
        dr == (true, true)
            && sim
            && d3 == GameOutcome::Infinity
            && d4.is_finite()
            && w == Some(4)
            && face.is_some()
            && in_c6.is_none(),
        json!({
            "distance_regular": [dr.0, dr.1],
            "similar": sim,
            "d3": d3,
            "d4": d4,
            "width": w,
            "c4_in_q3": face,
            "c4_in_c6": in_c6,
        }),
    ))
}

pub fn dist_reg(_: &Ctx) -> anyhow::Result<Run> {
    let graphs = [
        ("cycle:5", Graph::cycle(5)),
        ("cycle:6", Graph::cycle(6)),
        ("hypercube:3", Graph::hypercube(3)),
        ("rook:3", Graph::rook(3)),
        ("paley:13", Graph::paley(13)?),
        ("complete:4", Graph::complete(4)),
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, g) in &graphs {
        let dr = g.is_distance_regular();
        let reflexive = g.similar(g).unwrap_or(false);
        ok &= dr && reflexive;
        rows.push(json!({ "graph": name, "distance_regular": dr, "self_similar": reflexive }));
    }
    let f112 = Graph::cycle(6).distance_profile().get(1, 1, 2);
    let paw_dr = Graph::paw().is_distance_regular();
    let refused = Graph::paw().similar(&Graph::cycle(4)).is_err();
    ok &= f112 == 1 && !paw_dr && refused;
    Ok(Run::new(
        ok,
        json!({ "graphs": rows, "c6_f_1_1_2": f112, "paw_distance_regular": paw_dr, "paw_similarity_refused": refused }),
    ))
}

/// Seeded `G(n, 1/2)` graphs with `5 ≤ n ≤ 9` passing `ea_2`, paired up
/// consecutively and skipping isomorphic partners.
pub fn shield_pairs(seed: u64, count: usize) -> anyhow::Result<Vec<(u64, Graph, u64, Graph)>> {
    let mut pairs = Vec::new();
    let mut pending: Option<(u64, Graph)> = None;
    let mut stream = 0u64;
    while pairs.len() < count {
        let g = Graph::gnp_stream(5 + (stream % 5) as usize, 0.5, seed, stream)?;
        if check_ea(&g, 2)?.holds {
            match pending.take() {
                Some((s0, g0)) if !g0.is_isomorphic(&g) => pairs.push((s0, g0, stream, g)),
                Some(first) => pending = Some(first),
                None => pending = Some((stream, g)),
            }
        }
        stream += 1;
    }
    Ok(pairs)
}

pub fn shield(ctx: &Ctx) -> anyhow::Result<Run> {
    let pairs = shield_pairs(ctx.seed, 20)?;
    let mut rows = Vec::new();
    let mut ok = true;
    for (sg, g, sh, h) in &pairs {
        let out = game(ctx, g, h, 2)?;
        ok &= out == GameOutcome::Infinity;
        rows.push(json!({ "g_stream": sg, "g": g, "h_stream": sh, "h": h, "d2": out }));
    }
    Ok(Run::new(ok, json!({ "pairs": rows })))
}

pub fn shield_k3(ctx: &Ctx) -> anyhow::Result<Run> {
    let candidates = [
        ("rook:3", Graph::rook(3)),
        ("rook:4", Graph::rook(4)),
        ("paley:13", Graph::paley(13)?),
        ("paley:17", Graph::paley(17)?),
    ];
    let mut passing = Vec::new();
    let mut statuses = Vec::new();
    for (name, g) in &candidates {
        let holds = check_ea(g, 3)?.holds;
        statuses.push(json!({ "graph": name, "ea3": holds }));
        if holds {
            passing.push((name, g));
        }
    }
    let mut rows = Vec::new();
    let mut ok = passing.len() >= 2;
    for (i, (na, a)) in passing.iter().enumerate() {
        for (nb, b) in &passing[i + 1..] {
            let out = game(ctx, a, b, 3)?;
            ok &= out == GameOutcome::Infinity;
            rows.push(json!({ "g": na, "h": nb, "d3": out }));
        }
    }
    Ok(Run::new(ok, json!({ "candidates": statuses, "games": rows })))
}

/// A valid certificate `(F, k, H)` makes `H` indistinguishable with `k − 1`
/// pebbles from every `G ⊒ F` that also satisfies `ea_{k−1}`.
pub fn certificate_games(ctx: &Ctx) -> anyhow::Result<Run> {
    let two_k2 = Graph::complete(2).copies(2);
    let certs = [
        ("P3", Graph::path(3), 3, "2K2", two_k2.clone()),
        ("K3", Graph::complete(3), 3, "2K2", two_k2.clone()),
        ("K3", Graph::complete(3), 3, "C4", Graph::cycle(4)),
        ("paw", Graph::paw(), 3, "C4", Graph::cycle(4)),
        ("claw", Graph::claw(), 4, "rook:3", Graph::rook(3)),
        ("diamond", Graph::diamond(), 4, "rook:3", Graph::rook(3)),
    ];
    let opponents = [
        ("cycle:4", Graph::cycle(4)),
        ("cycle:5", Graph::cycle(5)),
        ("path:4", Graph::path(4)),
        ("bipartite:3,3", Graph::complete_bipartite(3, 3)),
        ("rook:4", Graph::rook(4)),
        ("paley:13", Graph::paley(13)?),
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for (fname, f, k, hname, h) in &certs {
        let cert = certify_extension_lower(f, *k, h)?;
        let mut games = Vec::new();
        for (gname, g) in &opponents {
            if g.is_isomorphic(h) || contains_induced(g, f).is_none() || !check_ea(g, k - 1)?.holds {
                continue;
            }
            let out = game(ctx, g, h, k - 1)?;
            ok &= out == GameOutcome::Infinity;
            games.push(json!({ "g": gname, "outcome": out }));
        }
        ok &= cert.valid && !games.is_empty();
        rows.push(json!({ "f": fname, "k": k, "h": hname, "valid": cert.valid, "games": games }));
    }
    // Without the extension requirement on G the implication fails: F itself
    // is distinguishable from H.
    let unrestricted = game(ctx, &Graph::path(3), &two_k2, 2)?;
    Ok(Run::new(
        ok,
        json!({ "certificates": rows, "p3_vs_2k2_two_pebbles": unrestricted }),
    ))
}

pub fn compl_games(ctx: &Ctx) -> anyhow::Result<Run> {
    let pairs = 30 * ctx.profile.sample_scale();
    let mut mismatches = Vec::new();
    let mut finite = 0;
    for s in 0..pairs as u64 {
        let g = Graph::gnp_stream(2 + (s % 7) as usize, 0.5, ctx.seed, 2 * s)?;
        let h = Graph::gnp_stream(2 + (s * 3 % 7) as usize, 0.5, ctx.seed, 2 * s + 1)?;
        for k in 1..=3 {
            let a = game(ctx, &g, &h, k)?;
            let b = game(ctx, &g.complement(), &h.complement(), k)?;
            finite += usize::from(a.is_finite());
            if a != b {
                mismatches.push(json!({ "g": g, "h": h, "k": k, "outcome": a, "complement_outcome": b }));
            }
        }
    }
    Ok(Run::new(
        mismatches.is_empty(),
        json!({ "pairs": pairs, "finite_outcomes": finite, "mismatches": mismatches }),
    ))
}

pub fn p4_vs_h(ctx: &Ctx) -> anyhow::Result<Run> {
    let p4 = Graph::path(4);
    let mut rounds = Vec::new();
    let mut rows = Vec::new();
    for i in 1..=6 {
        let h = build_h(i)?;
        let out = game(ctx, &p4, &h, 3)?;
        rows.push(json!({ "i": i, "vertices": h.n(), "d3": out }));
        rounds.push(out.rounds());
    }
    let all_finite = rounds.iter().all(Option::is_some);
    let monotone = rounds.windows(2).all(|w| w[0] <= w[1]);
    let frozen = rounds
        .iter()
        .zip(P4_VS_H_ROUNDS)
        .all(|(r, f)| *r == Some(f));
    Ok(Run::new(
        all_finite && monotone && frozen,
        json!({ "games": rows, "non_decreasing": monotone, "matches_frozen": frozen }),
    ))
}

pub fn g3_h3(ctx: &Ctx) -> anyhow::Result<Run> {
    let a = Graph::paley(13)?;
    let (g3, h3) = (build_g(3, &a)?, build_h(3)?);
    let out = match super::solve_in(ctx, &g3, &h3, 3) {
        Err(PebbleError::Budget { positions, budget }) => {
            return Ok(Run::skip(format!(
                "{positions} canonical positions exceed this profile's budget of {budget}"
            )))
        }
        other => other?,
    };
    Ok(Run::new(
        out.outcome == GameOutcome::Rounds(G3_H3_ROUNDS),
        json!({
            "g_vertices": g3.n(),
            "h_vertices": h3.n(),
            "outcome": out.outcome,
            "positions_explored": out.positions_explored,
            "frozen": G3_H3_ROUNDS,
            "provenance": "regression value computed by this solver",
        }),
    ))
}

/// Compares the fixpoint value with the naive search at every depth `0..=4`.
fn oracle_mismatch(ctx: &Ctx, g: &Graph, h: &Graph) -> anyhow::Result<Option<Value>> {
    for k in 1..=3 {
        let out = game(ctx, g, h, k)?;
        for d in 0..=4 {
            let fixpoint = out.rounds().is_some_and(|r| r <= d);
            if spoiler_wins_naive(g, h, k, d) != fixpoint {
                return Ok(Some(json!({ "g": g, "h": h, "k": k, "depth": d, "fixpoint": out })));
            }
        }
    }
    Ok(None)
}

pub fn oracle(ctx: &Ctx) -> anyhow::Result<Run> {
    let small: Vec<Graph> = (0..=3)
        .flat_map(|n| (0..labeled_count(n)).map(move |m| Graph::from_mask(n, m)))
        .collect();
    let mut pairs: Vec<(Graph, Graph)> = Vec::new();
    for g in &small {
        for h in &small {
            pairs.push((g.clone(), h.clone()));
        }
    }
    let exhaustive = pairs.len();
    let sampled = 200 * ctx.profile.sample_scale();
    for s in 0..sampled as u64 {
        let ng = 1 + (s % 5) as usize;
        let nh = 1 + (s / 5 % 5) as usize;
        pairs.push((
            Graph::gnp_stream(ng, 0.5, ctx.seed, 2 * s)?,
            Graph::gnp_stream(nh, 0.5, ctx.seed, 2 * s + 1)?,
        ));
    }
    let found: Vec<Option<Value>> = pairs
        .par_iter()
        .map(|(g, h)| oracle_mismatch(ctx, g, h))
        .collect::<anyhow::Result<_>>()?;
    let mismatches: Vec<Value> = found.into_iter().flatten().collect();
    Ok(Run::new(
        mismatches.is_empty(),
        json!({
            "exhaustive_pairs": exhaustive,
            "sampled_pairs": sampled,
            "max_pebbles": 3,
            "max_depth": 4,
            "mismatches": mismatches,
        }),
    ))
}
