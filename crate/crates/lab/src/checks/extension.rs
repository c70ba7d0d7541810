//! Extension axioms, witnesses and the probability bounds.

use fowidth::extension::{
    alice_lower_bound, certify_extension_lower, check_ea, chi_lower, empirical_ea_rate,
    least_n_below, search_witness, successor_ratio, turan_tail_bound, turan_tail_peak, Strategy,
};
use fowidth::graph::{is_strongly_regular, vertex_connectivity_at_least, Graph, Srg, SrgParams};
use fowidth::patterns::{contains_induced, has_induced_claw, has_induced_diamond};
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use serde_json::json;

use crate::registry::{Ctx, Profile, Run};

/// Least `n` with `turan_tail_bound(3, n) < 1`.
pub const TURAN_LEAST_N_BELOW_ONE: usize = 35;
/// Least `n` with `turan_tail_bound(3, n) < 1/20`; the sampling size for `𝕋_{3,n}`.
pub const TURAN_SAMPLE_N: usize = 48;
/// Peak of `n ↦ turan_tail_bound(3, n)`.
pub const TURAN_PEAK: usize = 7;
/// Required fraction of `𝕋_{3,n}` samples satisfying `ea_3`.
pub const TURAN_EA_RATE: f64 = 0.9;
/// Connectivity every `𝕋_{3,60}` sample reaches.
pub const TURAN_CONNECTIVITY: usize = 5;
/// Required `ea_3` rate of `G(64, 1/2)` over 100 samples.
pub const GNP_EA_RATE: f64 = 0.95;

pub fn k13_rook(_: &Ctx) -> anyhow::Result<Run> {
    let g = Graph::rook(3);
    let ea = check_ea(&g, 3)?;
    let claw = has_induced_claw(&g);
    let diamond = has_induced_diamond(&g);
    let srg = is_strongly_regular(&g);
    let kappa = g.vertex_connectivity();
    Ok(Run::new(
        ea.holds
            && !claw
            && !diamond
            && srg == Some(Srg::Proper(SrgParams::new(9, 4, 1, 2)?))
            && kappa == 4,
        json!({ "ea3": ea.holds, "claw": claw, "diamond": diamond, "srg": srg, "connectivity": kappa }),
    ))
}

pub fn certificates(_: &Ctx) -> anyhow::Result<Run> {
    let two_k2 = Graph::complete(2).copies(2);
    let cases = [
        ("P3", Graph::path(3), 3, "2K2", two_k2.clone()),
        ("K3", Graph::complete(3), 3, "2K2", two_k2),
        ("K3", Graph::complete(3), 3, "C4", Graph::cycle(4)),
        ("paw", Graph::paw(), 3, "C4", Graph::cycle(4)),
        ("claw", Graph::claw(), 4, "rook:3", Graph::rook(3)),
        ("diamond", Graph::diamond(), 4, "rook:3", Graph::rook(3)),
    ];
    let mut rows = Vec::new();
    let mut ok = true;
    for (f, fg, k, h, hg) in &cases {
        let cert = certify_extension_lower(fg, *k, hg)?;
        ok &= cert.valid;
        rows.push(json!({
            "f": f,
            "k": k,
            "h": h,
            "extension_holds": cert.extension.holds,
            "induced_copy": cert.induced_copy,
            "valid": cert.valid,
        }));
    }
    Ok(Run::new(ok, json!({ "certificates": rows })))
}

pub fn alice_lower(ctx: &Ctx) -> anyhow::Result<Run> {
    let ells: Vec<usize> = match ctx.profile {
        Profile::Deep => (16..=64).collect(),
        _ => (16..=64).step_by(2).collect(),
    };
    let reports = ells
        .par_iter()
        .map(|&l| alice_lower_bound(l))
        .collect::<Result<Vec<_>, _>>()?;
    let failing: Vec<usize> = reports
        .iter()
        .filter(|r| !(r.p_holds && r.q_holds))
        .map(|r| r.ell)
        .collect();
    let first = &reports[0];
    let odd = alice_lower_bound(17)?;
    let ok = failing.is_empty() && first.n == 128 && first.k == 2 && odd.n == 128;
    let rows: Vec<_> = reports
        .iter()
        .map(|r| json!({ "ell": r.ell, "n": r.n, "k": r.k, "p_log2": r.p_log2, "q_log2": r.q_log2, "q_exact": r.q_exact }))
        .collect();
    Ok(Run::new(ok, json!({ "failing": failing, "ell_17_n": odd.n, "reports": rows })))
}

/// Sampling size, bound and samples for `𝕋_{3,n}` at the frozen `n`.
pub fn turan(ctx: &Ctx) -> anyhow::Result<Run> {
    let one = BigRational::one();
    let twentieth = BigRational::new(1.into(), 20.into());
    let least_one = least_n_below(3, &one);
    let n = least_n_below(3, &twentieth);
    let bound_below_one = turan_tail_bound(3, n) < one;
    let samples = 50 * ctx.profile.sample_scale();
    let k4 = Graph::complete(4);
    let per_sample = (0..samples as u64)
        .into_par_iter()
        .map(|s| {
            let g = Graph::turan_random_stream(3, n, ctx.seed, s)?;
            Ok((contains_induced(&g, &k4).is_some(), check_ea(&g, 3)?.holds))
        })
        .collect::<anyhow::Result<Vec<(bool, bool)>>>()?;
    let with_k4 = per_sample.iter().filter(|s| s.0).count();
    let passing = per_sample.iter().filter(|s| s.1).count();
    let rate = passing as f64 / samples as f64;
    Ok(Run::new(
        least_one == TURAN_LEAST_N_BELOW_ONE
            && n == TURAN_SAMPLE_N
            && bound_below_one
            && with_k4 == 0
            && rate >= TURAN_EA_RATE,
        json!({
            "least_n_bound_below_one": least_one,
            "sample_n": n,
            "vertices": 3 * n,
            "bound_below_one": bound_below_one,
            "samples": samples,
            "with_induced_k4": with_k4,
            "ea3_passing": passing,
            "ea3_rate": rate,
            "required_rate": TURAN_EA_RATE,
        }),
    ))
}

/// The tail bound exceeds 1 at `n = k`, rises to a single peak, then
/// decreases for every `n` up to `10^4`.
pub fn tail_shape(_: &Ctx) -> anyhow::Result<Run> {
    let one = BigRational::one();
    let peak = turan_tail_peak(3);
    let above_at_k = turan_tail_bound(3, 3) > one;
    let up_violations = (3..peak).filter(|&n| successor_ratio(3, n) <= one).count();
    let down_violations = (peak..10_000).filter(|&n| successor_ratio(3, n) >= one).count();
    Ok(Run::new(
        peak == TURAN_PEAK && above_at_k && up_violations == 0 && down_violations == 0,
        json!({
            "peak": peak,
            "bound_above_one_at_k": above_at_k,
            "increasing_violations": up_violations,
            "decreasing_violations": down_violations,
            "checked_up_to": 10_000,
        }),
    ))
}

pub fn pattern_free(ctx: &Ctx) -> anyhow::Result<Run> {
    let samples = 20 * ctx.profile.sample_scale();
    let mut rows = Vec::new();
    let mut ok = true;
    for (name, f, parts) in [("K4", Graph::complete(4), 3), ("paw", Graph::paw(), 2)] {
        let chi = chi_lower(&f)?;
        let mut hits = 0;
        for s in 0..samples as u64 {
            let g = Graph::turan_random_stream(parts, 10, ctx.seed, s)?;
            hits += usize::from(contains_induced(&g, &f).is_some());
        }
        ok &= chi > parts && hits == 0;
        rows.push(json!({ "f": name, "chromatic": chi, "parts": parts, "samples": samples, "with_copy": hits }));
    }
    Ok(Run::new(ok, json!({ "patterns": rows })))
}

pub fn chi2_connectivity(ctx: &Ctx) -> anyhow::Result<Run> {
    let samples = 10 * ctx.profile.sample_scale();
    let connected = (0..samples as u64)
        .into_par_iter()
        .map(|s| Ok(vertex_connectivity_at_least(&Graph::turan_random_stream(3, 60, ctx.seed, s)?, TURAN_CONNECTIVITY)))
        .collect::<anyhow::Result<Vec<bool>>>()?;
    let count = connected.iter().filter(|&&c| c).count();
    Ok(Run::new(
        count == samples,
        json!({ "parts": 3, "class_size": 60, "samples": samples, "s": TURAN_CONNECTIVITY, "s_connected": count }),
    ))
}

pub fn complete(ctx: &Ctx) -> anyhow::Result<Run> {
    let chi_ok = (1..=8).all(|l| chi_lower(&Graph::complete(l)).ok() == Some(l));
    let extra = [
        ("paw", chi_lower(&Graph::paw())?, 3),
        ("C4", chi_lower(&Graph::cycle(4))?, 2),
        ("C5", chi_lower(&Graph::cycle(5))?, 3),
    ];
    let extra_ok = extra.iter().all(|(_, got, want)| got == want);
    let out = search_witness(
        &Graph::complete(4),
        4,
        Strategy::TuranRandomSampling { parts: Some(3) },
        200,
        ctx.seed,
    )?;
    let found = out.certificate.as_ref().map(|c| c.witness.n());
    Ok(Run::new(
        chi_ok && extra_ok && found.is_some_and(|n| n <= 600),
        json!({
            "chi_complete_up_to_8": chi_ok,
            "chi": extra.iter().map(|(f, v, _)| json!({ "f": f, "chi": v })).collect::<Vec<_>>(),
            "k4_witness_vertices": found,
            "candidates": out.candidates,
        }),
    ))
}

pub fn three_vertex(_: &Ctx) -> anyhow::Result<Run> {
    let exhaustive = Strategy::ExhaustiveSmall { max_n: 8 };
    let k3 = search_witness(&Graph::complete(3), 3, exhaustive, 1 << 22, 0)?;
    let k3_witness = k3.certificate.map(|c| c.witness);
    let k3_ok = k3_witness.as_ref().is_some_and(|h| {
        h.is_isomorphic(&Graph::cycle(4)) || h.is_isomorphic(&Graph::complete(2).copies(2))
    });
    let p3 = search_witness(&Graph::path(3), 3, exhaustive, 1 << 22, 0)?;
    let p3_witness = p3.certificate.map(|c| c.witness);
    let k2 = search_witness(&Graph::complete(2), 2, exhaustive, 1 << 22, 0)?;
    let k2_witness = k2.certificate.map(|c| c.witness);
    let k2_ok = k2_witness.as_ref().is_some_and(|h| h.n() >= 1 && h.edge_count() == 0);
    Ok(Run::new(
        k3_ok && p3_witness.is_some() && k2_ok,
        json!({ "k3": k3_witness, "p3": p3_witness, "k2": k2_witness }),
    ))
}

pub fn random_ea(ctx: &Ctx) -> anyhow::Result<Run> {
    let samples = 100 * ctx.profile.sample_scale();
    let rate = empirical_ea_rate(64, 3, samples, ctx.seed)?;
    let tiny = empirical_ea_rate(4, 3, 50, ctx.seed)?;
    let trivial = empirical_ea_rate(5, 1, 20, ctx.seed)?;
    Ok(Run::new(
        rate >= GNP_EA_RATE && tiny == 0.0 && trivial == 1.0,
        json!({ "n64_k3_rate": rate, "samples": samples, "required": GNP_EA_RATE, "n4_k3_rate": tiny, "n5_k1_rate": trivial }),
    ))
}
