//! Exhaustive scans over all small labeled graphs.

use fowidth::extension::check_ea;
use fowidth::graph::{twins, Graph};
use fowidth::logic::{ea_formula, paw_sentence, Sentence};
use fowidth::patterns::{
    contains_induced, find_triangle, has_induced_claw, has_induced_diamond, has_induced_p4,
    has_induced_paw, is_cograph, is_paw_free,
};
use serde_json::json;

use crate::corpus::scan;
use crate::registry::{Ctx, Run};

pub fn paw_sentence_scan(ctx: &Ctx) -> anyhow::Result<Run> {
    let s = Sentence::new(paw_sentence())?;
    let paw = Graph::paw();
    let summary = scan(ctx.profile.corpus_n(), |g| s.eval(g) == contains_induced(g, &paw).is_some());
    let spot = [
        ("paw", s.eval(&paw), true),
        ("paw+K1", s.eval(&paw.disjoint_union(&Graph::empty(1))), true),
        ("C5", s.eval(&Graph::cycle(5)), false),
        ("K4", s.eval(&Graph::complete(4)), false),
    ];
    let spot_ok = spot.iter().all(|(_, got, want)| got == want);
    Ok(Run::new(
        summary.clean() && spot_ok && s.depth() == 3 && s.width() == 3,
        json!({
            "scan": summary,
            "depth": s.depth(),
            "width": s.width(),
            "spot": spot.iter().map(|(g, v, _)| json!({ "graph": g, "value": v })).collect::<Vec<_>>(),
        }),
    ))
}

pub fn olariu(ctx: &Ctx) -> anyhow::Result<Run> {
    let paw = Graph::paw();
    let summary = scan(ctx.profile.corpus_n(), |g| is_paw_free(g) == contains_induced(g, &paw).is_none());
    Ok(Run::new(summary.clean(), json!({ "scan": summary })))
}

pub fn cograph_p4(ctx: &Ctx) -> anyhow::Result<Run> {
    let p4 = Graph::path(4);
    let summary = scan(ctx.profile.corpus_n(), |g| is_cograph(g) == contains_induced(g, &p4).is_none());
    Ok(Run::new(summary.clean(), json!({ "scan": summary })))
}

pub fn cograph_twins(ctx: &Ctx) -> anyhow::Result<Run> {
    let summary = scan(ctx.profile.corpus_n(), |g| g.n() < 2 || !is_cograph(g) || !twins(g).is_empty());
    Ok(Run::new(summary.clean(), json!({ "scan": summary })))
}

pub fn detectors(ctx: &Ctx) -> anyhow::Result<Run> {
    let (k3, p4, paw, claw, diamond) = (
        Graph::complete(3),
        Graph::path(4),
        Graph::paw(),
        Graph::claw(),
        Graph::diamond(),
    );
    let summary = scan(ctx.profile.corpus_n(), |g| {
        let has = |f: &Graph| contains_induced(g, f).is_some();
        find_triangle(g).is_some() == has(&k3)
            && has_induced_p4(g) == has(&p4)
            && has_induced_paw(g) == has(&paw)
            && has_induced_claw(g) == has(&claw)
            && has_induced_diamond(g) == has(&diamond)
    });
    Ok(Run::new(summary.clean(), json!({ "scan": summary })))
}

pub fn ea_formula_scan(ctx: &Ctx) -> anyhow::Result<Run> {
    let mut rows = Vec::new();
    let mut ok = true;
    for k in 1..=3 {
        let s = Sentence::new(ea_formula(k)?)?;
        let summary = scan(ctx.profile.corpus_n(), |g| {
            check_ea(g, k).ok().map(|r| r.holds) == Some(s.eval(g))
        });
        ok &= summary.clean() && s.depth() == k;
        rows.push(json!({ "k": k, "depth": s.depth(), "scan": summary }));
    }
    Ok(Run::new(ok, json!({ "per_k": rows })))
}

/// `F ⊑ G` iff `F̄ ⊑ Ḡ`, for all four-vertex patterns and all graphs with `n ≤ 6`.
pub fn complement_patterns(_: &Ctx) -> anyhow::Result<Run> {
    let patterns = [
        Graph::complete(3),
        Graph::path(4),
        Graph::paw(),
        Graph::claw(),
        Graph::diamond(),
        Graph::cycle(4),
    ];
    let co: Vec<Graph> = patterns.iter().map(Graph::complement).collect();
    let summary = scan(6, |g| {
        let gc = g.complement();
        patterns
            .iter()
            .zip(&co)
            .all(|(f, fc)| contains_induced(g, f).is_some() == contains_induced(&gc, fc).is_some())
    });
    Ok(Run::new(summary.clean(), json!({ "patterns": patterns.len(), "scan": summary })))
}
