//! Every check run by `verify-paper`, keyed by the result it exercises.

pub mod corpus;
pub mod extension;
pub mod games;
pub mod kappa;
pub mod structure;

use fowidth::graph::Graph;
use fowidth::pebble::{solve, width, GameOutcome, PebbleError, PebbleReport, SolverConfig};
use serde_json::json;

use crate::registry::{Check, CheckResult, Cost, Ctx, Run, Status};

pub(crate) fn solve_in(ctx: &Ctx, g: &Graph, h: &Graph, k: usize) -> Result<PebbleReport, PebbleError> {
    let config = SolverConfig {
        round_cap: None,
        budget: ctx.profile.pebble_budget(),
    };
    solve(g, h, k, &config)
}

/// `D^k(G, H)` under the profile's budget.
pub(crate) fn game(ctx: &Ctx, g: &Graph, h: &Graph, k: usize) -> Result<GameOutcome, PebbleError> {
    Ok(solve_in(ctx, g, h, k)?.outcome)
}

pub(crate) fn width_in(ctx: &Ctx, g: &Graph, h: &Graph, k_max: usize) -> anyhow::Result<Option<usize>> {
    Ok(width(g, h, k_max, ctx.profile.pebble_budget())?)
}

pub(crate) fn sorted_blocks(mut blocks: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    blocks
}

/// Folds per-instance results into one: fails if any failed, skipped if all
/// were skipped.
fn aggregate(results: Vec<CheckResult>) -> Run {
    let failed = results.iter().filter(|r| r.failed()).count();
    let skipped = results
        .iter()
        .filter(|r| matches!(r.status, Status::Skipped { .. }))
        .count();
    let details = json!({ "instances": results });
    if skipped == results.len() {
        Run::Skip {
            reason: "every instance exceeded the solver budget".into(),
            details,
        }
    } else {
        Run::new(failed == 0, details)
    }
}

fn join(ctx: &Ctx) -> anyhow::Result<Run> {
    Ok(aggregate(kappa::join_instances(ctx)?))
}

fn blowups(ctx: &Ctx) -> anyhow::Result<Run> {
    Ok(aggregate(kappa::blowup_instances(ctx)?))
}

fn padding(ctx: &Ctx) -> anyhow::Result<Run> {
    Ok(aggregate(kappa::padding_instances(ctx)?))
}

macro_rules! checks {
    ($($id:literal, $anchor:literal, $cost:ident, $seeded:literal => $run:path;)*) => {
        &[$(Check { id: $id, anchor: $anchor, cost: Cost::$cost, seeded: $seeded, run: $run },)*]
    };
}

/// The registry, sorted by id.
pub const REGISTRY: &[Check] = checks! {
    "algebra.f-chain", "Theorem P4-W: f^j(X) = (K1)^{j+1}·X or ·complement(X)", Light, true => structure::f_chain;
    "algebra.g-as-power", "G_i = H_i·(A·H_i) = (A·H_i)^i", Light, false => structure::g_as_power;
    "claim-auto.transitive", "Claim auto: H is vertex-transitive; automorphisms realize equal-distance pairs", Light, false => structure::claim_auto;
    "claim-coconn", "Claim coconn: A·H_i is complement-connected", Light, false => structure::claim_coconn;
    "claim-d-less", "Claim d<d: d(x,y) < d(x,z) implies d(y,z) = d(x,z)", Light, false => structure::claim_d_less;
    "claim-ddd", "Claim ddd: no equilateral triples", Light, false => structure::claim_ddd;
    "claim-nonlosing", "Claim nonlosing: extensions within distance 2", Light, false => structure::claim_nonlosing;
    "cograph.decomposition", "Pi_{i+1} refines Pi_i and stabilizes at the cocomponents", Light, true => structure::decomposition;
    "cograph.h-powers", "H_i is a cograph", Light, false => structure::h_powers;
    "cograph.p4-free", "cographs are exactly the P4-free graphs", Corpus, false => corpus::cograph_p4;
    "cograph.twins", "every P4-free graph on two or more vertices has twins", Corpus, false => corpus::cograph_twins;
    "compl.games", "Lemma compl: D^k(G,H) = D^k(complement G, complement H)", Light, true => games::compl_games;
    "compl.patterns", "Lemma compl: F in G iff complement F in complement G", Light, false => corpus::complement_patterns;
    "cor-complete.chi", "Theorem chi / Corollary complete: A[K_l] = l", Light, true => extension::complete;
    "detect.agreement", "specialized detectors agree with generic search", Corpus, false => corpus::detectors;
    "ea-formula.agreement", "the ea_k sentence expresses the k-extension property", Corpus, false => corpus::ea_formula_scan;
    "eq-d-max.ultrametric", "Eq. d-max: d(x,y) <= max(d(x,z), d(z,y))", Light, false => structure::d_max;
    "ex-3-vertex.search", "Example 3-vertex: A[P3] = A[K3] = 3 witnesses", Light, false => extension::three_vertex;
    "ext-index.certificates", "extension-index certificates for P3, K3, paw, claw, diamond", Light, false => extension::certificates;
    "lem-alice-lower.formulas", "Lemma alice-lower: p(l,n) < 1/(2n) and q(n,k) < 2n^-11", Light, false => extension::alice_lower;
    "lem-alice.certificate-games", "Lemma alice: W*[F] >= A[F] via the extension strategy", Light, false => games::certificate_games;
    "lem-alice.random-ea", "Lemma alice: G(n,1/2) has the k-extension property whp", Light, true => extension::random_ea;
    "lem-alice.shield", "Lemma alice: ea_2 on both sides defeats 2 pebbles", Light, true => games::shield;
    "lem-alice.shield-k3", "Lemma alice: ea_3 on both sides defeats 3 pebbles", Light, false => games::shield_k3;
    "lem-chi2.connectivity", "Lemma chi2: random Turan subgraphs are highly connected", Light, true => extension::chi2_connectivity;
    "lem-cographs.p4-vs-h", "Lemma cographs: Spoiler wins on P4 vs H_i with 3 pebbles", Light, false => games::p4_vs_h;
    "lem-dist-reg.similarity", "Lemma dist-reg: distance-regularity and similarity", Light, false => games::dist_reg;
    "lem-join.width", "Lemma join: W(A*B, A'*B) >= W(A, A')", Light, true => join;
    "lem-olariu.paw-free", "Lemma olariu: paw-free iff each component is triangle-free or complete multipartite", Corpus, false => corpus::olariu;
    "lem-padding.universal", "Lemma padding: universal vertices keep the width", Light, false => padding;
    "metric.singletons", "Pi_t of (K1)^{t+1} is the singleton partition", Light, false => structure::singletons;
    "metric.twins", "d(x,y) = 1 iff x and y are twins", Light, false => structure::metric_twins;
    "open.paley13-ea3", "paley(13) as the base graph A: ea_3 and an induced P4", Light, false => structure::paley13;
    "p4-d3.g3-h3", "Lemma P4-D^3 at m = 0: D^3(G_3, H_3) (regression value)", Heavy, false => games::g3_h3;
    "pebble.oracle", "fixpoint solver agrees with naive game search", Light, true => games::oracle;
    "sec4.w-k4-k3", "W(K4, K3) = 4", Light, false => games::w_k4_k3;
    "srg.rook", "rook(m) is strongly regular (m^2, 2m-2, m-2, 2) with connectivity 2m-2", Light, false => structure::srg_rook;
    "thm-c4.witness", "Theorem C4: Q3 vs C6 with 3 pebbles", Light, false => games::c4_witness;
    "thm-chi.pattern-free", "Theorem chi: random Turan subgraphs avoid F with chi(F) > k", Light, true => extension::pattern_free;
    "thm-chi.tail-shape", "Theorem chi: shape of the union bound in n", Light, false => extension::tail_shape;
    "thm-chi.turan", "Theorem chi: the random 3-partite graph has ea_3 and no K4", Light, true => extension::turan;
    "thm-k13.rook", "Theorem K13: the 3x3 rook graph", Light, false => extension::k13_rook;
    "thm-kappa-collapse.blowups", "Theorem kappa-collapse: blowups by K_s and its complement", Light, false => blowups;
    "thm-paw.sentence", "Theorem paw: the 3-variable sentence defines paw containment", Corpus, false => corpus::paw_sentence_scan;
};

/// Check ids grouped by acceptance criterion, in criterion order.
pub const CRITERIA: [(&str, &[&str]); 15] = [
    ("paw sentence vs induced-paw search, n <= 7", &["thm-paw.sentence"]),
    ("Olariu paw-freeness test, n <= 7", &["lem-olariu.paw-free"]),
    ("cographs are P4-free and have twins, n <= 7", &["cograph.p4-free", "cograph.twins"]),
    ("W(K4, K3) = 4", &["sec4.w-k4-k3"]),
    ("Q3 vs C6 witness for C4", &["thm-c4.witness"]),
    ("3x3 rook graph witnesses for claw and diamond", &["thm-k13.rook"]),
    ("extension-index certificates", &["ext-index.certificates"]),
    ("extension shield on 20 seeded pairs", &["lem-alice.shield"]),
    ("alice-lower inequalities for even l in [16, 64]", &["lem-alice-lower.formulas"]),
    ("Turan tail bound and random 3-partite samples", &["thm-chi.turan"]),
    (
        "decomposition metric claims",
        &[
            "metric.twins",
            "claim-ddd",
            "claim-d-less",
            "eq-d-max.ultrametric",
            "metric.singletons",
            "claim-auto.transitive",
        ],
    ),
    ("algebraic identities of graph powers", &["algebra.f-chain", "algebra.g-as-power"]),
    ("P4 vs H_i with 3 pebbles", &["lem-cographs.p4-vs-h"]),
    ("Lemma join on fixed instances", &["lem-join.width"]),
    ("fixpoint solver vs naive search", &["pebble.oracle"]),
];

pub fn find(id: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.id == id)
}
