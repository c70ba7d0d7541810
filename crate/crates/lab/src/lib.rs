//! Command-line front end and reproduction suite for the `fowidth` library.
//!
//! * [`input`] parses graph arguments (graph6, files, `name:params`).
//! * [`construct`] builds the powers of `K_1` and the graphs `G_i`.
//! * [`registry`] and [`checks`] hold the `verify-paper` suite.

pub mod checks;
pub mod construct;
pub mod corpus;
pub mod input;
pub mod registry;

pub use checks::{CRITERIA, REGISTRY};
pub use registry::{run_all, CheckResult, Ctx, Profile, Status, DEFAULT_SEED};

/// Ids listed in the checked-in manifest, one per line.
pub const MANIFEST: &str = include_str!("../checks.manifest");
