//! Brute-force ground truth.
//!
//! Everything here is exhaustive and deliberately simple: minima by scanning every
//! bitstring, feasible sets by enumerating permutations or subsets directly from the
//! graph, and ansatz supports by sampling the circuit at many parameter points.

mod counts;
mod enumerate;
mod support;

pub use counts::{table_formula, verify_counts, CountCheck, CountReport, CountRow, FormulaCounts};
pub use enumerate::{
    brute_force_min, brute_force_min_by, enumerate_feasible, BruteForceMin, FeasibleAnswer,
};
pub use support::{support, SupportReport};

/// Largest bitstring width [`brute_force_min`] will scan.
pub const BRUTE_FORCE_MAX_BITS: usize = 24;
/// Largest tour size [`enumerate_feasible`] will enumerate.
pub const MAX_TOUR_CITIES: usize = 6;
/// Largest vertex count [`enumerate_feasible`] will scan for covers.
pub const MAX_COVER_VERTICES: usize = 16;
