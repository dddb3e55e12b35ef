//! Special graded Betti numbers `b_k`, the graded Betti table, and the closed
//! forms for bipyramids and connected sums.
//!
//! Two conventions live side by side and are never mixed:
//!
//! * [`BettiVector`] evaluates `b_k = sum over k-subsets W of (cc(W) - 1)`
//!   literally, so `b_0 = -1` (the empty restriction has no components).
//! * [`GradedBettiTable`] stores `beta_{i,j}` from Hochster's formula, where
//!   `beta_{0,0} = 1`.

mod formulas;
mod hochster;
mod sweep;
mod table;

pub use formulas::{
    bipyramid_b, bound_f, bound_multi, bound_second, connected_sum_b, connected_sum_vector, multiway_bn4,
    vertices_from_b2,
};
pub use hochster::{hochster_beta, hochster_beta_with, hochster_table, hochster_table_both, reduced_homology, Coefficients, LARGE_PRIME};
pub use sweep::{betti_bruteforce, betti_sweep, betti_sweep_with, BettiVector, SweepOptions};
pub use table::{graded_table, GradedBettiTable};
