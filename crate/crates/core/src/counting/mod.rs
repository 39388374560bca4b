//! Exact representation counts: theta tables, divisor formulas and the count series
//! `N_t(Q, -k)`.

pub mod divisor;
pub mod ntt;
pub mod series;
pub mod theta;

pub use divisor::{DivisorRule, PolySieve};
pub use series::{count_series, CountPlan, CountSeries, Provider};
pub use theta::{g_order, norm_counts, theta_table, RepresentationTable, DEFAULT_BUDGET};

/// `r_4(n)`, the number of representations of `n` as a sum of four squares.
pub fn r4(n: u64) -> u128 {
    DivisorRule::FourSquares.value(n as i128).expect("64-bit arguments do not overflow")
}
