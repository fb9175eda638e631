//! Explicit bounds: Baker's bound for Mordell curves, Yu's p-adic and
//! Matveev's archimedean linear-form bounds, Weil heights, and the chain
//! of derived bounds on `n`, `l`, `m` and `log d` for a base `b`.
//!
//! Real-valued evaluators return `f64` (about 15.9 significant digits);
//! quantities that overflow `f64`, such as `(10b)^{10^5}`, are exact
//! [`BigUint`](num_bigint::BigUint)s compared at the exponent level.

mod chain;
mod height;
mod linear_forms;
mod log;

pub use chain::{
    baker_log_bound, baker_margin, bound_report, invert_n_log_n, log_d_bound, m_bound,
    max_curve_constant, n_bound_derived, theorem_exponent, BoundReport, CompactPower,
};
pub use height::{height_quadratic, height_rational};
pub use linear_forms::{
    matveev_lower, matveev_n_coefficient, yu_bound, yu_bound_log, yu_folded_coefficient,
    yu_folded_m_bound, yu_specialized, MatveevParams, YuParams, YU_FOLDED_CONSTANT,
};
pub use log::{ln_big, ln_fixed};
