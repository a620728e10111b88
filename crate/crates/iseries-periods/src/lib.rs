//! Regularized I-series and main periods of Laurent mirrors, and the check
//! that the two agree.

mod check;
mod error;
mod iseries;
mod projective;
mod series;
mod spec;

pub use check::{
    build_mirror, check_period_condition, compare_with_iseries, default_terms, iseries, main_period, Method,
    PeriodReport, Verdict,
};
pub use error::{PeriodError, Result};
pub use iseries::{
    calibrate, calibration, grassmannian_iseries, grassmannian_iseries_with, harmonic_gamma,
    projective_ci_iseries, CalibrationPoint, CalibrationReport, Reading,
};
pub use projective::projective_ci_lg;
pub use series::Series;
pub use spec::{Ambient, ModelSpec};
