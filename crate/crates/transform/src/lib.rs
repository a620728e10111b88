//! Block-by-block elimination turning the ladder quiver of G(2, k+2) into a
//! Laurent polynomial for a complete intersection in it.

mod closed_form;
mod engine;
mod error;
mod lemmas;
mod pipeline;
mod step;
mod verify;

pub use closed_form::{closed_form, ClosedFormMode};
pub use engine::DEFORMATION_VAR;
pub use error::{Result, TransformError};
pub use lemmas::{
    apply_extremal, apply_horizontal_basic, apply_horizontal_start, apply_horizontal_wide,
    apply_mixed, apply_mixed_start, apply_vertical, Options,
};
pub use pipeline::{run_main_theorem, run_extremal_variant, PipelineTrace};
pub use step::{Lemma, Recipe, StepChecks, TransformStep};
pub use verify::{verify_triplet_conditions, Stage, VerificationReport, Violation};
