//! Runs the block eliminations for a complete intersection end to end.

use lgm_arith::LaurentPolynomial;
use lgm_quiver::{select_blocks, BlockHistory, BlockKind, SortedDegrees, Triplet};
use serde::Serialize;

use crate::error::{Result, TransformError};
use crate::lemmas::{
    apply_extremal, apply_horizontal_basic, apply_horizontal_start, apply_horizontal_wide,
    apply_mixed, apply_mixed_start, apply_vertical, Options,
};
use crate::step::TransformStep;
use crate::verify::{verify_triplet_conditions, Stage, VerificationReport};

#[derive(Clone, Debug, Serialize)]
pub struct PipelineTrace {
    pub k: usize,
    pub degrees: Vec<usize>,
    pub sorted: SortedDegrees,
    pub steps: Vec<TransformStep>,
    #[serde(serialize_with = "as_text")]
    pub result: LaurentPolynomial,
    /// Post-conditions checked after the last step.
    pub reports: Vec<VerificationReport>,
}

fn as_text<S: serde::Serializer>(
    p: &LaurentPolynomial,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_text())
}

impl PipelineTrace {
    pub fn verified(&self) -> bool {
        self.steps.iter().all(|s| s.checks.all()) && self.reports.iter().all(|r| r.is_ok())
    }
}

/// Removes one block per degree from the quiver of G(2, k+2) and returns the
/// resulting Laurent polynomial with every intermediate step.
pub fn run_main_theorem(k: usize, degrees: &[usize], opts: Options) -> Result<PipelineTrace> {
    if opts.deform {
        return Err(TransformError::InvalidInput(
            "the full run is only defined without deformation".into(),
        ));
    }
    let selection = select_blocks(k, degrees)?;
    let mut t = Triplet::initial(k)?;
    let mut steps: Vec<TransformStep> = Vec::new();
    let mut history = BlockHistory::empty();
    let mut r = 0;
    for (idx, block) in selection.blocks.iter().enumerate() {
        let step = match (idx, block.kind) {
            (0, BlockKind::Horizontal) => apply_horizontal_start(&t, block, opts)?,
            (0, BlockKind::Mixed) => apply_mixed_start(&t, block, opts)?,
            (_, BlockKind::Horizontal) if block.size >= 2 => {
                apply_horizontal_wide(&t, block, &history, r, opts)?
            }
            (_, BlockKind::Horizontal) => apply_horizontal_basic(&t, block, &history, r, opts)?,
            (_, BlockKind::Mixed) => apply_mixed(&t, block, &history, r, opts)?,
            (_, BlockKind::Vertical) => apply_vertical(&t, block, &history, opts)?,
        };
        if let Some(h) = &step.history {
            history = h.clone();
        }
        r = step.row;
        t = step.after.clone();
        steps.push(step);
    }

    let mut reports = Vec::new();
    if opts.verify {
        if let Some(last) = steps.last() {
            if last.block.kind == BlockKind::Horizontal {
                reports.push(verify_triplet_conditions(
                    &t,
                    &Stage::HorizontalBasic {
                        history: history.clone(),
                        r,
                    },
                )?);
            }
        }
        reports.push(verify_triplet_conditions(&t, &Stage::Final)?);
        if let Some(bad) = reports.iter().find(|r| !r.is_ok()) {
            let v = bad.first().expect("failed report has a violation");
            return Err(TransformError::Soundness(format!(
                "final triplet fails {}: {}",
                v.condition, v.detail
            )));
        }
    }

    let result = match steps.last() {
        Some(s) => s.mirror.clone().expect("undeformed steps carry a mirror"),
        None => t
            .superpotential_laurent()?
            .ok_or_else(|| TransformError::NotLaurent("initial function".into()))?,
    };
    let expected_vars = 2 * k - degrees.len();
    if result.vars().len() != expected_vars {
        return Err(TransformError::Soundness(format!(
            "{} variables remain, expected {expected_vars}",
            result.vars().len()
        )));
    }
    Ok(PipelineTrace {
        k,
        degrees: degrees.to_vec(),
        sorted: selection.sorted,
        steps,
        result,
        reports,
    })
}

/// Two-step route for two hyperplanes in G(2,4): the first hyperplane block,
/// then the arrow `(2,2)->(2,3)` on its own.
pub fn run_extremal_variant(k: usize, opts: Options) -> Result<PipelineTrace> {
    let selection = select_blocks(k, &[1])?;
    let t = Triplet::initial(k)?;
    let first = apply_horizontal_start(&t, &selection.blocks[0], opts)?;
    let second = apply_extremal(&first.after, opts)?;
    let result = second
        .mirror
        .clone()
        .ok_or_else(|| TransformError::InvalidInput("deformed run has no mirror".into()))?;
    let reports = if opts.verify {
        vec![verify_triplet_conditions(&second.after, &Stage::Final)?]
    } else {
        Vec::new()
    };
    Ok(PipelineTrace {
        k,
        degrees: vec![1, 1],
        sorted: selection.sorted,
        steps: vec![first, second],
        result,
        reports,
    })
}
