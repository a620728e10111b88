//! One elimination step and the checks attached to it.

use std::collections::BTreeMap;

use lgm_arith::{Bindings, LaurentPolynomial, RationalFunction};
use lgm_quiver::{Block, BlockHistory, Triplet, WeightFunction};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    HorizontalStart,
    HorizontalWide,
    HorizontalBasic,
    MixedStart,
    Mixed,
    Vertical,
    /// The single arrow `(k,2)->(k,3)` used as a block on its own.
    Extremal,
}

/// Outcome of the symbolic checks made on a step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StepChecks {
    /// The block equation pulls back to `1` (or `1-U` when deformed).
    pub block_equation: bool,
    /// The pullback of the full function equals the remaining one plus 1.
    pub total_shift: bool,
    /// The remaining function is a Laurent polynomial.
    pub laurent: bool,
}

impl StepChecks {
    pub fn all(&self) -> bool {
        self.block_equation && self.total_shift && self.laurent
    }
}

/// Intermediate quantities of the weighting recipe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recipe {
    pub weight_variable: String,
    pub weights: WeightFunction,
    /// Coefficient `N` in `N / m'` of the block equation after weighting.
    pub main_numerator: RationalFunction,
    /// Block terms coming from arrows at the weight variable.
    pub weight_terms: RationalFunction,
    /// `P'/M'`: everything in the block equation except `N / m'`.
    pub shift: RationalFunction,
}

#[derive(Clone, Debug)]
pub struct TransformStep {
    pub lemma: Lemma,
    pub block: Block,
    pub main_variable: String,
    pub recipe: Option<Recipe>,
    /// Old variable name to its image over the new variables.
    pub bindings: Bindings,
    pub before: Triplet,
    pub after: Triplet,
    /// `F` of the remaining arrows after the step; `None` when deformed.
    pub mirror: Option<LaurentPolynomial>,
    pub history: Option<BlockHistory>,
    pub row: usize,
    pub checks: StepChecks,
}

impl TransformStep {
    pub fn weight_variable(&self) -> Option<&str> {
        self.recipe.as_ref().map(|r| r.weight_variable.as_str())
    }
}

impl Serialize for TransformStep {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let bindings: BTreeMap<&str, String> = self
            .bindings
            .iter()
            .map(|(k, v)| (k.as_str(), v.to_string()))
            .collect();
        let mut st = s.serialize_struct("TransformStep", 12)?;
        st.serialize_field("lemma", &self.lemma)?;
        st.serialize_field("block", &self.block)?;
        st.serialize_field("weight_variable", &self.weight_variable())?;
        st.serialize_field("main_variable", &self.main_variable)?;
        st.serialize_field(
            "weights",
            &self.recipe.as_ref().map(|r| &r.weights.weights),
        )?;
        st.serialize_field(
            "main_numerator",
            &self.recipe.as_ref().map(|r| r.main_numerator.to_string()),
        )?;
        st.serialize_field(
            "shift",
            &self.recipe.as_ref().map(|r| r.shift.to_string()),
        )?;
        st.serialize_field("bindings", &bindings)?;
        st.serialize_field("triplet", &self.after)?;
        st.serialize_field("mirror", &self.mirror.as_ref().map(|m| m.to_text()))?;
        st.serialize_field("history", &self.history)?;
        st.serialize_field("checks", &self.checks)?;
        st.end()
    }
}
