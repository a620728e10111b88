//! The weighting / shift / elimination recipe shared by the block lemmas,
//! and the bookkeeping that turns bindings into a checked step.

use lgm_arith::{Bindings, RationalFunction, VariableSet};
use lgm_quiver::{Block, BlockHistory, Triplet, WeightFunction};

use crate::error::{inapplicable, Result, TransformError};
use crate::step::{Lemma, Recipe, StepChecks, TransformStep};

/// Name of the deformation parameter.
pub const DEFORMATION_VAR: &str = "U";

/// Stand-in for `1/(1-U)` while checking a deformed step.
const DEFORMATION_INVERSE_VAR: &str = "L_inv_one_minus_u";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ShiftMode {
    /// `w'' = (1-U) w' - P'/M'`, main variable `N / w''`.
    Shift,
    /// `w'' = ((1-U) w' - P'/M') / N`, main variable `1 / w''`.
    ShiftAndScale,
}

pub(crate) struct RecipeSpec {
    pub weight_var: String,
    pub weights: WeightFunction,
    pub main_var: String,
    pub mode: ShiftMode,
}

/// `t` with `x` set to 1, if `t` does not depend on `x`.
pub(crate) fn free_of(t: &RationalFunction, x: &str) -> Result<Option<RationalFunction>> {
    if !t.depends_on(x) {
        return Ok(Some(t.clone()));
    }
    let mut b = Bindings::new();
    b.insert(x.to_string(), RationalFunction::one(t.vars()));
    let t1 = t.substitute(&b, t.vars())?;
    if t1.equals(t)? {
        Ok(Some(t1))
    } else {
        Ok(None)
    }
}

/// Moves `t`, known not to depend on `dropped`, over `out`.
pub(crate) fn transport(
    t: &RationalFunction,
    dropped: &str,
    out: &VariableSet,
) -> Result<RationalFunction> {
    let mut b = Bindings::new();
    b.insert(dropped.to_string(), RationalFunction::one(out));
    Ok(t.substitute(&b, out)?)
}

/// Output variables: the old ones without `main`, plus `U` when deformed.
pub(crate) fn output_vars(vars: &VariableSet, main: &str, deform: bool) -> VariableSet {
    let v = vars.without(&[main]);
    if deform && !v.contains(DEFORMATION_VAR) {
        v.extended([DEFORMATION_VAR])
    } else {
        v
    }
}

/// `1 - U` over `vars`, or 1.
pub(crate) fn one_minus_u(vars: &VariableSet, deform: bool) -> Result<RationalFunction> {
    let one = RationalFunction::one(vars);
    if deform {
        Ok(one.sub(&RationalFunction::var(vars, DEFORMATION_VAR)?)?)
    } else {
        Ok(one)
    }
}

pub(crate) struct Elimination {
    pub recipe: Recipe,
    pub bindings: Bindings,
    pub out: VariableSet,
}

/// Runs the three-phase recipe on the block equation of `block`.
pub(crate) fn eliminate(
    lemma: Lemma,
    t: &Triplet,
    block: &Block,
    spec: RecipeSpec,
    deform: bool,
) -> Result<Elimination> {
    let vars = t.vars().clone();
    let w = spec.weight_var.as_str();
    let m = spec.main_var.as_str();
    for name in [w, m] {
        if !vars.contains(name) {
            return Err(inapplicable(lemma, format!("variable {name} is missing")));
        }
    }
    let wt = |x: &str| spec.weights.get(x).unwrap_or(0);
    let wv = RationalFunction::var(&vars, w)?;

    let mut weighting = Bindings::new();
    for x in vars.names() {
        let xv = RationalFunction::var(&vars, x)?;
        let image = if x == w { xv } else { xv.mul(&wv.pow(wt(x))?)? };
        weighting.insert(x.clone(), image);
    }

    let zero = RationalFunction::zero(&vars);
    let (mut n, mut q, mut delta) = (zero.clone(), zero.clone(), zero);
    for a in &block.arrows {
        let ratio = t.ratio(a)?;
        let term = ratio.substitute(&weighting, &vars)?.mul(&wv)?;
        let term = free_of(&term, w)?.ok_or_else(|| {
            inapplicable(lemma, format!("term of {a} does not have weight -1"))
        })?;
        match free_of(&term, m)? {
            Some(rest) => {
                if free_of(&ratio, w)?.is_none() {
                    delta = delta.add(&rest)?;
                }
                q = q.add(&rest)?;
            }
            None => {
                let coeff = term.mul(&RationalFunction::var(&vars, m)?)?;
                let coeff = free_of(&coeff, m)?.ok_or_else(|| {
                    inapplicable(lemma, format!("term of {a} is not linear in 1/{m}"))
                })?;
                n = n.add(&coeff)?;
            }
        }
    }
    if n.is_zero() {
        return Err(inapplicable(lemma, format!("{m} does not occur in the block")));
    }

    let out = output_vars(&vars, m, deform);
    let n = transport(&n, m, &out)?;
    let q = transport(&q, m, &out)?;
    let delta = transport(&delta, m, &out)?;
    let w2 = RationalFunction::var(&out, w)?;
    let damp = one_minus_u(&out, deform)?;
    let (big_w, main_prime) = match spec.mode {
        ShiftMode::Shift => (w2.add(&q)?.div(&damp)?, n.div(&w2)?),
        ShiftMode::ShiftAndScale => (
            w2.mul(&n)?.add(&q)?.div(&damp)?,
            w2.inv()?,
        ),
    };

    let mut bindings = Bindings::new();
    for x in vars.names() {
        let image = if x == w {
            big_w.clone()
        } else if x == m {
            main_prime.mul(&big_w.pow(wt(x))?)?
        } else {
            let e = wt(x);
            let xv = RationalFunction::var(&out, x)?;
            if e == 0 {
                xv
            } else {
                xv.mul(&big_w.pow(e)?)?
            }
        };
        bindings.insert(x.clone(), image);
    }
    Ok(Elimination {
        recipe: Recipe {
            weight_variable: spec.weight_var,
            weights: spec.weights,
            main_numerator: n,
            weight_terms: delta,
            shift: q,
        },
        bindings,
        out,
    })
}

/// Applies `bindings` to `t`, removes `block` and checks the step.
#[allow(clippy::too_many_arguments)]
pub(crate) fn finish(
    lemma: Lemma,
    t: &Triplet,
    block: &Block,
    main_variable: &str,
    recipe: Option<Recipe>,
    bindings: Bindings,
    out: VariableSet,
    history: Option<BlockHistory>,
    row: usize,
    deform: bool,
) -> Result<TransformStep> {
    let mut assignment = std::collections::BTreeMap::new();
    for (v, r) in t.assignment() {
        assignment.insert(*v, r.substitute(&bindings, &out)?);
    }
    let quiver = t.quiver().remove(&block.arrows)?;
    let after = Triplet::new(quiver, out.clone(), assignment)?;

    // With U = 1 - 1/L the factor 1/(1-U) becomes the monomial L, so the
    // identities below are checked without growing denominators.
    let (check_bindings, check_vars, damp) = if deform {
        let lvars = out.without(&[DEFORMATION_VAR]).extended([DEFORMATION_INVERSE_VAR]);
        let l = RationalFunction::var(&lvars, DEFORMATION_INVERSE_VAR)?;
        let mut to_l = Bindings::new();
        to_l.insert(
            DEFORMATION_VAR.to_string(),
            RationalFunction::one(&lvars).sub(&l.inv()?)?,
        );
        let mut b = Bindings::new();
        for (name, image) in &bindings {
            b.insert(name.clone(), image.substitute(&to_l, &lvars)?);
        }
        (b, lvars, l.inv()?)
    } else {
        (bindings.clone(), out.clone(), RationalFunction::one(&out))
    };

    let fb = t
        .assemble(block.arrows.iter())?
        .substitute(&check_bindings, &check_vars)?;
    let block_equation = fb.equals(&damp)?;

    let pulled = t.superpotential()?.substitute(&check_bindings, &check_vars)?;
    let rest_arrows = t.quiver().remove(&block.arrows)?;
    let mut rest = RationalFunction::zero(&check_vars);
    for a in rest_arrows.arrows() {
        rest = rest.add(&t.ratio(a)?.substitute(&check_bindings, &check_vars)?)?;
    }
    let total_shift = pulled.equals(&rest.add(&damp)?)?;
    let (laurent, mirror) = if deform {
        (true, None)
    } else {
        let mirror = rest.to_laurent();
        (mirror.is_some(), mirror)
    };
    let checks = StepChecks {
        block_equation,
        total_shift,
        laurent,
    };
    if !checks.all() {
        return Err(TransformError::Soundness(format!(
            "{lemma:?} on block at row {}: {checks:?}",
            block.first_row
        )));
    }
    Ok(TransformStep {
        lemma,
        block: block.clone(),
        main_variable: main_variable.to_string(),
        recipe,
        bindings,
        before: t.clone(),
        after,
        mirror,
        history,
        row,
        checks,
    })
}
