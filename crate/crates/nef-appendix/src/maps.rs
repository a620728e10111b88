//! Birational changes of torus coordinates, and the chain relating the
//! cubic-section mirror from the torus chart to the block construction.

use lgm_arith::{Bindings, LaurentPolynomial, RationalFunction, VariableSet};

use crate::chart::run_appendix;
use crate::error::{AppendixError, Result};

/// Binds every variable of `vars` to itself over `out`.
pub fn identity_bindings(vars: &VariableSet, out: &VariableSet) -> Result<Bindings> {
    let mut b = Bindings::new();
    for name in vars.names() {
        b.insert(name.clone(), RationalFunction::var(out, name)?);
    }
    Ok(b)
}

/// Pulls `f` back along `bindings` (variables without a binding are kept),
/// failing if the result is not Laurent.
pub fn apply_birational_map(
    f: &LaurentPolynomial,
    bindings: &Bindings,
    out: &VariableSet,
) -> Result<LaurentPolynomial> {
    let g = RationalFunction::from_laurent(f.clone()).substitute(bindings, out)?;
    g.to_laurent()
        .ok_or_else(|| AppendixError::NotLaurent(g.to_string()))
}

/// Each stage of the cubic-section comparison for k = 2.
#[derive(Clone, Debug)]
pub struct CubicChain {
    /// The torus-chart mirror in `y_{1,2}, y_{2,2}, y_{2,3}`.
    pub psi: LaurentPolynomial,
    /// After `y_{2,3} -> (y_{1,2} + y_{2,2}) y_{2,3}`.
    pub g: LaurentPolynomial,
    /// After `y_{1,2} = a_{2,1}`, `y_{2,2} = a_{2,1}^2/a_{1,1}`, `y_{2,3} = a_{1,2}`.
    pub relabeled: LaurentPolynomial,
    /// After `a_{i,j} -> a_{i,j} / (1 + a_{2,1}/a_{1,1})`.
    pub h: LaurentPolynomial,
}

pub fn cubic_chain() -> Result<CubicChain> {
    let psi = run_appendix(2, &[3], None)?.result;
    let yv = psi.vars().clone();
    let y = |n: &str| RationalFunction::var(&yv, n);

    let mut phi1 = identity_bindings(&yv, &yv)?;
    phi1.insert("y_2_3".into(), y("y_1_2")?.add(&y("y_2_2")?)?.mul(&y("y_2_3")?)?);
    let g = apply_birational_map(&psi, &phi1, &yv)?;

    let av = VariableSet::new(["a_1_1", "a_1_2", "a_2_1"])?;
    let a = |n: &str| RationalFunction::var(&av, n);
    let mut relabel = Bindings::new();
    relabel.insert("y_1_2".into(), a("a_2_1")?);
    relabel.insert("y_2_2".into(), a("a_2_1")?.pow(2)?.div(&a("a_1_1")?)?);
    relabel.insert("y_2_3".into(), a("a_1_2")?);
    let relabeled = apply_birational_map(&g, &relabel, &av)?;

    let scale = RationalFunction::one(&av).add(&a("a_2_1")?.div(&a("a_1_1")?)?)?;
    let mut phi2 = Bindings::new();
    for name in av.names() {
        phi2.insert(name.clone(), a(name)?.div(&scale)?);
    }
    let h = apply_birational_map(&relabeled, &phi2, &av)?;
    Ok(CubicChain {
        psi,
        g,
        relabeled,
        h,
    })
}
