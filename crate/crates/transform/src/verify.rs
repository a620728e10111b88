//! Checks of the triplet conditions each lemma relies on.

use std::collections::BTreeSet;

use lgm_arith::{LaurentPolynomial, RationalFunction, VariableSet};
use lgm_quiver::{
    build_mwgamma_weighting, build_quiver, var_name, BlockHistory, Triplet, EXTREMAL_VAR,
};
use serde::Serialize;

use crate::error::Result;

/// Which set of conditions to check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "stage")]
pub enum Stage {
    /// The starting triplet, before any block is removed.
    Initial,
    /// Before a horizontal block of size at least 2 at row `r = gamma`.
    HorizontalWide { history: BlockHistory, r: usize },
    /// Before a basic horizontal block at row `r`, or after any horizontal step.
    HorizontalBasic { history: BlockHistory, r: usize },
    /// Before a mixed block at row `r = gamma`.
    Mixed { history: BlockHistory, r: usize },
    /// Before the first basic vertical block.
    Vertical { history: BlockHistory },
    /// After the last block.
    Final,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub stage: Stage,
    pub violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

struct Collector {
    violations: Vec<Violation>,
}

impl Collector {
    fn check(&mut self, ok: bool, condition: &str, detail: impl FnOnce() -> String) {
        if !ok {
            self.violations.push(Violation {
                condition: condition.to_string(),
                detail: detail(),
            });
        }
    }
}

/// `a_{i,j}` over `vars`, with `a_{k,2} = 1`.
fn cell_var(t: &Triplet, i: usize, j: usize) -> Result<RationalFunction> {
    if (i, j) == (t.k(), 2) {
        Ok(RationalFunction::one(t.vars()))
    } else {
        Ok(RationalFunction::var(t.vars(), &var_name(i, j))?)
    }
}

fn has_var(t: &Triplet, i: usize, j: usize) -> bool {
    (i, j) == (t.k(), 2) || t.vars().contains(&var_name(i, j))
}

/// `V = {a_{i,1}} + {a_{i,2} : i in [1,gamma-1] \ M} + {a_{i,2} : i in [r,k-1]}`.
fn expected_vars(k: usize, h: &BlockHistory, r: usize) -> BTreeSet<String> {
    let mut v: BTreeSet<String> = (1..=k).map(|i| var_name(i, 1)).collect();
    v.extend(
        (1..h.gamma)
            .filter(|i| !h.m.contains(i))
            .map(|i| var_name(i, 2)),
    );
    v.extend((r..k).map(|i| var_name(i, 2)));
    v
}

fn names(vars: &VariableSet) -> BTreeSet<String> {
    vars.names().iter().cloned().collect()
}

fn var_indices(vars: &VariableSet, pred: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    vars.names()
        .iter()
        .enumerate()
        .filter_map(|(idx, n)| {
            lgm_quiver::parse_var_name(n)
                .filter(|&(i, j)| pred(i, j))
                .map(|_| idx)
        })
        .collect()
}

fn max_total_degree(p: &LaurentPolynomial, idx: &[usize]) -> Option<i64> {
    p.terms()
        .map(|(m, _)| idx.iter().map(|&i| m.exps()[i] as i64).sum())
        .max()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Wide,
    Basic,
    Mixed,
    Vertical,
}

fn check_progress(
    t: &Triplet,
    h: &BlockHistory,
    r: usize,
    kind: Kind,
    c: &mut Collector,
) -> Result<()> {
    let k = t.k();
    let g = h.gamma;
    if let Err(e) = h.validate(r) {
        c.check(false, "history", || e);
        return Ok(());
    }
    if r > k || (kind == Kind::Vertical && r != k) {
        c.check(false, "row", || format!("row {r} for k={k}"));
        return Ok(());
    }
    if matches!(kind, Kind::Wide | Kind::Mixed) && g != r {
        c.check(false, "row", || format!("gamma={g} differs from r={r}"));
        return Ok(());
    }
    let want = expected_vars(k, h, r);
    let have = names(t.vars());
    c.check(want == have, "variables", || {
        format!("expected {want:?}, found {have:?}")
    });
    if want != have {
        return Ok(());
    }

    if kind == Kind::Vertical {
        c.check(t.quiver().vertical_arrows().next().is_none(), "(i)", || {
            "vertical arrows remain".into()
        });
    } else {
        c.check(!t.quiver().has_vertical_head_in_rows(1, r), "(i)", || {
            format!("a vertical arrow ends in rows 1..{r}")
        });
    }
    c.check(t.r(k, 2).is_one(), "(ii)", || format!("R(k,2) = {}", t.r(k, 2)));
    for i in r..=k {
        for j in 1..=2 {
            if (i, j) == (k, 2) {
                continue;
            }
            let ok = t.r(i, j).equals(&cell_var(t, i, j)?)?;
            c.check(ok, "(iii)", || format!("R({i},{j}) = {}", t.r(i, j)));
        }
    }

    for i in 1..g {
        let c1 = if h.w.contains(&i) {
            t.r(i, 1).clone()
        } else {
            t.r(i, 1).div(&cell_var(t, i, 1)?)?
        };
        let c2 = if h.m.contains(&i) {
            let wi = h.w_of(i).expect("validated history");
            if !has_var(t, i + 1, 2) {
                c.check(false, "(vii)", || format!("a_{{{},2}} is missing", i + 1));
                continue;
            }
            t.r(i, 2)
                .mul(&cell_var(t, wi, 1)?)?
                .div(&cell_var(t, i + 1, 2)?)?
        } else {
            t.r(i, 2).div(&cell_var(t, i, 2)?)?
        };
        c.check(c1.equals(&c2)?, "(iv)-(vii)", || {
            format!("row {i}: column 1 gives {c1}, column 2 gives {c2}")
        });
    }

    let vars = t.vars();
    let mut partial = cell_var(t, r, 1)?;
    let mut prod = cell_var(t, r, 2)?;
    for i in (g..r).rev() {
        let ai = cell_var(t, i, 1)?;
        partial = partial.add(&ai)?;
        prod = prod.mul(&partial)?.div(&ai)?;
        c.check(t.r(i, 1).equals(&partial)?, "(viii)", || {
            format!("R({i},1) = {}", t.r(i, 1))
        });
        c.check(t.r(i, 2).equals(&prod)?, "(ix)", || {
            format!("R({i},2) = {}, expected {prod}", t.r(i, 2))
        });
    }

    let top = t.r(k, 3);
    let Some(p) = top.to_laurent() else {
        c.check(false, "(x)", || format!("R(k,3) = {top} is not Laurent"));
        return Ok(());
    };
    if kind != Kind::Vertical {
        let later = var_indices(vars, |i, _| i > r);
        c.check(
            later.iter().all(|&i| p.terms().all(|(m, _)| m.exps()[i] == 0)),
            "(x)",
            || format!("R(k,3) depends on rows after {r}"),
        );
        for j in 1..=2 {
            if let Some(idx) = vars.position(&var_name(r, j)) {
                let ok = p.terms().all(|(m, _)| m.exps()[idx] >= 0);
                c.check(ok, "(x)", || {
                    format!("R(k,3) has negative degree in a_{{{r},{j}}}")
                });
            }
        }
    }
    let col2_bound = match kind {
        Kind::Wide | Kind::Mixed => Some(r),
        Kind::Basic => Some(g - 1),
        Kind::Vertical => None,
    };
    if let Some(bound) = col2_bound {
        let idx = var_indices(vars, |i, j| j == 2 && i >= 1 && i <= bound && !h.m.contains(&i));
        let deg = max_total_degree(&p, &idx).unwrap_or(0);
        c.check(deg <= 0, "(xi)", || {
            format!("total degree {deg} in column 2 up to row {bound}")
        });
    }
    match kind {
        Kind::Wide | Kind::Basic => {
            let lam = build_mwgamma_weighting(h, r, k)?;
            let w = lam.vector(vars);
            let degs = p.weighted_degrees(&w);
            c.check(degs.iter().all(|&d| d == 1), "(xii)", || {
                format!("weighted degrees {degs:?}, expected all 1")
            });
        }
        Kind::Vertical => {
            let lam = build_mwgamma_weighting(h, k, k)?;
            let degs = p.weighted_degrees(&lam.vector(vars));
            c.check(degs.iter().all(|&d| d >= 0), "(x)", || {
                format!("weighted degrees {degs:?}, expected nonnegative")
            });
        }
        Kind::Mixed => {}
    }
    Ok(())
}

fn check_initial(t: &Triplet, c: &mut Collector) -> Result<()> {
    let k = t.k();
    let full = build_quiver(k)?;
    c.check(t.quiver() == &full, "quiver", || "arrows already removed".into());
    let init = Triplet::initial(k)?;
    c.check(names(t.vars()) == names(init.vars()), "variables", || {
        format!("found {}", t.vars())
    });
    if names(t.vars()) != names(init.vars()) {
        return Ok(());
    }
    c.check(t.r(k, 2).is_one(), "R(k,2)", || format!("R(k,2) = {}", t.r(k, 2)));
    let a = RationalFunction::var(t.vars(), EXTREMAL_VAR)?;
    c.check(t.r(0, 1).equals(&a)?, "R(0,1)", || format!("R(0,1) = {}", t.r(0, 1)));
    c.check(t.r(k, 3).equals(&a)?, "R(k,3)", || format!("R(k,3) = {}", t.r(k, 3)));
    for i in 1..=k {
        for j in 1..=2 {
            if (i, j) == (k, 2) {
                continue;
            }
            let ok = t.r(i, j).equals(&cell_var(t, i, j)?)?;
            c.check(ok, "R(i,j)", || format!("R({i},{j}) = {}", t.r(i, j)));
        }
    }
    Ok(())
}

fn check_final(t: &Triplet, c: &mut Collector) -> Result<()> {
    let k = t.k();
    c.check(t.r(k, 2).is_one(), "R(k,2)", || format!("R(k,2) = {}", t.r(k, 2)));
    if t.quiver().arrows().is_empty() {
        return Ok(());
    }
    let laurent = t.superpotential()?.is_laurent();
    c.check(laurent, "laurent", || "F is not a Laurent polynomial".into());
    Ok(())
}

/// Evaluates the conditions of `stage` on `t`.
pub fn verify_triplet_conditions(t: &Triplet, stage: &Stage) -> Result<VerificationReport> {
    let mut c = Collector {
        violations: Vec::new(),
    };
    match stage {
        Stage::Initial => check_initial(t, &mut c)?,
        Stage::HorizontalWide { history, r } => {
            check_progress(t, history, *r, Kind::Wide, &mut c)?
        }
        Stage::HorizontalBasic { history, r } => {
            check_progress(t, history, *r, Kind::Basic, &mut c)?
        }
        Stage::Mixed { history, r } => check_progress(t, history, *r, Kind::Mixed, &mut c)?,
        Stage::Vertical { history } => {
            check_progress(t, history, t.k(), Kind::Vertical, &mut c)?
        }
        Stage::Final => check_final(t, &mut c)?,
    }
    Ok(VerificationReport {
        stage: stage.clone(),
        violations: c.violations,
    })
}
