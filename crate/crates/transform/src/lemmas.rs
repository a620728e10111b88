//! One function per kind of block elimination.

use lgm_arith::{Bindings, RationalFunction};
use lgm_quiver::{
    build_mwgamma_weighting, history_after_start, var_name, Block, BlockHistory, BlockKind,
    Triplet, WeightFunction, EXTREMAL_VAR,
};

use crate::engine::{eliminate, finish, one_minus_u, output_vars, RecipeSpec, ShiftMode};
use crate::error::{inapplicable, Result};
use crate::step::{Lemma, TransformStep};
use crate::verify::{verify_triplet_conditions, Stage};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    /// Check the lemma's hypotheses on the input triplet.
    pub verify: bool,
    /// Solve `F_B = 1 - U` instead of `F_B = 1`, adding the variable `U`.
    pub deform: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            verify: true,
            deform: false,
        }
    }
}

fn require(lemma: Lemma, t: &Triplet, stage: Stage, opts: Options) -> Result<()> {
    if !opts.verify {
        return Ok(());
    }
    let report = verify_triplet_conditions(t, &stage)?;
    match report.first() {
        None => Ok(()),
        Some(v) => Err(inapplicable(
            lemma,
            format!("condition {} fails: {}", v.condition, v.detail),
        )),
    }
}

fn expect_block(lemma: Lemma, block: &Block, want: &Block) -> Result<()> {
    if block != want {
        return Err(inapplicable(
            lemma,
            format!(
                "expected the {:?} block at row {}, got {:?} at row {}",
                want.kind, want.first_row, block.kind, block.first_row
            ),
        ));
    }
    Ok(())
}

fn var(t: &Triplet, name: &str) -> Result<RationalFunction> {
    Ok(RationalFunction::var(t.vars(), name)?)
}

/// First horizontal block `(0,1)->...->(s,1)` on the starting triplet.
pub fn apply_horizontal_start(t: &Triplet, block: &Block, opts: Options) -> Result<TransformStep> {
    let lemma = Lemma::HorizontalStart;
    let k = t.k();
    let s = block.size;
    if block.kind != BlockKind::Horizontal {
        return Err(inapplicable(lemma, "not a horizontal block"));
    }
    expect_block(lemma, block, &Block::horizontal(k, 0, s)?)?;
    require(lemma, t, Stage::Initial, opts)?;
    let history = Some(history_after_start(s));
    if s == 1 {
        let out = output_vars(t.vars(), EXTREMAL_VAR, opts.deform);
        let a11 = RationalFunction::var(&out, &var_name(1, 1))?;
        let mut b = Bindings::new();
        b.insert(
            EXTREMAL_VAR.to_string(),
            a11.div(&one_minus_u(&out, opts.deform)?)?,
        );
        return finish(lemma, t, block, EXTREMAL_VAR, None, b, out, history, 1, opts.deform);
    }
    let mut weights = WeightFunction::new();
    for i in 1..=s {
        for j in 1..=2 {
            let name = var_name(i, j);
            if t.vars().contains(&name) {
                weights.set(name, (s - i) as i64);
            }
        }
    }
    weights.set(EXTREMAL_VAR, s as i64);
    let spec = RecipeSpec {
        weight_var: var_name(s - 1, 1),
        weights,
        main_var: EXTREMAL_VAR.to_string(),
        mode: ShiftMode::Shift,
    };
    let e = eliminate(lemma, t, block, spec, opts.deform)?;
    finish(
        lemma,
        t,
        block,
        EXTREMAL_VAR,
        Some(e.recipe),
        e.bindings,
        e.out,
        history,
        s,
        opts.deform,
    )
}

/// A mixed block containing every arrow except `(k,2)->(k,3)`.
pub fn apply_mixed_start(t: &Triplet, block: &Block, opts: Options) -> Result<TransformStep> {
    let lemma = Lemma::MixedStart;
    let k = t.k();
    expect_block(lemma, block, &Block::mixed(k, 0)?)?;
    require(lemma, t, Stage::Initial, opts)?;
    let mut weights = WeightFunction::new();
    for i in 1..=k {
        for j in 1..=2 {
            let name = var_name(i, j);
            if t.vars().contains(&name) {
                weights.set(name, (k + 2) as i64 - (i + j) as i64);
            }
        }
    }
    weights.set(EXTREMAL_VAR, (k + 1) as i64);
    let spec = RecipeSpec {
        weight_var: var_name(k - 1, 2),
        weights,
        main_var: EXTREMAL_VAR.to_string(),
        mode: ShiftMode::Shift,
    };
    let e = eliminate(lemma, t, block, spec, opts.deform)?;
    finish(
        lemma,
        t,
        block,
        EXTREMAL_VAR,
        Some(e.recipe),
        e.bindings,
        e.out,
        None,
        k,
        opts.deform,
    )
}

/// A horizontal block of size at least 2 at row `r = gamma`.
pub fn apply_horizontal_wide(
    t: &Triplet,
    block: &Block,
    history: &BlockHistory,
    r: usize,
    opts: Options,
) -> Result<TransformStep> {
    let lemma = Lemma::HorizontalWide;
    let k = t.k();
    if block.kind != BlockKind::Horizontal || block.size < 2 {
        return Err(inapplicable(lemma, "needs a horizontal block of size at least 2"));
    }
    expect_block(lemma, block, &Block::horizontal(k, r, block.size)?)?;
    require(
        lemma,
        t,
        Stage::HorizontalWide {
            history: history.clone(),
            r,
        },
        opts,
    )?;
    let s = block.last_row;
    let mut weights = WeightFunction::new();
    for name in t.vars().names() {
        let w = match lgm_quiver::parse_var_name(name) {
            Some((i, _)) if i >= r && i <= s => (s - i) as i64,
            _ => 0,
        };
        weights.set(name.clone(), w);
    }
    let main = var_name(r, 2);
    let spec = RecipeSpec {
        weight_var: var_name(s - 1, 1),
        weights,
        main_var: main.clone(),
        mode: ShiftMode::Shift,
    };
    let e = eliminate(lemma, t, block, spec, opts.deform)?;
    let mut next = history.clone();
    next.m.insert(r);
    next.w.insert(s - 1);
    next.gamma = s;
    finish(
        lemma,
        t,
        block,
        &main,
        Some(e.recipe),
        e.bindings,
        e.out,
        Some(next),
        s,
        opts.deform,
    )
}

/// A basic horizontal block `(r,j)->(r+1,j)`.
pub fn apply_horizontal_basic(
    t: &Triplet,
    block: &Block,
    history: &BlockHistory,
    r: usize,
    opts: Options,
) -> Result<TransformStep> {
    let lemma = Lemma::HorizontalBasic;
    let k = t.k();
    if r < 1 || r >= k {
        return Err(inapplicable(lemma, format!("row {r} for k={k}")));
    }
    expect_block(lemma, block, &Block::horizontal(k, r, 1)?)?;
    require(
        lemma,
        t,
        Stage::HorizontalBasic {
            history: history.clone(),
            r,
        },
        opts,
    )?;
    let main = var_name(r, 2);
    let out = output_vars(t.vars(), &main, opts.deform);
    let damp = one_minus_u(&out, opts.deform)?;
    let ar = RationalFunction::var(&out, &var_name(r, 1))?;
    let sum = ar.add(&RationalFunction::var(&out, &var_name(r + 1, 1))?)?;
    let next2 = if r + 1 == k {
        RationalFunction::one(&out)
    } else {
        RationalFunction::var(&out, &var_name(r + 1, 2))?
    };
    let mut b = Bindings::new();
    b.insert(var_name(r, 1), sum.div(&damp)?);
    b.insert(main.clone(), next2.mul(&sum)?.div(&damp)?.div(&ar)?);
    finish(
        lemma,
        t,
        block,
        &main,
        None,
        b,
        out,
        Some(history.clone()),
        r + 1,
        opts.deform,
    )
}

/// A mixed block at row `r = gamma`.
pub fn apply_mixed(
    t: &Triplet,
    block: &Block,
    history: &BlockHistory,
    r: usize,
    opts: Options,
) -> Result<TransformStep> {
    let lemma = Lemma::Mixed;
    let k = t.k();
    if r < 1 {
        return Err(inapplicable(lemma, "the first mixed block uses the start lemma"));
    }
    expect_block(lemma, block, &Block::mixed(k, r)?)?;
    require(
        lemma,
        t,
        Stage::Mixed {
            history: history.clone(),
            r,
        },
        opts,
    )?;
    let mut weights = WeightFunction::new();
    for name in t.vars().names() {
        if let Some((i, j)) = lgm_quiver::parse_var_name(name) {
            let w = if i >= r {
                (k + 2) as i64 - (i + j) as i64
            } else if j == 2 && !history.m.contains(&i) {
                -1
            } else {
                0
            };
            weights.set(name.clone(), w);
        }
    }
    let main = var_name(r, 1);
    let spec = RecipeSpec {
        weight_var: var_name(k, 1),
        weights,
        main_var: main.clone(),
        mode: ShiftMode::Shift,
    };
    let e = eliminate(lemma, t, block, spec, opts.deform)?;
    finish(
        lemma,
        t,
        block,
        &main,
        Some(e.recipe),
        e.bindings,
        e.out,
        None,
        k,
        opts.deform,
    )
}

/// The first basic vertical block, once every vertical arrow is gone.
pub fn apply_vertical(
    t: &Triplet,
    block: &Block,
    history: &BlockHistory,
    opts: Options,
) -> Result<TransformStep> {
    let lemma = Lemma::Vertical;
    let k = t.k();
    expect_block(lemma, block, &Block::vertical(k, 1)?)?;
    require(
        lemma,
        t,
        Stage::Vertical {
            history: history.clone(),
        },
        opts,
    )?;
    let g = history.gamma;
    let u = if g < k {
        k
    } else {
        *history
            .w
            .iter()
            .next()
            .ok_or_else(|| inapplicable(lemma, "gamma = k needs a nonempty W"))?
    };
    let weights = build_mwgamma_weighting(history, k, k)?;
    let main = var_name(g, 1);
    let spec = RecipeSpec {
        weight_var: var_name(u, 1),
        weights,
        main_var: main.clone(),
        mode: ShiftMode::ShiftAndScale,
    };
    let e = eliminate(lemma, t, block, spec, opts.deform)?;
    finish(
        lemma,
        t,
        block,
        &main,
        Some(e.recipe),
        e.bindings,
        e.out,
        None,
        k,
        opts.deform,
    )
}

/// The arrow `(k,2)->(k,3)` alone, when `R(k,3)` is a single variable.
pub fn apply_extremal(t: &Triplet, opts: Options) -> Result<TransformStep> {
    let lemma = Lemma::Extremal;
    let k = t.k();
    let block = Block::vertical(k, 2)?;
    if !t.r(k, 2).is_one() {
        return Err(inapplicable(lemma, "R(k,2) is not 1"));
    }
    let x = t
        .vars()
        .names()
        .iter()
        .find(|n| var(t, n).map(|v| v == *t.r(k, 3)).unwrap_or(false))
        .cloned()
        .ok_or_else(|| inapplicable(lemma, format!("R(k,3) = {} is not a variable", t.r(k, 3))))?;
    let out = output_vars(t.vars(), &x, opts.deform);
    let mut b = Bindings::new();
    b.insert(x.clone(), one_minus_u(&out, opts.deform)?);
    let row = k;
    finish(lemma, t, &block, &x, None, b, out, None, row, opts.deform)
}
