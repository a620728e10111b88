//! Block histories `(M, W, gamma)` and the weightings built from them.

use std::collections::{BTreeMap, BTreeSet};

use lgm_arith::{Monomial, VariableSet};
use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::triplet::var_name;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockHistory {
    pub m: BTreeSet<usize>,
    pub w: BTreeSet<usize>,
    pub gamma: usize,
}

impl BlockHistory {
    pub fn new<M, W>(m: M, w: W, gamma: usize) -> Self
    where
        M: IntoIterator<Item = usize>,
        W: IntoIterator<Item = usize>,
    {
        BlockHistory {
            m: m.into_iter().collect(),
            w: w.into_iter().collect(),
            gamma,
        }
    }

    /// The history with nothing consumed yet.
    pub fn empty() -> Self {
        BlockHistory::new([], [], 1)
    }

    /// `min { w in W : w > i }`.
    pub fn w_of(&self, i: usize) -> Option<usize> {
        self.w.range(i + 1..).next().copied()
    }

    /// Checks the two defining conditions for the row bound `r`.
    pub fn validate(&self, r: usize) -> std::result::Result<(), String> {
        let g = self.gamma;
        if g < 1 || g > r {
            return Err(format!("gamma={g} outside [1,{r}]"));
        }
        if self.m.iter().chain(self.w.iter()).any(|&i| i < 1 || i >= g) {
            return Err(format!("M and W must lie in [1,{}]", g - 1));
        }
        if self.w.is_empty() {
            if g != 1 {
                return Err(format!("W is empty but gamma={g}"));
            }
            if !self.m.is_empty() {
                return Err("W is empty but M is not".into());
            }
            return Ok(());
        }
        if g == 1 {
            return Err("gamma=1 but W is not empty".into());
        }
        if self.m.len() + 1 != self.w.len() {
            return Err(format!("|M|={} but |W|={}", self.m.len(), self.w.len()));
        }
        let ws: Vec<usize> = self.w.iter().copied().collect();
        let ms: Vec<usize> = self.m.iter().copied().collect();
        for (idx, &m) in ms.iter().enumerate() {
            if ws[idx] + 1 != m {
                return Err(format!("w+1=m violated at w={}, m={m}", ws[idx]));
            }
            if m >= ws[idx + 1] {
                return Err(format!("m<w violated at m={m}, w={}", ws[idx + 1]));
            }
        }
        let last = *ws.last().unwrap();
        if last + 1 != g {
            return Err(format!("max W + 1 = {} differs from gamma={g}", last + 1));
        }
        Ok(())
    }
}

/// An integer weight on a subset of the variables.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WeightFunction {
    pub weights: BTreeMap<String, i64>,
}

impl WeightFunction {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn constant<I, S>(names: I, value: i64) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        WeightFunction {
            weights: names.into_iter().map(|n| (n.into(), value)).collect(),
        }
    }

    pub fn set(&mut self, name: impl Into<String>, value: i64) {
        self.weights.insert(name.into(), value);
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.weights.get(name).copied()
    }

    pub fn domain(&self) -> impl Iterator<Item = &str> {
        self.weights.keys().map(String::as_str)
    }

    /// Weight vector aligned with `vars`; variables outside the domain get 0.
    pub fn vector(&self, vars: &VariableSet) -> Vec<i64> {
        vars.names()
            .iter()
            .map(|n| self.weights.get(n).copied().unwrap_or(0))
            .collect()
    }

    /// `sum over the domain of weight * exponent`.
    pub fn degree(&self, vars: &VariableSet, m: &Monomial) -> i64 {
        vars.names()
            .iter()
            .zip(m.exps())
            .map(|(n, &e)| self.weights.get(n).copied().unwrap_or(0) * e as i64)
            .sum()
    }
}

/// The weighting attached to the state after a first block of size `s`.
pub fn build_lambda_start(s: usize, k: usize) -> Result<WeightFunction> {
    if s < 1 || s > k {
        return Err(QuiverError::InvalidHistory(format!("s={s} for k={k}")));
    }
    let mut w = WeightFunction::new();
    let rows2 = if s < k { s } else { k - 1 };
    for i in 1..=s {
        let v = if i + 1 == s { 1 } else { i as i64 - s as i64 + 1 };
        w.set(var_name(i, 1), v);
    }
    for i in 1..=rows2 {
        w.set(var_name(i, 2), i as i64 - s as i64);
    }
    Ok(w)
}

/// The weighting determined by a block history `h` at row `r`.
pub fn build_mwgamma_weighting(h: &BlockHistory, r: usize, k: usize) -> Result<WeightFunction> {
    if r < 1 || r > k {
        return Err(QuiverError::InvalidHistory(format!("r={r} for k={k}")));
    }
    h.validate(r).map_err(QuiverError::InvalidHistory)?;
    let g = h.gamma;
    let mut w = WeightFunction::new();
    for i in 1..=r {
        let v = if h.w.contains(&i) {
            1
        } else if i + 1 < g {
            i as i64 - h.w_of(i).unwrap() as i64
        } else {
            1
        };
        w.set(var_name(i, 1), v);
    }
    for i in (1..g).filter(|i| !h.m.contains(i)) {
        let v = if h.w.contains(&i) {
            -1
        } else {
            i as i64 - h.w_of(i).unwrap() as i64 - 1
        };
        w.set(var_name(i, 2), v);
    }
    if r < k {
        w.set(var_name(r, 2), 0);
    }
    Ok(w)
}

/// History reached right after a first horizontal block of size `s`.
pub fn history_after_start(s: usize) -> BlockHistory {
    if s <= 1 {
        BlockHistory::empty()
    } else {
        BlockHistory::new([], [s - 1], s)
    }
}
