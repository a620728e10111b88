use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{PeriodError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "ambient")]
pub enum Ambient {
    /// G(2, k+2).
    Grassmannian { k: usize },
    /// P^n.
    Projective { n: usize },
}

/// A complete intersection of hypersurfaces of the given degrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    #[serde(flatten)]
    pub ambient: Ambient,
    pub degrees: Vec<usize>,
}

impl ModelSpec {
    pub fn grassmannian(k: usize, degrees: &[usize]) -> Result<Self> {
        Self::new(Ambient::Grassmannian { k }, degrees)
    }

    pub fn projective(n: usize, degrees: &[usize]) -> Result<Self> {
        Self::new(Ambient::Projective { n }, degrees)
    }

    pub fn new(ambient: Ambient, degrees: &[usize]) -> Result<Self> {
        let s = ModelSpec {
            ambient,
            degrees: degrees.to_vec(),
        };
        s.validate()?;
        Ok(s)
    }

    /// Checks positivity of the data and the Fano condition `d_0 >= 1`.
    pub fn validate(&self) -> Result<()> {
        match self.ambient {
            Ambient::Grassmannian { k } if k < 1 => {
                return Err(PeriodError::InvalidSpec(format!("k={k}, need k >= 1")))
            }
            Ambient::Projective { n } if n < 1 => {
                return Err(PeriodError::InvalidSpec(format!("n={n}, need n >= 1")))
            }
            _ => {}
        }
        if self.degrees.contains(&0) {
            return Err(PeriodError::InvalidSpec("degrees must be positive".into()));
        }
        let index = self.index();
        if index < 1 {
            return Err(PeriodError::NotFano { index });
        }
        Ok(())
    }

    /// The Fano index `d_0`.
    pub fn index(&self) -> i64 {
        let top = match self.ambient {
            Ambient::Grassmannian { k } => k + 2,
            Ambient::Projective { n } => n + 1,
        };
        top as i64 - self.degrees.iter().sum::<usize>() as i64
    }

    /// Dimension of the complete intersection.
    pub fn dimension(&self) -> usize {
        let ambient = match self.ambient {
            Ambient::Grassmannian { k } => 2 * k,
            Ambient::Projective { n } => n,
        };
        ambient - self.degrees.len()
    }
}

impl fmt::Display for ModelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.ambient {
            Ambient::Grassmannian { k } => write!(f, "G(2,{})", k + 2)?,
            Ambient::Projective { n } => write!(f, "P^{n}")?,
        }
        write!(f, " degrees {:?}", self.degrees)
    }
}
