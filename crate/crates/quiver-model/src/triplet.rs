//! Triplets `(Q, V, R)`: a quiver, a variable set and a rational function
//! per vertex.

use std::collections::{BTreeMap, BTreeSet};

use lgm_arith::{Bindings, LaurentPolynomial, RationalFunction, VariableSet};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{QuiverError, Result};
use crate::quiver::{build_quiver, check_k, Arrow, Quiver, Vertex};

/// The extra variable attached to the extremal vertices.
pub const EXTREMAL_VAR: &str = "a";

pub fn var_name(i: usize, j: usize) -> String {
    format!("a_{i}_{j}")
}

/// Parses `a_i_j` back into `(i, j)`.
pub fn parse_var_name(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("a_")?;
    let (i, j) = rest.split_once('_')?;
    Some((i.parse().ok()?, j.parse().ok()?))
}

/// Canonical variable order: `a_i_j` by `(i, j)`, then `a`.
pub fn sorted_names<I: IntoIterator<Item = String>>(names: I) -> Vec<String> {
    let mut v: Vec<String> = names.into_iter().collect();
    v.sort_by_key(|n| match parse_var_name(n) {
        Some((i, j)) => (0, i, j, String::new()),
        None => (1, 0, 0, n.clone()),
    });
    v
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triplet {
    quiver: Quiver,
    vars: VariableSet,
    assignment: BTreeMap<Vertex, RationalFunction>,
}

impl Triplet {
    pub fn new(
        quiver: Quiver,
        vars: VariableSet,
        assignment: BTreeMap<Vertex, RationalFunction>,
    ) -> Result<Self> {
        for v in quiver.vertices() {
            let r = assignment
                .get(v)
                .ok_or_else(|| QuiverError::InvalidBlock(format!("vertex {v} unassigned")))?;
            if r.vars() != &vars {
                return Err(QuiverError::InvalidBlock(format!(
                    "R{v} is not over the triplet variables"
                )));
            }
        }
        Ok(Triplet {
            quiver,
            vars,
            assignment,
        })
    }

    /// The starting triplet with `R(k,2)=1` and `R(0,1)=R(k,3)=a`.
    pub fn initial(k: usize) -> Result<Self> {
        check_k(k)?;
        let quiver = build_quiver(k)?;
        let mut names: Vec<String> = Vec::new();
        for i in 1..=k {
            names.push(var_name(i, 1));
            if i < k {
                names.push(var_name(i, 2));
            }
        }
        names.push(EXTREMAL_VAR.to_string());
        let vars = VariableSet::new(names)?;
        let mut assignment = BTreeMap::new();
        for v in quiver.vertices() {
            let r = if (v.row, v.col) == (k, 2) {
                RationalFunction::one(&vars)
            } else if v.row == 0 || v.col == 3 {
                RationalFunction::var(&vars, EXTREMAL_VAR)?
            } else {
                RationalFunction::var(&vars, &var_name(v.row, v.col))?
            };
            assignment.insert(*v, r);
        }
        Triplet::new(quiver, vars, assignment)
    }

    /// The standard triplet with `R(i,j)=a_{i,j}` and `R(0,1)=R(k,3)=1`.
    pub fn original(k: usize) -> Result<Self> {
        check_k(k)?;
        let quiver = build_quiver(k)?;
        let names: Vec<String> = (1..=k)
            .flat_map(|i| [var_name(i, 1), var_name(i, 2)])
            .collect();
        let vars = VariableSet::new(names)?;
        let mut assignment = BTreeMap::new();
        for v in quiver.vertices() {
            let r = if v.row == 0 || v.col == 3 {
                RationalFunction::one(&vars)
            } else {
                RationalFunction::var(&vars, &var_name(v.row, v.col))?
            };
            assignment.insert(*v, r);
        }
        Triplet::new(quiver, vars, assignment)
    }

    /// Expresses the variables of [`Triplet::initial`] through those of
    /// [`Triplet::original`]: `a_{i,j} -> a_{i,j}/a_{k,2}`, `a -> 1/a_{k,2}`.
    pub fn initial_from_original(k: usize) -> Result<(Bindings, VariableSet)> {
        let target = Triplet::original(k)?.vars;
        let init = Triplet::initial(k)?.vars;
        let last = RationalFunction::var(&target, &var_name(k, 2))?;
        let mut b = Bindings::new();
        for name in init.names() {
            let image = if name == EXTREMAL_VAR {
                last.inv()?
            } else {
                RationalFunction::var(&target, name)?.div(&last)?
            };
            b.insert(name.clone(), image);
        }
        Ok((b, target))
    }

    pub fn k(&self) -> usize {
        self.quiver.k()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn assignment(&self) -> &BTreeMap<Vertex, RationalFunction> {
        &self.assignment
    }

    pub fn r(&self, row: usize, col: usize) -> &RationalFunction {
        &self.assignment[&Vertex::new(row, col)]
    }

    /// `R(head)/R(tail)` for one arrow.
    pub fn ratio(&self, a: &Arrow) -> Result<RationalFunction> {
        Ok(self.assignment[&a.head].div(&self.assignment[&a.tail])?)
    }

    /// `sum of R(h)/R(t)` over the given arrows, which must be in the quiver.
    pub fn assemble<'a, I>(&self, arrows: I) -> Result<RationalFunction>
    where
        I: IntoIterator<Item = &'a Arrow>,
    {
        let mut total: Option<RationalFunction> = None;
        for a in arrows {
            if !self.quiver.contains(a) {
                return Err(QuiverError::MissingArrow(a.to_string()));
            }
            let t = self.ratio(a)?;
            total = Some(match total {
                None => t,
                Some(s) => s.add(&t)?,
            });
        }
        total.ok_or(QuiverError::EmptyArrows)
    }

    /// The rational function over all arrows of the quiver.
    pub fn superpotential(&self) -> Result<RationalFunction> {
        self.assemble(self.quiver.arrows().iter())
    }

    /// Laurent form of [`Triplet::superpotential`], if it has one.
    pub fn superpotential_laurent(&self) -> Result<Option<LaurentPolynomial>> {
        Ok(self.superpotential()?.to_laurent())
    }

    /// Replaces the quiver by the one without `arrows`, keeping `R` and `V`.
    pub fn remove_arrows(&self, arrows: &BTreeSet<Arrow>) -> Result<Self> {
        Ok(Triplet {
            quiver: self.quiver.remove(arrows)?,
            vars: self.vars.clone(),
            assignment: self.assignment.clone(),
        })
    }
}

impl Serialize for Triplet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let assignment: BTreeMap<String, String> = self
            .assignment
            .iter()
            .map(|(v, r)| (v.to_string(), r.to_string()))
            .collect();
        let mut st = s.serialize_struct("Triplet", 3)?;
        st.serialize_field("quiver", &self.quiver)?;
        st.serialize_field("variables", self.vars.names())?;
        st.serialize_field("assignment", &assignment)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lgm_arith::parse_laurent;

    #[test]
    fn initial_variable_counts() {
        let t = Triplet::initial(2).unwrap();
        assert_eq!(t.vars().names(), ["a_1_1", "a_1_2", "a_2_1", "a"]);
        assert_eq!(Triplet::initial(3).unwrap().vars().len(), 6);
        assert!(t.r(2, 2).is_one());
        assert!(Triplet::initial(1).is_err());
    }

    #[test]
    fn initial_superpotential_k2() {
        let t = Triplet::initial(2).unwrap();
        let f = t.superpotential_laurent().unwrap().unwrap();
        let expected = parse_laurent(
            "a_1_1/a + a_1_2/a_1_1 + a_2_1/a_1_1 + 1/a_1_2 + 1/a_2_1 + a",
            t.vars(),
        )
        .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn extremal_arrow_alone() {
        let t = Triplet::initial(2).unwrap();
        let r = t.assemble([&Arrow::new((2, 2), (2, 3))]).unwrap();
        assert_eq!(r, RationalFunction::var(t.vars(), "a").unwrap());
        assert!(matches!(t.assemble([]), Err(QuiverError::EmptyArrows)));
    }

    #[test]
    fn original_superpotential_k2() {
        let t = Triplet::original(2).unwrap();
        let f = t.superpotential_laurent().unwrap().unwrap();
        let expected = parse_laurent(
            "a_1_1 + a_1_2/a_1_1 + a_2_1/a_1_1 + a_2_2/a_1_2 + a_2_2/a_2_1 + 1/a_2_2",
            t.vars(),
        )
        .unwrap();
        assert_eq!(f, expected);
    }

    #[test]
    fn initial_pulls_back_to_original() {
        for k in 2..6 {
            let (b, target) = Triplet::initial_from_original(k).unwrap();
            let f = Triplet::initial(k).unwrap().superpotential().unwrap();
            let pulled = f.substitute(&b, &target).unwrap();
            let g = Triplet::original(k).unwrap().superpotential().unwrap();
            assert!(pulled.equals(&g).unwrap(), "k={k}");
        }
    }

    #[test]
    fn names_round_trip() {
        assert_eq!(parse_var_name(&var_name(12, 2)), Some((12, 2)));
        assert_eq!(parse_var_name("a"), None);
        let s = sorted_names(["a".to_string(), "a_2_1".into(), "a_1_2".into(), "a_10_1".into()]);
        assert_eq!(s, ["a_1_2", "a_2_1", "a_10_1", "a"]);
    }
}
