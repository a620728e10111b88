//! Ordered, immutable collections of variable names.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{ArithError, Result};

#[derive(Debug)]
struct Inner {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// An ordered set of variable names. Position in the set is the position in
/// every exponent vector built over it. Cloning is cheap.
#[derive(Clone)]
pub struct VariableSet(Arc<Inner>);

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, n) in names.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(ArithError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableSet(Arc::new(Inner { names, index })))
    }

    pub fn empty() -> Self {
        VariableSet::new(Vec::<String>::new()).unwrap()
    }

    pub fn len(&self) -> usize {
        self.0.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.0.index.contains_key(name)
    }

    pub fn ptr_eq(&self, other: &VariableSet) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// A new set with `extra` appended (names already present are skipped).
    pub fn extended<I, S>(&self, extra: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names = self.0.names.clone();
        for e in extra {
            let e = e.into();
            if !self.contains(&e) && !names.contains(&e) {
                names.push(e);
            }
        }
        VariableSet::new(names).unwrap()
    }

    /// A new set without the named variables.
    pub fn without(&self, drop: &[&str]) -> Self {
        VariableSet::new(
            self.0
                .names
                .iter()
                .filter(|n| !drop.contains(&n.as_str()))
                .cloned(),
        )
        .unwrap()
    }

    /// The union of two sets: `self` order first, then new names of `other`.
    pub fn union(&self, other: &VariableSet) -> Self {
        if self == other {
            return self.clone();
        }
        self.extended(other.names().iter().cloned())
    }
}

impl PartialEq for VariableSet {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || self.0.names == other.0.names
    }
}

impl Eq for VariableSet {}

impl std::hash::Hash for VariableSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.names.hash(state)
    }
}

impl fmt::Debug for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VariableSet{:?}", self.0.names)
    }
}

impl fmt::Display for VariableSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.names.join(", "))
    }
}
