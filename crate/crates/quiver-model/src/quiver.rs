//! The ladder quiver of the toric degeneration of G(2, k+2).

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::error::{QuiverError, Result};

/// A vertex `(row, col)`; `(0,1)` and `(k,3)` are the two extremal vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub row: usize,
    pub col: usize,
}

impl Vertex {
    pub const fn new(row: usize, col: usize) -> Self {
        Vertex { row, col }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

impl Serialize for Vertex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (self.row, self.col).serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ArrowKind {
    Vertical,
    Horizontal,
}

/// A directed arrow `tail -> head`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arrow {
    pub tail: Vertex,
    pub head: Vertex,
}

impl Arrow {
    pub const fn new(tail: (usize, usize), head: (usize, usize)) -> Self {
        Arrow {
            tail: Vertex::new(tail.0, tail.1),
            head: Vertex::new(head.0, head.1),
        }
    }

    pub fn kind(&self) -> ArrowKind {
        if self.tail.col == self.head.col {
            ArrowKind::Vertical
        } else {
            ArrowKind::Horizontal
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

impl Serialize for Arrow {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Arrow", 3)?;
        st.serialize_field("tail", &self.tail)?;
        st.serialize_field("head", &self.head)?;
        st.serialize_field("kind", &self.kind())?;
        st.end()
    }
}

/// A subquiver of the full ladder quiver: all vertices, some arrows.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Quiver {
    k: usize,
    vertices: BTreeSet<Vertex>,
    arrows: BTreeSet<Arrow>,
}

/// The vertex set `{(i,j) : i in [1,k], j in [1,2]} + {(0,1), (k,3)}`.
pub fn ladder_vertices(k: usize) -> BTreeSet<Vertex> {
    let mut v = BTreeSet::new();
    v.insert(Vertex::new(0, 1));
    for i in 1..=k {
        v.insert(Vertex::new(i, 1));
        v.insert(Vertex::new(i, 2));
    }
    v.insert(Vertex::new(k, 3));
    v
}

/// All arrows of the full ladder quiver.
pub fn ladder_arrows(k: usize) -> BTreeSet<Arrow> {
    let mut a = BTreeSet::new();
    for i in 0..k {
        a.insert(Arrow::new((i, 1), (i + 1, 1)));
    }
    for i in 1..k {
        a.insert(Arrow::new((i, 2), (i + 1, 2)));
    }
    for i in 1..=k {
        a.insert(Arrow::new((i, 1), (i, 2)));
    }
    a.insert(Arrow::new((k, 2), (k, 3)));
    a
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(QuiverError::InvalidK(k));
    }
    Ok(())
}

/// The full quiver for G(2, k+2): `2k+2` vertices and `3k` arrows.
pub fn build_quiver(k: usize) -> Result<Quiver> {
    check_k(k)?;
    Ok(Quiver {
        k,
        vertices: ladder_vertices(k),
        arrows: ladder_arrows(k),
    })
}

impl Quiver {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn arrows(&self) -> &BTreeSet<Arrow> {
        &self.arrows
    }

    pub fn contains(&self, a: &Arrow) -> bool {
        self.arrows.contains(a)
    }

    /// The quiver with the given arrows removed; every one must be present.
    pub fn remove(&self, arrows: &BTreeSet<Arrow>) -> Result<Quiver> {
        if let Some(a) = arrows.iter().find(|a| !self.arrows.contains(a)) {
            return Err(QuiverError::MissingArrow(a.to_string()));
        }
        Ok(Quiver {
            k: self.k,
            vertices: self.vertices.clone(),
            arrows: self.arrows.difference(arrows).copied().collect(),
        })
    }

    pub fn vertical_arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(|a| a.kind() == ArrowKind::Vertical)
    }

    /// Whether some vertical arrow has its head in rows `lo..=hi`.
    pub fn has_vertical_head_in_rows(&self, lo: usize, hi: usize) -> bool {
        self.vertical_arrows()
            .any(|a| a.head.row >= lo && a.head.row <= hi)
    }
}
