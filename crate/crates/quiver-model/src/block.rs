//! Basic blocks, their unions, and the canonical block placement.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{QuiverError, Result};
use crate::quiver::{check_k, Arrow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BlockKind {
    Horizontal,
    Vertical,
    Mixed,
}

/// A union of consecutive basic blocks.
///
/// For horizontal and mixed blocks `first_row..last_row` are the basic
/// horizontal blocks used: basic block `s` consists of the vertical arrows
/// leaving row `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub kind: BlockKind,
    pub arrows: BTreeSet<Arrow>,
    pub size: usize,
    pub first_row: usize,
    pub last_row: usize,
}

/// The `s`-th basic horizontal block, `s in [0, k-1]`.
pub fn basic_horizontal_arrows(k: usize, s: usize) -> Result<BTreeSet<Arrow>> {
    if s >= k {
        return Err(QuiverError::InvalidBlock(format!(
            "basic horizontal block {s} for k={k}"
        )));
    }
    let mut a = BTreeSet::new();
    a.insert(Arrow::new((s, 1), (s + 1, 1)));
    if s >= 1 {
        a.insert(Arrow::new((s, 2), (s + 1, 2)));
    }
    Ok(a)
}

/// The `j`-th basic vertical block: the arrows leaving column `j`.
pub fn basic_vertical_arrows(k: usize, j: usize) -> Result<BTreeSet<Arrow>> {
    match j {
        1 => Ok((1..=k).map(|i| Arrow::new((i, 1), (i, 2))).collect()),
        2 => Ok([Arrow::new((k, 2), (k, 3))].into_iter().collect()),
        _ => Err(QuiverError::InvalidBlock(format!("basic vertical block {j}"))),
    }
}

impl Block {
    /// Horizontal block made of basic blocks `start..start+size`.
    pub fn horizontal(k: usize, start: usize, size: usize) -> Result<Block> {
        if size == 0 || start + size > k {
            return Err(QuiverError::InvalidBlock(format!(
                "horizontal block at {start} of size {size} for k={k}"
            )));
        }
        let mut arrows = BTreeSet::new();
        for s in start..start + size {
            arrows.extend(basic_horizontal_arrows(k, s)?);
        }
        Ok(Block {
            kind: BlockKind::Horizontal,
            arrows,
            size,
            first_row: start,
            last_row: start + size,
        })
    }

    /// The `j`-th basic vertical block.
    pub fn vertical(k: usize, j: usize) -> Result<Block> {
        Ok(Block {
            kind: BlockKind::Vertical,
            arrows: basic_vertical_arrows(k, j)?,
            size: 1,
            first_row: k,
            last_row: k,
        })
    }

    /// Horizontal basics `start..k` together with the first vertical block.
    pub fn mixed(k: usize, start: usize) -> Result<Block> {
        if start >= k {
            return Err(QuiverError::InvalidBlock(format!(
                "mixed block at {start} for k={k}"
            )));
        }
        let mut arrows = basic_vertical_arrows(k, 1)?;
        for s in start..k {
            arrows.extend(basic_horizontal_arrows(k, s)?);
        }
        Ok(Block {
            kind: BlockKind::Mixed,
            arrows,
            size: k - start + 1,
            first_row: start,
            last_row: k,
        })
    }

    pub fn contains_start_arrow(&self) -> bool {
        self.arrows.contains(&Arrow::new((0, 1), (1, 1)))
    }
}

/// Degrees reordered so that entries above 1 come first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SortedDegrees {
    pub degrees: Vec<usize>,
    /// `degrees[i] == input[permutation[i]]`.
    pub permutation: Vec<usize>,
}

/// Stable partition: entries greater than 1 keep their order and precede the 1s.
pub fn sort_degrees(input: &[usize]) -> Result<SortedDegrees> {
    if input.iter().any(|&d| d == 0) {
        return Err(QuiverError::InvalidDegree);
    }
    let mut permutation: Vec<usize> = (0..input.len()).filter(|&i| input[i] > 1).collect();
    permutation.extend((0..input.len()).filter(|&i| input[i] == 1));
    let degrees = permutation.iter().map(|&i| input[i]).collect();
    Ok(SortedDegrees {
        degrees,
        permutation,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockSelection {
    pub sorted: SortedDegrees,
    pub blocks: Vec<Block>,
}

/// Places one block per degree: horizontal blocks stacked from the top, then
/// a mixed or vertical block when the degrees sum to `k+1`.
pub fn select_blocks(k: usize, degrees: &[usize]) -> Result<BlockSelection> {
    check_k(k)?;
    let sorted = sort_degrees(degrees)?;
    let sum: usize = sorted.degrees.iter().sum();
    if sum >= k + 2 {
        return Err(QuiverError::NotFano { sum, bound: k + 2 });
    }
    let mut blocks = Vec::with_capacity(sorted.degrees.len());
    let mut pos = 0;
    let n = sorted.degrees.len();
    for (idx, &d) in sorted.degrees.iter().enumerate() {
        let last = idx + 1 == n;
        if last && sum == k + 1 {
            if d >= 2 {
                blocks.push(Block::mixed(k, pos)?);
            } else {
                blocks.push(Block::vertical(k, 1)?);
            }
        } else {
            blocks.push(Block::horizontal(k, pos, d)?);
            pos += d;
        }
    }
    Ok(BlockSelection { sorted, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::build_quiver;

    #[test]
    fn hyperplanes_take_consecutive_basics() {
        let sel = select_blocks(3, &[1, 1, 1]).unwrap();
        assert_eq!(sel.blocks.len(), 3);
        for (s, b) in sel.blocks.iter().enumerate() {
            assert_eq!(b.kind, BlockKind::Horizontal);
            assert_eq!(b.arrows, basic_horizontal_arrows(3, s).unwrap());
        }
    }

    #[test]
    fn cubic_in_g24_is_one_mixed_block() {
        let sel = select_blocks(2, &[3]).unwrap();
        assert_eq!(sel.blocks.len(), 1);
        let b = &sel.blocks[0];
        assert_eq!(b.kind, BlockKind::Mixed);
        assert_eq!(b.size, 3);
        let mut rest = build_quiver(2).unwrap().arrows().clone();
        rest.remove(&Arrow::new((2, 2), (2, 3)));
        assert_eq!(b.arrows, rest);
        assert!(b.contains_start_arrow());
    }

    #[test]
    fn index_one_hyperplanes_end_with_vertical() {
        let sel = select_blocks(3, &[1, 1, 1, 1]).unwrap();
        let kinds: Vec<_> = sel.blocks.iter().map(|b| b.kind).collect();
        assert_eq!(
            kinds,
            vec![
                BlockKind::Horizontal,
                BlockKind::Horizontal,
                BlockKind::Horizontal,
                BlockKind::Vertical
            ]
        );
        assert_eq!(sel.blocks[3].arrows, basic_vertical_arrows(3, 1).unwrap());
    }

    #[test]
    fn degrees_reordered_stably() {
        let s = sort_degrees(&[1, 3, 1, 2]).unwrap();
        assert_eq!(s.degrees, vec![3, 2, 1, 1]);
        assert_eq!(s.permutation, vec![1, 3, 0, 2]);
        let sel = select_blocks(4, &[1, 2, 2]).unwrap();
        assert_eq!(sel.sorted.degrees, vec![2, 2, 1]);
        assert_eq!(sel.blocks[2].kind, BlockKind::Vertical);
    }

    #[test]
    fn not_fano_rejected() {
        assert!(matches!(
            select_blocks(2, &[2, 2]),
            Err(QuiverError::NotFano { sum: 4, bound: 4 })
        ));
        assert!(select_blocks(2, &[0]).is_err());
    }

    #[test]
    fn mixed_after_horizontal() {
        let sel = select_blocks(3, &[2, 2]).unwrap();
        assert_eq!(sel.blocks[0].kind, BlockKind::Horizontal);
        assert_eq!(sel.blocks[1].kind, BlockKind::Mixed);
        assert_eq!(sel.blocks[1].first_row, 2);
        assert_eq!(sel.blocks[1].size, 2);
    }
}
