//! Reduced simplicial homology of small complexes.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldTag;
use crate::linalg::{rank, SparseColumn};

/// Largest ground set a [`SimplicialComplexView`] may have.
pub const MAX_GROUND_SET: usize = 16;

/// A simplicial complex on a small ground set, given by its full face list.
///
/// Faces are bitmasks over positions in `ground`. The void complex has no
/// faces at all; the irrelevant complex has only the empty face. The two
/// have different reduced homology.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplexView {
    ground: Vec<usize>,
    faces: Vec<u32>,
}

impl SimplicialComplexView {
    /// Builds a complex from its faces, checking closure under subsets.
    pub fn new(ground: Vec<usize>, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        if ground.len() > MAX_GROUND_SET {
            return Err(Error::GroundSetCap {
                size: ground.len(),
                cap: MAX_GROUND_SET,
            });
        }
        let mut faces: Vec<u32> = faces.into_iter().collect();
        faces.sort_by_key(|f| (f.count_ones(), *f));
        faces.dedup();
        let limit = if ground.len() == 32 {
            u32::MAX
        } else {
            (1u32 << ground.len()) - 1
        };
        for &f in &faces {
            if f & !limit != 0 {
                return Err(Error::Parameter(format!(
                    "face {f:#b} outside the ground set"
                )));
            }
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest &= rest - 1;
                if faces
                    .binary_search_by_key(&((f & !bit).count_ones(), f & !bit), |g| {
                        (g.count_ones(), *g)
                    })
                    .is_err()
                {
                    return Err(Error::Parameter(format!("face {f:#b} is missing a facet")));
                }
            }
        }
        Ok(SimplicialComplexView { ground, faces })
    }

    pub fn void(ground: Vec<usize>) -> Self {
        SimplicialComplexView {
            ground,
            faces: Vec::new(),
        }
    }

    pub fn irrelevant(ground: Vec<usize>) -> Self {
        SimplicialComplexView {
            ground,
            faces: vec![0],
        }
    }

    /// The full simplex on `ground`.
    pub fn simplex(ground: Vec<usize>) -> Result<Self> {
        if ground.len() > MAX_GROUND_SET {
            return Err(Error::GroundSetCap {
                size: ground.len(),
                cap: MAX_GROUND_SET,
            });
        }
        let faces = 0..1u32 << ground.len();
        Ok(SimplicialComplexView {
            faces: faces.collect(),
            ground,
        }
        .sorted())
    }

    fn sorted(mut self) -> Self {
        self.faces.sort_by_key(|f| (f.count_ones(), *f));
        self
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    /// Faces as bitmasks over positions in [`ground`](Self::ground), by size.
    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: u32) -> bool {
        self.faces
            .binary_search_by_key(&(face.count_ones(), face), |g| (g.count_ones(), *g))
            .is_ok()
    }

    /// `Σ_{d ≥ -1} (-1)^d f_d`, counting the empty face in dimension -1.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.faces
            .iter()
            .map(|f| if f.count_ones() % 2 == 0 { -1 } else { 1 })
            .sum()
    }

    fn face_lists(&self) -> Vec<Vec<u32>> {
        self.faces
            .iter()
            .map(|&f| (0..32).filter(|i| f >> i & 1 == 1).collect())
            .collect()
    }
}

/// `dim H̃_d(c; f)` for `d = -1 ..= dim c`. Empty for the void complex.
pub fn reduced_homology_ranks(
    c: &SimplicialComplexView,
    f: FieldTag,
) -> Result<Vec<(isize, usize)>> {
    if c.ground.len() > MAX_GROUND_SET {
        return Err(Error::GroundSetCap {
            size: c.ground.len(),
            cap: MAX_GROUND_SET,
        });
    }
    Ok(reduced_homology_of_faces(&c.face_lists(), f))
}

/// Reduced homology of the complex whose faces are the given sorted vertex
/// lists (which must be closed under taking subsets).
pub(crate) fn reduced_homology_of_faces(faces: &[Vec<u32>], f: FieldTag) -> Vec<(isize, usize)> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(Vec::len).max().unwrap();
    let mut by_size: Vec<Vec<&Vec<u32>>> = vec![Vec::new(); top + 1];
    for face in faces {
        by_size[face.len()].push(face);
    }
    let index: Vec<HashMap<&Vec<u32>, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &face)| (face, i)).collect())
        .collect();

    // boundary_rank[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut boundary_rank = vec![0usize; top + 2];
    let mut scratch = Vec::new();
    for s in 1..=top {
        let columns: Vec<SparseColumn> = by_size[s]
            .iter()
            .map(|face| {
                (0..face.len())
                    .map(|drop| {
                        scratch.clear();
                        scratch.extend(
                            face.iter()
                                .enumerate()
                                .filter(|&(i, _)| i != drop)
                                .map(|(_, &v)| v),
                        );
                        let row = index[s - 1][&scratch];
                        (row, if drop % 2 == 0 { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        boundary_rank[s] = rank(by_size[s - 1].len(), &columns, f);
    }

    (0..=top)
        .map(|s| {
            let betti = by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1];
            (s as isize - 1, betti)
        })
        .collect()
}
