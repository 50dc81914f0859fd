use std::collections::BTreeSet;

use serde::Serialize;

use super::{linalg, Facet, LatticePoint};
use crate::error::Result;

/// A nonempty face, identified by the sorted indices of the polytope
/// vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Face {
    dim: usize,
    vertex_indices: Vec<usize>,
}

impl Face {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertex_indices
    }

    pub fn contains(&self, other: &Face) -> bool {
        other
            .vertex_indices
            .iter()
            .all(|i| self.vertex_indices.binary_search(i).is_ok())
    }
}

/// All nonempty faces of a polytope, grouped by dimension. The polytope
/// itself is the unique face of top dimension; the empty face is omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceLattice {
    dim: usize,
    faces_by_dim: Vec<Vec<Face>>,
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

impl FaceLattice {
    /// Closes the facet vertex-sets under intersection. Every proper
    /// nonempty face is an intersection of facets, so this finds all of
    /// them; dimensions come from the affine rank of each vertex set.
    pub fn from_incidence(
        dim: usize,
        vertices: &[LatticePoint],
        facets: &[Facet],
    ) -> Result<Self> {
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for f in facets {
            if found.insert(f.vertices.clone()) {
                queue.push(f.vertices.clone());
            }
        }
        while let Some(face) = queue.pop() {
            for f in facets {
                let meet = intersect(&face, &f.vertices);
                if !meet.is_empty() && meet.len() < face.len() && found.insert(meet.clone()) {
                    queue.push(meet);
                }
            }
        }
        found.insert((0..vertices.len()).collect());

        let mut faces_by_dim = vec![Vec::new(); dim + 1];
        for vertex_indices in found {
            let coords: Vec<&[i64]> = vertex_indices
                .iter()
                .map(|&i| vertices[i].coords())
                .collect();
            let d = linalg::affine_rank(&coords)?;
            faces_by_dim[d].push(Face {
                dim: d,
                vertex_indices,
            });
        }
        for faces in &mut faces_by_dim {
            faces.sort();
        }
        Ok(FaceLattice { dim, faces_by_dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Faces of dimension `k`; empty for `k > dim`.
    pub fn faces(&self, k: usize) -> &[Face] {
        self.faces_by_dim.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn faces_by_dim(&self) -> &[Vec<Face>] {
        &self.faces_by_dim
    }

    /// `f_k` for `k = 0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    /// Checks the structural invariants: one top face, vertex count
    /// matches `f_0`, and every `(k-1)`-face lies in at least two `k`-faces
    /// below the top dimension.
    pub fn is_well_formed(&self, vertex_count: usize) -> bool {
        if self.faces(self.dim).len() != 1 || self.faces(0).len() != vertex_count {
            return false;
        }
        (1..self.dim).all(|k| {
            self.faces(k - 1).iter().all(|lower| {
                self.faces(k).iter().filter(|upper| upper.contains(lower)).count() >= 2
            })
        })
    }
}
