//! Exact lattice geometry: points, facet enumeration, polar duality,
//! smoothness and reflexivity.
//!
//! Polytopes are always given by their vertex lists. Facets are found by an
//! exhaustive scan over `n`-subsets of vertices with exact sidedness tests,
//! which is plenty for the vertex counts of smooth Fano polytopes in low
//! dimension.

mod faces;
pub(crate) mod linalg;

pub use faces::{Face, FaceLattice};

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use itertools::Itertools;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer vector in a lattice of fixed rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// gcd of the absolute values of the coordinates (0 for the origin).
    pub fn content(&self) -> u64 {
        self.0
            .iter()
            .fold(0u64, |g, &x| g.gcd(&x.unsigned_abs()))
    }

    pub fn is_primitive(&self) -> bool {
        self.content() == 1
    }

    pub fn dot(&self, other: &LatticePoint) -> Result<i64> {
        let sum = self
            .0
            .iter()
            .zip(&other.0)
            .try_fold(0i128, |acc, (&a, &b)| {
                acc.checked_add(i128::from(a) * i128::from(b))
            })
            .ok_or(Error::Overflow)?;
        i64::try_from(sum).map_err(|_| Error::Overflow)
    }

    pub fn checked_sub(&self, other: &LatticePoint) -> Result<LatticePoint> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(LatticePoint)
    }

    pub fn checked_neg(&self) -> Result<LatticePoint> {
        self.0
            .iter()
            .map(|a| a.checked_neg().ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(LatticePoint)
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }
}

impl<const N: usize> From<[i64; N]> for LatticePoint {
    fn from(coords: [i64; N]) -> Self {
        LatticePoint(coords.to_vec())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// The inequality `<normal, x> <= offset`, with a primitive normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Halfspace {
    pub normal: LatticePoint,
    pub offset: i64,
}

impl Halfspace {
    /// `offset - <normal, x>`: positive inside, zero on the boundary.
    pub fn slack(&self, x: &LatticePoint) -> Result<i64> {
        self.offset
            .checked_sub(self.normal.dot(x)?)
            .ok_or(Error::Overflow)
    }
}

/// A facet: its supporting halfspace and the sorted indices of the polytope
/// vertices lying on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub halfspace: Halfspace,
    pub vertices: Vec<usize>,
}

/// Enumerates the facets of `conv(vertices)` together with their vertex
/// incidences, sorted by normal.
///
/// Fails with [`Error::DegenerateInput`] if the points do not affinely span
/// `dim` dimensions, and with [`Error::OriginNotInterior`] if some facet does
/// not strictly separate the origin from its hyperplane.
pub fn enumerate_facets(dim: usize, vertices: &[LatticePoint]) -> Result<Vec<Facet>> {
    if dim == 0 {
        return Err(Error::InvalidDimension(0));
    }
    if vertices.is_empty() {
        return Err(Error::Empty);
    }
    for v in vertices {
        if v.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.dim(),
            });
        }
    }
    let coords: Vec<&[i64]> = vertices.iter().map(LatticePoint::coords).collect();
    if linalg::affine_rank(&coords)? < dim {
        return Err(Error::DegenerateInput(dim));
    }

    let mut seen = BTreeSet::new();
    let mut facets = Vec::new();
    for subset in (0..vertices.len()).combinations(dim) {
        let base = &vertices[subset[0]];
        let rows = subset[1..]
            .iter()
            .map(|&i| vertices[i].checked_sub(base).map(|d| d.0))
            .collect::<Result<Vec<_>>>()?;
        let raw = linalg::cofactor_normal(&rows, dim)?;
        let g = raw.iter().fold(0u128, |g, x| g.gcd(&x.unsigned_abs()));
        if g == 0 {
            continue;
        }
        let g = g as i128;
        let mut normal = LatticePoint(
            raw.iter()
                .map(|x| i64::try_from(x / g).map_err(|_| Error::Overflow))
                .collect::<Result<Vec<_>>>()?,
        );
        let mut offset = normal.dot(base)?;
        let mut below = false;
        let mut above = false;
        for v in vertices {
            match normal.dot(v)?.cmp(&offset) {
                std::cmp::Ordering::Less => below = true,
                std::cmp::Ordering::Greater => above = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        if below && above {
            continue;
        }
        if above {
            normal = normal.checked_neg()?;
            offset = offset.checked_neg().ok_or(Error::Overflow)?;
        }
        if !seen.insert(normal.clone()) {
            continue;
        }
        let halfspace = Halfspace { normal, offset };
        let incident = vertices
            .iter()
            .enumerate()
            .filter_map(|(i, v)| match halfspace.slack(v) {
                Ok(0) => Some(Ok(i)),
                Ok(_) => None,
                Err(e) => Some(Err(e)),
            })
            .collect::<Result<Vec<_>>>()?;
        facets.push(Facet {
            halfspace,
            vertices: incident,
        });
    }
    facets.sort_by(|a, b| a.halfspace.cmp(&b.halfspace));

    if let Some(f) = facets.iter().find(|f| f.halfspace.offset <= 0) {
        return Err(Error::OriginNotInterior {
            normal: f.halfspace.normal.coords().to_vec(),
            offset: f.halfspace.offset,
        });
    }
    Ok(facets)
}

/// The facet halfspaces of `conv(vertices)`, sorted and duplicate-free.
pub fn facet_enumeration(dim: usize, vertices: &[LatticePoint]) -> Result<Vec<Halfspace>> {
    Ok(enumerate_facets(dim, vertices)?
        .into_iter()
        .map(|f| f.halfspace)
        .collect())
}

/// Number of lattice points strictly inside the segment `[a, b]`.
pub fn edge_interior_points(a: &LatticePoint, b: &LatticePoint) -> Result<u64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            got: b.dim(),
        });
    }
    let content = b.checked_sub(a)?.content();
    if content == 0 {
        return Err(Error::DegenerateEdge);
    }
    Ok(content - 1)
}

/// A full-dimensional lattice polytope containing the origin in its interior,
/// stored with its vertex list and facet incidences.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<LatticePoint>,
    facets: Vec<Facet>,
}

impl LatticePolytope {
    /// Validates the vertex list (distinct, spanning, origin interior, every
    /// point a genuine vertex) and enumerates facets.
    pub fn new(dim: usize, vertices: Vec<LatticePoint>) -> Result<Self> {
        let mut distinct = BTreeSet::new();
        for (i, v) in vertices.iter().enumerate() {
            if !distinct.insert(v) {
                return Err(Error::DuplicateVertex(i));
            }
        }
        let facets = enumerate_facets(dim, &vertices)?;
        let polytope = LatticePolytope {
            dim,
            vertices,
            facets,
        };
        polytope.check_vertices_minimal()?;
        Ok(polytope)
    }

    fn check_vertices_minimal(&self) -> Result<()> {
        for i in 0..self.vertices.len() {
            let normals: Vec<Vec<i64>> = self
                .facets
                .iter()
                .filter(|f| f.vertices.binary_search(&i).is_ok())
                .map(|f| f.halfspace.normal.coords().to_vec())
                .collect();
            if linalg::rank(&normals, self.dim)? < self.dim {
                return Err(Error::RedundantVertex(i));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    pub fn halfspaces(&self) -> impl Iterator<Item = &Halfspace> {
        self.facets.iter().map(|f| &f.halfspace)
    }

    /// Every facet lies at lattice distance one from the origin.
    pub fn is_reflexive(&self) -> bool {
        self.facets.iter().all(|f| f.halfspace.offset == 1)
    }

    /// Every facet is a simplex whose vertices form a lattice basis.
    pub fn is_smooth(&self) -> Result<bool> {
        for facet in &self.facets {
            if facet.vertices.len() != self.dim {
                return Ok(false);
            }
            let rows: Vec<Vec<i64>> = facet
                .vertices
                .iter()
                .map(|&i| self.vertices[i].coords().to_vec())
                .collect();
            if linalg::det(&rows)?.abs() != 1 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Vertices of `{m : <m, v> >= -1 for all vertices v}` for a reflexive
    /// polytope, one per facet in facet order.
    pub fn polar_vertices(&self) -> Result<Vec<LatticePoint>> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        self.facets
            .iter()
            .map(|f| f.halfspace.normal.checked_neg())
            .collect()
    }

    pub fn face_lattice(&self) -> Result<FaceLattice> {
        FaceLattice::from_incidence(self.dim, &self.vertices, &self.facets)
    }
}

/// A Fano polytope in N: primitive vertices, origin strictly interior. Its
/// face fan defines a toric Fano variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoPolytope(LatticePolytope);

impl FanoPolytope {
    pub fn new(dim: usize, vertices: Vec<LatticePoint>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0));
        }
        for (index, v) in vertices.iter().enumerate() {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.dim(),
                });
            }
            if !v.is_primitive() {
                return Err(Error::NonPrimitiveVertex {
                    index,
                    coords: v.coords().to_vec(),
                });
            }
        }
        LatticePolytope::new(dim, vertices).map(FanoPolytope)
    }

    pub fn as_polytope(&self) -> &LatticePolytope {
        &self.0
    }

    /// The anticanonical polytope `{m : <m, v> >= -1}` in M.
    ///
    /// Each vertex is obtained by solving `<m, v_i> = -1` over the vertices
    /// of one facet, so the result has one vertex per facet of `self`.
    pub fn polar_dual(&self) -> Result<AnticanonicalPolytope> {
        if !self.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        if !self.is_smooth()? {
            return Err(Error::NotSmooth);
        }
        let dim = self.dim();
        let rhs = vec![-1i64; dim];
        let mut dual_vertices = Vec::with_capacity(self.facets().len());
        for (fi, facet) in self.facets().iter().enumerate() {
            let rows: Vec<Vec<i64>> = facet
                .vertices
                .iter()
                .map(|&i| self.vertices()[i].coords().to_vec())
                .collect();
            let m = linalg::solve_integral(&rows, &rhs)?.ok_or(Error::NonIntegralDual(fi))?;
            let m = LatticePoint(m);
            if m != facet.halfspace.normal.checked_neg()? {
                return Err(Error::NonIntegralDual(fi));
            }
            dual_vertices.push(m);
        }

        // Facets of the dual are indexed by the vertices of `self`.
        let mut dual_facets = Vec::with_capacity(self.vertices().len());
        for v in self.vertices() {
            let mut incident = Vec::new();
            for (i, m) in dual_vertices.iter().enumerate() {
                if m.dot(v)? == -1 {
                    incident.push(i);
                }
            }
            dual_facets.push(Facet {
                halfspace: Halfspace {
                    normal: v.checked_neg()?,
                    offset: 1,
                },
                vertices: incident,
            });
        }
        Ok(AnticanonicalPolytope(LatticePolytope {
            dim,
            vertices: dual_vertices,
            facets: dual_facets,
        }))
    }
}

impl Deref for FanoPolytope {
    type Target = LatticePolytope;

    fn deref(&self) -> &LatticePolytope {
        &self.0
    }
}

/// The anticanonical polytope Δ in M of a smooth toric Fano variety.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnticanonicalPolytope(LatticePolytope);

impl AnticanonicalPolytope {
    /// Builds Δ directly from its vertex list. Δ must be reflexive; its
    /// facets need not be simplices.
    pub fn from_vertices(dim: usize, vertices: Vec<LatticePoint>) -> Result<Self> {
        let polytope = LatticePolytope::new(dim, vertices)?;
        if !polytope.is_reflexive() {
            return Err(Error::NotReflexive);
        }
        Ok(AnticanonicalPolytope(polytope))
    }

    pub fn as_polytope(&self) -> &LatticePolytope {
        &self.0
    }

    /// Reconstructs the Fano polytope in N whose dual is `self`.
    pub fn fano_polytope(&self) -> Result<FanoPolytope> {
        FanoPolytope::new(self.dim(), self.polar_vertices()?)
    }

    /// Pairs of vertex indices spanning the edges of Δ.
    pub fn edges(&self, faces: &FaceLattice) -> Vec<(usize, usize)> {
        faces
            .faces(1)
            .iter()
            .map(|e| (e.vertex_indices()[0], e.vertex_indices()[1]))
            .collect()
    }
}

impl Deref for AnticanonicalPolytope {
    type Target = LatticePolytope;

    fn deref(&self) -> &LatticePolytope {
        &self.0
    }
}
