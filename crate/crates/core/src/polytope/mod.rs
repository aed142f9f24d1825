//! Exact rational polytopes carrying both vertex and halfspace descriptions.
//!
//! Halfspaces use the `>=` orientation throughout: a facet is
//! `{x : <normal|x> >= offset}`. When the origin is interior the offset is
//! normalized to `-1`, so the normal is exactly the functional that becomes a
//! vertex of the polar body `{y : <y|x> >= -1 for all x}`.
//!
//! Polytopes need not be full-dimensional. A polytope whose affine hull is a
//! proper subspace keeps its facet normals inside the direction space of
//! that hull, which makes the normals unique and lets polar duality work
//! relative to the linear span (the trace-zero hyperplane for type A root
//! data, for instance).

mod cone;
mod faces;
mod json;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::linalg::{self, Projector};
use crate::rational::{Scalar, Vector};

pub use faces::Face;
pub use json::PolytopeJson;

/// The closed halfspace `{x : <normal|x> >= offset}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: Vector,
    offset: Scalar,
}

impl Halfspace {
    /// `{x : <functional|x> >= -1}`.
    pub fn from_functional(functional: Vector) -> Self {
        Self { normal: functional, offset: -Scalar::one() }
    }

    /// Builds and normalizes `<normal|x> >= offset`: nonzero offsets are
    /// scaled to `±1`, zero offsets make the first nonzero coordinate `±1`.
    pub fn new(normal: Vector, offset: Scalar) -> Result<Self> {
        if normal.is_zero() {
            return Err(Error::InvalidPolytope("halfspace with zero normal".into()));
        }
        let factor = if !offset.is_zero() {
            offset.abs().recip()
        } else {
            let lead = normal.iter().find(|c| !c.is_zero()).expect("nonzero normal");
            lead.abs().recip()
        };
        Ok(Self { normal: normal.scale(&factor), offset: offset * factor })
    }

    pub fn normal(&self) -> &Vector {
        &self.normal
    }

    pub fn offset(&self) -> &Scalar {
        &self.offset
    }

    /// The functional `a` with constraint `<a|x> >= -1`, if the halfspace
    /// has that form.
    pub fn functional(&self) -> Option<&Vector> {
        (self.offset == -Scalar::one()).then_some(&self.normal)
    }

    /// `<normal|x> - offset`, nonnegative exactly on the halfspace.
    pub fn slack(&self, x: &Vector) -> Scalar {
        self.normal.dot(x) - &self.offset
    }

    pub fn contains(&self, x: &Vector) -> bool {
        !self.slack(x).is_negative()
    }
}

/// A convex polytope in canonical form.
///
/// Vertices are extremal and sorted lexicographically; facets are
/// irredundant and sorted by `(normal, offset)`. Equal sets therefore have
/// structurally equal representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    affine_dim: usize,
    vertices: Vec<Vector>,
    facets: Vec<Halfspace>,
    /// For each facet, the sorted indices of the vertices on it.
    incidence: Vec<Vec<usize>>,
}

impl Polytope {
    /// Convex hull of a finite point set.
    pub fn convex_hull(points: &[Vector]) -> Result<Self> {
        let first = points.first().ok_or(Error::EmptyInput)?;
        let m = first.dim();
        for p in points {
            p.check_dim(m)?;
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();

        if pts.len() == 1 {
            return Ok(Self {
                ambient_dim: m,
                affine_dim: 0,
                vertices: pts,
                facets: Vec::new(),
                incidence: Vec::new(),
            });
        }

        let origin = pts[0].clone();
        let directions: Vec<Vector> = pts[1..].iter().map(|p| p - &origin).collect();
        let (_, pivots) = linalg::rref(&directions);
        let d = pivots.len();
        let full = d == m;
        let projector = (!full).then(|| Projector::onto_span(&directions, m));

        // Rows (p, 1) over the pivot coordinates, cleared of denominators.
        let rows: Vec<Vec<BigInt>> = pts
            .iter()
            .map(|p| {
                let mut row: Vec<Scalar> = pivots.iter().map(|&c| p[c].clone()).collect();
                row.push(Scalar::one());
                cone::integer_row(&row)
            })
            .collect();
        let rays = cone::extreme_rays(&rows, d + 1).expect("points affinely span the reduced space");

        let n = pts.len();
        let mut is_vertex = vec![false; n];
        for (i, flag) in is_vertex.iter_mut().enumerate() {
            let mut common = BitSet::full(n);
            for r in rays.iter().filter(|r| r.zeros.contains(i)) {
                common = common.intersection(&r.zeros);
            }
            *flag = common.len() == 1;
        }
        let mut vertex_index = vec![usize::MAX; n];
        let mut vertices = Vec::new();
        for i in 0..n {
            if is_vertex[i] {
                vertex_index[i] = vertices.len();
                vertices.push(pts[i].clone());
            }
        }

        let mut facets = Vec::with_capacity(rays.len());
        let mut incidence = Vec::with_capacity(rays.len());
        for ray in &rays {
            let mut normal = Vector::zeros(m).into_inner();
            for (k, &c) in pivots.iter().enumerate() {
                normal[c] = Scalar::from_integer(ray.coords[k].clone());
            }
            let mut normal = Vector::new(normal);
            if let Some(p) = &projector {
                normal = p.project(&normal);
            }
            let on: Vec<usize> = ray.zeros.iter().filter(|&i| is_vertex[i]).map(|i| vertex_index[i]).collect();
            let offset = normal.dot(&vertices[on[0]]);
            facets.push(Halfspace::new(normal, offset)?);
            incidence.push(on);
        }
        Ok(Self::canonical(m, d, vertices, facets, incidence))
    }

    /// The polytope `{x : <a_i|x> >= -1}` for the given functionals.
    ///
    /// Fails with [`Error::Unbounded`] when the functionals do not surround
    /// the origin.
    pub fn from_functionals(functionals: &[Vector]) -> Result<Self> {
        let halfspaces: Vec<Halfspace> = functionals.iter().cloned().map(Halfspace::from_functional).collect();
        let m = functionals.first().ok_or(Error::EmptyInput)?.dim();
        Self::from_halfspaces(&halfspaces, m)
    }

    /// Bounded, full-dimensional intersection of halfspaces.
    pub fn from_halfspaces(halfspaces: &[Halfspace], ambient_dim: usize) -> Result<Self> {
        let vertices = halfspaces_to_vertices(halfspaces, ambient_dim)?;
        let poly = Self::convex_hull(&vertices)?;
        if poly.affine_dim < ambient_dim {
            return Err(Error::NotFullDimensional { affine: poly.affine_dim, ambient: ambient_dim });
        }
        Ok(poly)
    }

    fn canonical(
        ambient_dim: usize,
        affine_dim: usize,
        vertices: Vec<Vector>,
        facets: Vec<Halfspace>,
        incidence: Vec<Vec<usize>>,
    ) -> Self {
        let mut vorder: Vec<usize> = (0..vertices.len()).collect();
        vorder.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
        let mut new_index = vec![0; vertices.len()];
        for (new, &old) in vorder.iter().enumerate() {
            new_index[old] = new;
        }
        let vertices: Vec<Vector> = vorder.iter().map(|&i| vertices[i].clone()).collect();

        let mut forder: Vec<usize> = (0..facets.len()).collect();
        forder.sort_by(|&a, &b| facets[a].cmp(&facets[b]));
        let facets_sorted: Vec<Halfspace> = forder.iter().map(|&i| facets[i].clone()).collect();
        let incidence: Vec<Vec<usize>> = forder
            .iter()
            .map(|&i| {
                let mut on: Vec<usize> = incidence[i].iter().map(|&v| new_index[v]).collect();
                on.sort_unstable();
                on
            })
            .collect();
        Self { ambient_dim, affine_dim, vertices, facets: facets_sorted, incidence }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.ambient_dim
    }

    pub fn vertices(&self) -> &[Vector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Sorted vertex indices on facet `i`.
    pub fn facet_vertices(&self, i: usize) -> &[usize] {
        &self.incidence[i]
    }

    /// Projector onto the direction space of the affine hull.
    pub fn direction_projector(&self) -> Projector {
        let directions: Vec<Vector> = self.vertices[1..].iter().map(|p| p - &self.vertices[0]).collect();
        Projector::onto_span(&directions, self.ambient_dim)
    }

    /// Whether `x` lies in the polytope (including the affine-hull
    /// constraints of lower-dimensional polytopes).
    pub fn contains(&self, x: &Vector) -> bool {
        if x.dim() != self.ambient_dim {
            return false;
        }
        if !self.is_full_dimensional() && !self.direction_projector().contains(&(x - &self.vertices[0])) {
            return false;
        }
        if self.affine_dim == 0 {
            return *x == self.vertices[0];
        }
        self.facets.iter().all(|h| h.contains(x))
    }

    /// True when the origin lies in the relative interior and the affine
    /// hull is a linear subspace, i.e. the polytope can serve as a unit ball
    /// on its linear span.
    pub fn has_origin_in_relative_interior(&self) -> bool {
        if self.affine_dim == 0 {
            return false;
        }
        if !self.facets.iter().all(|h| h.offset().is_negative()) {
            return false;
        }
        self.is_full_dimensional() || self.direction_projector().contains(&self.vertices[0])
    }

    /// The polar `{y : <y|x> >= -1 for all x}`, taken inside the linear span
    /// of the polytope. Requires the origin in the relative interior.
    pub fn polar_dual(&self) -> Result<Self> {
        if !self.has_origin_in_relative_interior() {
            return Err(Error::OriginNotInterior);
        }
        let vertices: Vec<Vector> = self.facets.iter().map(|h| h.normal().clone()).collect();
        let facets: Vec<Halfspace> = self.vertices.iter().cloned().map(Halfspace::from_functional).collect();
        let mut incidence = vec![Vec::new(); self.vertices.len()];
        for (f, on) in self.incidence.iter().enumerate() {
            for &v in on {
                incidence[v].push(f);
            }
        }
        Ok(Self::canonical(self.ambient_dim, self.affine_dim, vertices, facets, incidence))
    }

    /// Pointwise negation `-P`.
    pub fn negated(&self) -> Self {
        let vertices = self.vertices.iter().map(|v| -v).collect();
        let facets = self
            .facets
            .iter()
            .map(|h| Halfspace { normal: -h.normal(), offset: h.offset().clone() })
            .collect();
        Self::canonical(self.ambient_dim, self.affine_dim, vertices, facets, self.incidence.clone())
    }

    /// Image under an invertible linear map given on vertices.
    pub fn map_vertices(&self, f: impl Fn(&Vector) -> Vector) -> Result<Self> {
        let image: Vec<Vector> = self.vertices.iter().map(f).collect();
        Self::convex_hull(&image)
    }

    /// `conv(vertices(self) ∪ vertices(other))`.
    pub fn hull_of_union(&self, other: &Polytope) -> Result<Self> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, found: other.ambient_dim });
        }
        let mut pts = self.vertices.clone();
        pts.extend(other.vertices.iter().cloned());
        Self::convex_hull(&pts)
    }

    /// Index of a vertex equal to `v`.
    pub fn vertex_index(&self, v: &Vector) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// Minimum of `<w|x>` over the polytope and the vertices attaining it.
    pub fn minimize(&self, objective: &Vector) -> (Scalar, Vec<usize>) {
        let values: Vec<Scalar> = self.vertices.iter().map(|v| objective.dot(v)).collect();
        let min = values.iter().min().expect("polytopes are nonempty").clone();
        let at = values.iter().enumerate().filter(|(_, v)| **v == min).map(|(i, _)| i).collect();
        (min, at)
    }
}

/// Halfspace description of `conv(points)`: the facets of the hull.
pub fn vertices_to_halfspaces(points: &[Vector]) -> Result<Vec<Halfspace>> {
    Ok(Polytope::convex_hull(points)?.facets)
}

/// Vertices of a bounded intersection of halfspaces, sorted canonically.
pub fn halfspaces_to_vertices(halfspaces: &[Halfspace], ambient_dim: usize) -> Result<Vec<Vector>> {
    if halfspaces.is_empty() {
        return Err(Error::EmptyInput);
    }
    for h in halfspaces {
        h.normal().check_dim(ambient_dim)?;
    }
    let mut rows: Vec<Vec<BigInt>> = halfspaces
        .iter()
        .map(|h| {
            let mut row = h.normal().coords().to_vec();
            row.push(-h.offset().clone());
            cone::integer_row(&row)
        })
        .collect();
    let mut homogenizing = vec![BigInt::zero(); ambient_dim];
    homogenizing.push(BigInt::one());
    rows.push(homogenizing);

    let rays = cone::extreme_rays(&rows, ambient_dim + 1).ok_or(Error::Unbounded)?;
    let mut vertices = Vec::new();
    let mut recession = false;
    for ray in rays {
        let s = &ray.coords[ambient_dim];
        match s.sign() {
            num_bigint::Sign::Plus => {
                let s = Scalar::from_integer(s.clone());
                vertices.push(ray.coords[..ambient_dim].iter().map(|x| Scalar::from_integer(x.clone()) / &s).collect());
            }
            _ => recession = true,
        }
    }
    if vertices.is_empty() {
        return Err(Error::Infeasible);
    }
    if recession {
        return Err(Error::Unbounded);
    }
    vertices.sort();
    vertices.dedup();
    Ok(vertices)
}

#[cfg(test)]
mod tests;
