//! The horofunction boundary of a polyhedral normed space.
//!
//! With basepoint `0`, every horofunction has the form
//!
//! ```text
//! h_{E,p}(y) = |p - y|_E - |p|_E
//! ```
//!
//! for a proper face `E` of the dual ball `B°` and a point `p`. Only the
//! component of `p` orthogonal to the linear span of the dual face
//! `E° ⊆ B` matters, so [`Horofunction`] stores that component and two
//! horofunctions are equal exactly when face and stored point agree.

mod sequences;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Projector;
use crate::norm::PolyhedralNorm;
use crate::polytope::{Face, Polytope};
use crate::rational::{self, Scalar, Vector};

pub use sequences::{almost_geodesic_check, chain_check, convexity_midpoint_test, MidpointSchedule, Ray, SequenceSample};

/// A horofunction `h_{E,p}` of a polyhedral norm.
#[derive(Clone, Debug)]
pub struct Horofunction {
    norm: PolyhedralNorm,
    face: Face,
    basepoint: Vector,
}

impl Horofunction {
    /// Builds `h_{E,p}` for a proper face `E` of the dual ball, given by its
    /// vertex indices. `p` is replaced by its canonical representative.
    pub fn new(norm: &PolyhedralNorm, face_vertices: &[usize], p: &Vector) -> Result<Self> {
        norm.check(p)?;
        let dual = norm.dual_ball();
        let face = dual.face(face_vertices)?;
        if !face.is_proper_in(dual) {
            return Err(Error::NotProper);
        }
        let basepoint = dual_face_span(norm, &face)?.reject(p);
        Ok(Self { norm: norm.clone(), face, basepoint })
    }

    pub fn from_face(norm: &PolyhedralNorm, face: &Face, p: &Vector) -> Result<Self> {
        Self::new(norm, face.vertex_indices(), p)
    }

    pub fn norm(&self) -> &PolyhedralNorm {
        &self.norm
    }

    /// The face `E` of the dual ball.
    pub fn face(&self) -> &Face {
        &self.face
    }

    /// The canonical basepoint, orthogonal to the span of `E°`.
    pub fn basepoint(&self) -> &Vector {
        &self.basepoint
    }

    pub fn face_points(&self) -> Vec<Vector> {
        self.norm.dual_ball().face_points(&self.face)
    }

    /// `h(y) = |p - y|_E - |p|_E`.
    pub fn eval(&self, y: &Vector) -> Result<Scalar> {
        self.norm.check(y)?;
        let p = &self.basepoint;
        Ok(self.norm.face_pseudo_norm(&self.face, &(p - y))? - self.norm.face_pseudo_norm(&self.face, p)?)
    }

    /// Exact equality of the two functions. Fails for different norms.
    pub fn equals(&self, other: &Horofunction) -> Result<bool> {
        if self.norm != other.norm {
            return Err(Error::MismatchedNorms);
        }
        Ok(self.face == other.face && self.basepoint == other.basepoint)
    }

    /// A point of the relative interior of `E` representing this
    /// horofunction in the dual ball.
    ///
    /// Vertex faces map to the vertex. Otherwise the basepoint, which lies
    /// in the direction space of `E`, is compressed by
    /// `p ↦ p / (1 + |p|)` into the open unit ball and then scaled radially
    /// so that the unit sphere lands on the relative boundary of `E`,
    /// centred at the barycenter. The map is injective on each stratum and
    /// sends `p = 0` to the barycenter.
    pub fn to_dual_point(&self) -> Vec<f64> {
        let dual = self.norm.dual_ball();
        let center = dual.relative_interior_point(&self.face).to_f64();
        if self.face.dim() == 0 || self.basepoint.is_zero() {
            return center;
        }
        let p = self.basepoint.to_f64();
        let len = p.iter().map(|x| x * x).sum::<f64>().sqrt();
        let dir: Vec<f64> = p.iter().map(|x| x / len).collect();
        let face_poly = Polytope::convex_hull(&self.face_points()).expect("faces are nonempty");
        let reach = face_poly
            .facets()
            .iter()
            .filter_map(|h| {
                let n = h.normal().to_f64();
                let along = dot(&n, &dir);
                (along < 0.0).then(|| (dot(&n, &center) - rational::to_f64(h.offset())) / -along)
            })
            .fold(f64::INFINITY, f64::min);
        let r = len / (1.0 + len) * reach;
        center.iter().zip(&dir).map(|(c, d)| c + r * d).collect()
    }

    pub fn to_json(&self) -> HorofunctionJson {
        HorofunctionJson { face: self.face.vertex_indices().to_vec(), p: self.basepoint.clone() }
    }

    pub fn from_json(norm: &PolyhedralNorm, raw: &HorofunctionJson) -> Result<Self> {
        Self::new(norm, &raw.face, &raw.p)
    }
}

/// Serialized horofunction: vertex indices into the dual ball and the
/// canonical basepoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HorofunctionJson {
    pub face: Vec<usize>,
    pub p: Vector,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Projector onto the linear span of `E°`, the face of `B` dual to `E`.
fn dual_face_span(norm: &PolyhedralNorm, face: &Face) -> Result<Projector> {
    let dual_face = norm.dual_ball().dual_face(face)?;
    // Vertex j of the polar of B° is vertex j of B.
    let ball = norm.ball();
    let points: Vec<Vector> = dual_face.vertex_indices().iter().map(|&i| ball.vertices()[i].clone()).collect();
    Ok(Projector::onto_span(&points, norm.ambient_dim()))
}

pub fn make_horofunction(norm: &PolyhedralNorm, face: &Face, p: &Vector) -> Result<Horofunction> {
    Horofunction::from_face(norm, face, p)
}

pub fn horofunctions_equal(a: &Horofunction, b: &Horofunction) -> Result<bool> {
    a.equals(b)
}

pub fn stratum_to_dual_point(h: &Horofunction) -> Vec<f64> {
    h.to_dual_point()
}

/// `psi_z(y) = d(y, z) - d(0, z)`.
pub fn psi(norm: &PolyhedralNorm, z: &Vector, y: &Vector) -> Result<Scalar> {
    norm.psi(z, y)
}

/// The limit of `psi_{q + t u}` as `t → ∞`.
///
/// For large `t` the minimum of `<w | q + t u - y>` over `w ∈ B°` is
/// attained on the face `E` where `<·|u>` is smallest, which leaves
/// `h_{E,q}`.
pub fn limit_of_ray(norm: &PolyhedralNorm, q: &Vector, u: &Vector) -> Result<Horofunction> {
    norm.check(q)?;
    norm.check(u)?;
    if u.is_zero() {
        return Err(Error::ZeroDirection);
    }
    let (_, argmin) = norm.dual_ball().minimize(u);
    Horofunction::new(norm, &argmin, q)
}

/// One stratum of the boundary: horofunctions with a fixed face `E`,
/// parametrized by a space of dimension `dim E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stratum {
    pub face: Face,
    pub parameter_dim: usize,
}

/// One stratum per proper face of the dual ball, ordered by dimension.
pub fn enumerate_strata(norm: &PolyhedralNorm) -> Vec<Stratum> {
    let dual = norm.dual_ball();
    dual.face_lattice()
        .into_iter()
        .filter(|f| f.is_proper_in(dual))
        .map(|face| Stratum { parameter_dim: face.dim(), face })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WalshReport {
    pub satisfied: bool,
    pub extreme_set_count: usize,
}

/// Every horofunction is a Busemann point when the extreme sets of the
/// dual ball form a closed family. For a polytope that family is the
/// finite face lattice, so the criterion always holds; the report carries
/// the number of extreme sets, the dual ball itself included.
pub fn walsh_criterion(norm: &PolyhedralNorm) -> WalshReport {
    WalshReport { satisfied: true, extreme_set_count: norm.dual_ball().face_lattice().len() }
}

#[cfg(test)]
mod tests;
