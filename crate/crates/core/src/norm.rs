//! Polyhedral, possibly asymmetric norms.
//!
//! A norm is given by its unit ball `B`, a polytope with the origin in its
//! relative interior. The norm lives on the linear span of `B`; vectors
//! outside that span are rejected rather than assigned an infinite norm.

use std::fmt;
use std::sync::Arc;

use itertools::Itertools;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Projector};
use crate::polytope::{Face, Polytope};
use crate::rational::{Scalar, Vector};

struct Inner {
    ball: Polytope,
    dual_ball: Polytope,
    span: Option<Projector>,
}

/// The norm `‖v‖ = min{t >= 0 : v ∈ tB}`.
///
/// Cloning is cheap; clones share the cached polar.
#[derive(Clone)]
pub struct PolyhedralNorm {
    inner: Arc<Inner>,
}

impl PolyhedralNorm {
    pub fn new(ball: Polytope) -> Result<Self> {
        let dual_ball = ball.polar_dual()?;
        let span = (!ball.is_full_dimensional()).then(|| ball.direction_projector());
        Ok(Self { inner: Arc::new(Inner { ball, dual_ball, span }) })
    }

    pub fn ball(&self) -> &Polytope {
        &self.inner.ball
    }

    /// The polar `B° = {y : <y|x> >= -1 on B}`.
    pub fn dual_ball(&self) -> &Polytope {
        &self.inner.dual_ball
    }

    pub fn ambient_dim(&self) -> usize {
        self.inner.ball.ambient_dim()
    }

    /// Dimension of the space the norm is defined on.
    pub fn dim(&self) -> usize {
        self.inner.ball.affine_dim()
    }

    /// Checks that `v` has the right length and lies in the span of the ball.
    pub fn check(&self, v: &Vector) -> Result<()> {
        v.check_dim(self.ambient_dim())?;
        match &self.inner.span {
            Some(span) if !span.contains(v) => Err(Error::NotInSpan),
            _ => Ok(()),
        }
    }

    /// `‖v‖`, computed as `|v|_{B°} = -min <q|v>` over vertices `q` of `B°`.
    pub fn gauge(&self, v: &Vector) -> Result<Scalar> {
        self.check(v)?;
        Ok(support_min(self.dual_ball().vertices(), v))
    }

    /// Asymmetric distance `d(x, z) = ‖z - x‖`.
    pub fn distance(&self, x: &Vector, z: &Vector) -> Result<Scalar> {
        x.check_dim(self.ambient_dim())?;
        self.gauge(&(z - x))
    }

    /// Normalized distance `d(y, z) - d(0, z)`.
    pub fn psi(&self, z: &Vector, y: &Vector) -> Result<Scalar> {
        Ok(self.distance(y, z)? - self.gauge(z)?)
    }

    /// `|p|_E` for a face `E` of the dual ball.
    pub fn face_pseudo_norm(&self, face: &Face, p: &Vector) -> Result<Scalar> {
        self.check(p)?;
        let dual = self.dual_ball();
        Ok(support_min(face.vertex_indices().iter().map(|&i| &dual.vertices()[i]), p))
    }
}

impl PartialEq for PolyhedralNorm {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.ball == other.inner.ball
    }
}

impl Eq for PolyhedralNorm {}

impl fmt::Debug for PolyhedralNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolyhedralNorm").field("ball", &self.inner.ball.vertices()).finish()
    }
}

fn support_min<'a>(points: impl IntoIterator<Item = &'a Vector>, p: &Vector) -> Scalar {
    -points.into_iter().map(|q| q.dot(p)).min().expect("nonempty point set")
}

/// The pseudo-norm `|p|_C = -min_{q ∈ C} <q|p>` of the convex hull `C` of
/// `points`. The minimum of a linear function is attained at a point of
/// the list, so no hull is computed.
pub fn pseudo_norm(points: &[Vector], p: &Vector) -> Result<Scalar> {
    if points.is_empty() {
        return Err(Error::EmptyInput);
    }
    for q in points {
        q.check_dim(p.dim())?;
    }
    Ok(support_min(points, p))
}

/// Minkowski functional computed from the vertices of `B` alone.
///
/// `min{t : v ∈ tB}` is the linear program `min Σλ` subject to
/// `Σ λ_i a_i = v`, `λ >= 0`. Its optimum is attained at a basic solution,
/// so this enumerates every basis of vertices once and solves each
/// query by a matrix-vector product. Meant as an independent check of
/// [`PolyhedralNorm::gauge`], not as a fast path.
pub struct VertexGauge {
    dim: usize,
    span: Option<Projector>,
    // For each basis, the map v -> coefficients of v in that basis.
    solvers: Vec<Vec<Vector>>,
}

impl VertexGauge {
    pub fn new(ball: &Polytope) -> Result<Self> {
        if !ball.has_origin_in_relative_interior() {
            return Err(Error::OriginNotInterior);
        }
        let k = ball.affine_dim();
        let verts = ball.vertices();
        let mut solvers = Vec::new();
        for subset in (0..verts.len()).combinations(k) {
            let rows: Vec<Vector> = subset.iter().map(|&i| verts[i].clone()).collect();
            let gram: Vec<Vector> = rows.iter().map(|a| rows.iter().map(|b| a.dot(b)).collect()).collect();
            let Some(inv) = linalg::invert(&gram) else {
                continue;
            };
            // lambda = G^{-1} A v, precomputed as the rows of G^{-1} A.
            let solver: Vec<Vector> = inv
                .iter()
                .map(|g| {
                    g.iter()
                        .zip(&rows)
                        .fold(Vector::zeros(ball.ambient_dim()), |acc, (c, a)| acc.add_scaled(c, a))
                })
                .collect();
            solvers.push(solver);
        }
        let span = (!ball.is_full_dimensional()).then(|| ball.direction_projector());
        Ok(Self { dim: ball.ambient_dim(), span, solvers })
    }

    pub fn eval(&self, v: &Vector) -> Result<Scalar> {
        v.check_dim(self.dim)?;
        if let Some(span) = &self.span {
            if !span.contains(v) {
                return Err(Error::NotInSpan);
            }
        }
        if v.is_zero() {
            return Ok(Scalar::zero());
        }
        self.solvers
            .iter()
            .filter_map(|solver| {
                let lambda: Vec<Scalar> = solver.iter().map(|row| row.dot(v)).collect();
                lambda.iter().all(|l| !l.is_negative()).then(|| lambda.into_iter().sum::<Scalar>())
            })
            .min()
            .ok_or(Error::Infeasible)
    }
}
