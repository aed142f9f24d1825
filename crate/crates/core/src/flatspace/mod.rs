//! The symmetric space `SL(n,R)/SO(n)` with a `W`-invariant polyhedral
//! Finsler metric, in floating point.
//!
//! Points are symmetric positive definite matrices of determinant one; the
//! basepoint is the identity and `g` acts by `x ↦ g x gᵀ`. The maximal flat
//! through the basepoint consists of the points `exp(H)` for trace-zero
//! diagonal `H`, reached from the identity by the group element `exp(H/2)`.
//!
//! The distance is `d(P, Q) = ‖μ(P, Q)‖`, where the Cartan projection
//! `μ(P, Q)` is the sorted vector of logarithms of the eigenvalues of
//! `P⁻¹Q`. On the flat it restricts to `d(exp(H₁), exp(H₂)) = ‖H₂ - H₁‖`.

mod invariance;
mod sequence;

use nalgebra::{DMatrix, SVD};

use crate::error::{Error, Result};
use crate::norm::PolyhedralNorm;
use crate::rational::Vector;
use crate::rootsys::{RootKind, RootSystem};
use crate::satake::is_weyl_invariant;

pub use invariance::{invariance_suite, random_point, random_rotation, BlockGroup, DecayCurve, InvarianceConfig, InvarianceReport};
pub use sequence::{
    flat_limit_consistency, ray_type, sample_type, ConsistencyReport, FlatRay, Outcome, SequenceType,
};

/// Largest condition number accepted by [`cartan_projection`].
pub const MAX_CONDITION: f64 = 1e12;
const SYMMETRY_TOL: f64 = 1e-12;
const DET_TOL: f64 = 1e-9;
const TRACE_TOL: f64 = 1e-12;

/// A trace-zero vector of the Cartan subspace.
#[derive(Clone, Debug, PartialEq)]
pub struct FlatVector(Vec<f64>);

impl FlatVector {
    pub fn new(h: Vec<f64>) -> Result<Self> {
        let scale = h.iter().fold(1.0_f64, |m, x| m.max(x.abs()));
        let trace: f64 = h.iter().sum();
        if trace.abs() > TRACE_TOL * scale * h.len() as f64 {
            return Err(Error::NotInSpan);
        }
        Ok(Self(h))
    }

    pub fn from_rational(v: &Vector) -> Result<Self> {
        Self::new(v.to_f64())
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Entries sorted in decreasing order: the dominant representative for
    /// type A.
    pub fn sorted(&self) -> FlatVector {
        let mut h = self.0.clone();
        h.sort_by(|a, b| b.total_cmp(a));
        FlatVector(h)
    }
}

/// A point of `SL(n,R)/SO(n)`, `n <= 4`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpdPoint(DMatrix<f64>);

impl SpdPoint {
    pub fn new(m: DMatrix<f64>) -> Result<Self> {
        let n = m.nrows();
        if n != m.ncols() || n == 0 || n > 4 {
            return Err(Error::NotSpd(format!("expected a square matrix of size 1 to 4, got {}x{}", m.nrows(), m.ncols())));
        }
        let scale = m.amax().max(1.0);
        if (&m - m.transpose()).amax() > SYMMETRY_TOL * scale {
            return Err(Error::NotSpd("not symmetric".into()));
        }
        let chol = m.clone().cholesky().ok_or_else(|| Error::NotSpd("not positive definite".into()))?;
        let det = chol.l().diagonal().product().powi(2);
        if (det - 1.0).abs() > DET_TOL {
            return Err(Error::NotSpd(format!("determinant {det} is not 1")));
        }
        Ok(Self(m))
    }

    pub fn identity(n: usize) -> Self {
        Self(DMatrix::identity(n, n))
    }

    /// `exp(H)` on the flat.
    pub fn flat(h: &FlatVector) -> Self {
        Self(DMatrix::from_diagonal(&h.coords().iter().map(|x| x.exp()).collect::<Vec<_>>().into()))
    }

    /// `g x gᵀ`, symmetrized against rounding.
    pub fn act(&self, g: &DMatrix<f64>) -> Result<Self> {
        let m = g * &self.0 * g.transpose();
        Self::new((&m + m.transpose()) * 0.5)
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    fn cholesky_factor(&self) -> DMatrix<f64> {
        self.0.clone().cholesky().expect("validated on construction").l()
    }
}

fn condition(l: &DMatrix<f64>) -> f64 {
    let s = SVD::new(l.clone(), false, false).singular_values;
    (s.max() / s.min()).powi(2)
}

/// Sorted logarithms of the eigenvalues of `P⁻¹Q`, recentred to trace
/// zero.
///
/// With `P = L Lᵀ` and `Q = M Mᵀ` these are the squared singular values of
/// `L⁻¹M`; working with the factor halves the exponent of the condition
/// number compared to an eigensolver on `L⁻¹ Q L⁻ᵀ`.
pub fn cartan_projection(p: &SpdPoint, q: &SpdPoint) -> Result<FlatVector> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let lp = p.cholesky_factor();
    let lq = q.cholesky_factor();
    for l in [&lp, &lq] {
        let c = condition(l);
        if !(c <= MAX_CONDITION) {
            return Err(Error::IllConditioned(c));
        }
    }
    let m = lp.solve_lower_triangular(&lq).expect("Cholesky factors are invertible");
    let sv = SVD::new(m, false, false).singular_values;
    let mut logs: Vec<f64> = sv.iter().map(|s| 2.0 * s.ln()).collect();
    let mean = logs.iter().sum::<f64>() / logs.len() as f64;
    for x in &mut logs {
        *x -= mean;
    }
    Ok(FlatVector(logs).sorted())
}

/// A `W`-invariant polyhedral norm on the trace-zero diagonal matrices,
/// evaluated in floating point.
#[derive(Clone, Debug)]
pub struct FlatNorm {
    norm: PolyhedralNorm,
    dual: Vec<Vec<f64>>,
}

impl FlatNorm {
    /// Requires a ball in `R^n` spanning the trace-zero hyperplane and
    /// invariant under permutation of coordinates.
    pub fn new(norm: PolyhedralNorm) -> Result<Self> {
        let n = norm.ambient_dim();
        if !(2..=4).contains(&n) {
            return Err(Error::UnsupportedRootSystem { kind: 'A', rank: n.saturating_sub(1) });
        }
        if norm.dim() != n - 1 {
            return Err(Error::NotFullDimensional { affine: norm.dim(), ambient: n - 1 });
        }
        let weyl = RootSystem::build(RootKind::A, n - 1)?.weyl_group()?;
        if !is_weyl_invariant(&weyl, norm.ball()) {
            return Err(Error::NotWeylInvariant);
        }
        let dual = norm.dual_ball().vertices().iter().map(|q| q.to_f64()).collect();
        Ok(Self { norm, dual })
    }

    pub fn norm(&self) -> &PolyhedralNorm {
        &self.norm
    }

    pub fn n(&self) -> usize {
        self.norm.ambient_dim()
    }

    /// `‖h‖ = -min <q|h>` over the vertices of the dual ball.
    pub fn gauge(&self, h: &FlatVector) -> f64 {
        -self
            .dual
            .iter()
            .map(|q| q.iter().zip(h.coords()).map(|(a, b)| a * b).sum::<f64>())
            .fold(f64::INFINITY, f64::min)
    }

    pub fn distance(&self, p: &SpdPoint, q: &SpdPoint) -> Result<f64> {
        if p.dim() != self.n() {
            return Err(Error::DimensionMismatch { expected: self.n(), found: p.dim() });
        }
        Ok(self.gauge(&cartan_projection(p, q)?))
    }

    /// `psi_z(x) = d(x, z) - d(p₀, z)`.
    pub fn psi(&self, z: &SpdPoint, x: &SpdPoint) -> Result<f64> {
        Ok(self.distance(x, z)? - self.distance(&SpdPoint::identity(self.n()), z)?)
    }
}

pub fn finsler_distance(norm: &FlatNorm, p: &SpdPoint, q: &SpdPoint) -> Result<f64> {
    norm.distance(p, q)
}

pub fn psi_x(norm: &FlatNorm, z: &SpdPoint, x: &SpdPoint) -> Result<f64> {
    norm.psi(z, x)
}
