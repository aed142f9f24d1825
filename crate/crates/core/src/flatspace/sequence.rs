use nalgebra::{DMatrix, DVector};
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::horoboundary::limit_of_ray;
use crate::linalg::Projector;
use crate::rational::{self, Vector};
use crate::rootsys::{RootKind, RootSystem};

use super::{FlatNorm, FlatVector, SpdPoint};

/// The affine ray `H(t) = start + t·direction` in the Cartan subspace, with
/// exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatRay {
    pub start: Vector,
    pub direction: Vector,
}

impl FlatRay {
    pub fn new(start: Vector, direction: Vector) -> Self {
        Self { start, direction }
    }

    pub fn at(&self, t: f64) -> Result<FlatVector> {
        let h = self.start.to_f64().iter().zip(self.direction.to_f64()).map(|(a, u)| a + t * u).collect();
        FlatVector::new(h)
    }

    /// The point `exp(H(t))`.
    pub fn point(&self, t: f64) -> Result<SpdPoint> {
        Ok(SpdPoint::flat(&self.at(t)?))
    }
}

/// Which simple roots stay bounded along a sequence (`subset`, as indices)
/// and the limit `a^I` of its projection to the span of those roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SequenceType {
    pub subset: Vec<usize>,
    pub limit: Vec<f64>,
}

/// Exact type of a ray whose direction lies in the closed positive chamber.
pub fn ray_type(rs: &RootSystem, ray: &FlatRay) -> Result<SequenceType> {
    ray.start.check_dim(rs.ambient_dim())?;
    ray.direction.check_dim(rs.ambient_dim())?;
    if ray.direction.is_zero() {
        return Err(Error::BoundedSequence);
    }
    if !rs.is_dominant(&ray.direction) {
        return Err(Error::NotDominant);
    }
    let subset: Vec<usize> = (0..rs.rank()).filter(|&i| rs.simple_roots()[i].dot(&ray.direction).is_zero()).collect();
    let roots: Vec<Vector> = subset.iter().map(|&i| rs.simple_roots()[i].clone()).collect();
    let limit = Projector::onto_span(&roots, rs.ambient_dim()).project(&ray.start).to_f64();
    Ok(SequenceType { subset, limit })
}

/// Type of a sampled sequence in the closed positive chamber. A simple root
/// counts as converging when it varies by at most `tol` over the second
/// half of the samples; the limit is read off the last sample.
pub fn sample_type(rs: &RootSystem, samples: &[FlatVector], tol: f64) -> Result<SequenceType> {
    if samples.len() < 3 {
        return Err(Error::DegenerateSample("need at least three samples".into()));
    }
    let roots: Vec<Vec<f64>> = rs.simple_roots().iter().map(|a| a.to_f64()).collect();
    let value = |a: &[f64], h: &FlatVector| a.iter().zip(h.coords()).map(|(x, y)| x * y).sum::<f64>();
    for h in samples {
        if h.dim() != rs.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: rs.ambient_dim(), found: h.dim() });
        }
        if roots.iter().any(|a| value(a, h) < -tol) {
            return Err(Error::NotDominant);
        }
    }
    let tail = &samples[samples.len() / 2..];
    let subset: Vec<usize> = (0..rs.rank())
        .filter(|&i| {
            let vals: Vec<f64> = tail.iter().map(|h| value(&roots[i], h)).collect();
            let hi = vals.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let lo = vals.iter().cloned().fold(f64::INFINITY, f64::min);
            hi - lo <= tol
        })
        .collect();
    if subset.len() == rs.rank() {
        return Err(Error::BoundedSequence);
    }
    let last = samples.last().expect("checked nonempty");
    let limit = project_f64(&subset.iter().map(|&i| roots[i].clone()).collect::<Vec<_>>(), last.coords());
    Ok(SequenceType { subset, limit })
}

/// Orthogonal projection of `v` onto the span of `basis`.
fn project_f64(basis: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    if basis.is_empty() {
        return vec![0.0; v.len()];
    }
    let a = DMatrix::from_fn(v.len(), basis.len(), |r, c| basis[c][r]);
    let gram = a.transpose() * &a;
    let rhs = a.transpose() * DVector::from_column_slice(v);
    let coeffs = gram.cholesky().expect("simple roots are independent").solve(&rhs);
    (a * coeffs).iter().copied().collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Passed,
    /// Still above tolerance at the largest time but improving.
    Inconclusive,
    Failed,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub outcome: Outcome,
    /// `(t, max defect over the test points)` for increasing `t`.
    pub defects: Vec<(f64, f64)>,
    pub tolerance: f64,
}

/// Compares `psi_X` centred at `exp(H(t))` with the limit horofunction of
/// the ray in the flat, on the flat points `exp(H)` for the given `H`.
///
/// Times run over `t_max / 1000, t_max / 100, t_max / 10, t_max`.
pub fn flat_limit_consistency(
    norm: &FlatNorm,
    ray: &FlatRay,
    points: &[Vector],
    t_max: f64,
    tol: f64,
) -> Result<ConsistencyReport> {
    let n = norm.n();
    let rs = RootSystem::build(RootKind::A, n - 1)?;
    ray_type(&rs, ray)?;
    let limit = limit_of_ray(norm.norm(), &ray.start, &ray.direction)?;
    let targets: Vec<(SpdPoint, f64)> = points
        .iter()
        .map(|h| Ok((SpdPoint::flat(&FlatVector::from_rational(h)?), rational::to_f64(&limit.eval(h)?))))
        .collect::<Result<_>>()?;
    let mut defects = Vec::new();
    for k in (0..4).rev() {
        let t = t_max / 10f64.powi(k);
        let z = ray.point(t)?;
        let mut worst = 0.0_f64;
        for (x, want) in &targets {
            worst = worst.max((norm.psi(&z, x)? - want).abs());
        }
        defects.push((t, worst));
    }
    let last = defects[defects.len() - 1].1;
    let before = defects[defects.len() - 2].1;
    let outcome = if last <= tol {
        Outcome::Passed
    } else if last < before {
        Outcome::Inconclusive
    } else {
        Outcome::Failed
    };
    Ok(ConsistencyReport { outcome, defects, tolerance: tol })
}
