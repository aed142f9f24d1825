use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::norm::PolyhedralNorm;
use crate::rational::{self, int, Scalar, Vector};

use super::limit_of_ray;

/// Finitely many terms of a sequence, with the basepoint `b` it is
/// measured from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceSample {
    pub points: Vec<Vector>,
    pub basepoint: Vector,
}

impl SequenceSample {
    pub fn new(points: Vec<Vector>, basepoint: Vector) -> Self {
        Self { points, basepoint }
    }

    /// `x_n = q + t_n u` for the given times.
    pub fn along_ray(ray: &Ray, times: &[Scalar]) -> Self {
        let points = times.iter().map(|t| ray.at(t)).collect();
        Self { points, basepoint: Vector::zeros(ray.q.dim()) }
    }

    fn tail(&self, start: usize, norm: &PolyhedralNorm, eps: &Scalar) -> Result<&[Vector]> {
        if !eps.is_positive() {
            return Err(Error::DegenerateSample("epsilon must be positive".into()));
        }
        norm.check(&self.basepoint)?;
        for p in &self.points {
            norm.check(p)?;
        }
        if self.points.windows(2).all(|w| w[0] == w[1]) {
            return Err(Error::DegenerateSample("all points are equal".into()));
        }
        match self.points.get(start..) {
            Some(tail) if tail.len() >= 2 => Ok(tail),
            _ => Err(Error::DegenerateSample("fewer than two points past the tail start".into())),
        }
    }
}

/// The ray `t ↦ q + t u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ray {
    pub q: Vector,
    pub u: Vector,
}

impl Ray {
    pub fn new(q: Vector, u: Vector) -> Self {
        Self { q, u }
    }

    pub fn at(&self, t: &Scalar) -> Vector {
        self.q.add_scaled(t, &self.u)
    }
}

fn pairwise(norm: &PolyhedralNorm, points: &[Vector]) -> Result<Vec<Vec<Scalar>>> {
    points
        .iter()
        .map(|x| points.iter().map(|y| norm.distance(x, y)).collect())
        .collect()
}

/// Whether the tail of the sample is an almost geodesic:
/// `d(b, x_m) + d(x_m, x_n) < d(b, x_n) + ε` for all tail indices `m < n`,
/// and the distance from `b` grows across the tail.
pub fn almost_geodesic_check(norm: &PolyhedralNorm, sample: &SequenceSample, eps: &Scalar, tail_start: usize) -> Result<bool> {
    let tail = sample.tail(tail_start, norm, eps)?;
    let from_b: Vec<Scalar> = tail.iter().map(|x| norm.distance(&sample.basepoint, x)).collect::<Result<_>>()?;
    if from_b.last() <= from_b.first() {
        return Ok(false);
    }
    let d = pairwise(norm, tail)?;
    for m in 0..tail.len() {
        for n in m + 1..tail.len() {
            if &from_b[m] + &d[m][n] >= &from_b[n] + eps {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `d(x_i, x_j) + d(x_j, x_k) < d(x_i, x_k) + ε` for all tail indices
/// `i < j < k`.
pub fn chain_check(norm: &PolyhedralNorm, sample: &SequenceSample, eps: &Scalar, tail_start: usize) -> Result<bool> {
    let tail = sample.tail(tail_start, norm, eps)?;
    let d = pairwise(norm, tail)?;
    let n = tail.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if &d[i][j] + &d[j][k] >= &d[i][k] + eps {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Times `t_n` and weights `λ_n` for the blended sequence
/// `m_n = (1 - λ_n) x_n + λ_n y_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MidpointSchedule {
    pub times: Vec<Scalar>,
    pub lambdas: Vec<Scalar>,
}

const SCHEDULE_START: i64 = 100_000_000;

impl MidpointSchedule {
    pub fn constant(lambda: Scalar, len: usize) -> Self {
        Self { times: default_times(len), lambdas: vec![lambda; len] }
    }

    /// `λ_n` alternating between 0 and 1.
    pub fn alternating(len: usize) -> Self {
        let lambdas = (0..len).map(|n| if n % 2 == 0 { Scalar::zero() } else { Scalar::one() }).collect();
        Self { times: default_times(len), lambdas }
    }
}

fn default_times(len: usize) -> Vec<Scalar> {
    (0..len as i64).map(|n| int(SCHEDULE_START + n)).collect()
}

/// Checks that blending two rays with a common limit `ξ` still converges
/// to `ξ`: `|psi_{m_n}(y) - ξ(y)| <= tol` for every scheduled `n` and
/// every sample point `y`.
pub fn convexity_midpoint_test(
    norm: &PolyhedralNorm,
    first: &Ray,
    second: &Ray,
    schedule: &MidpointSchedule,
    samples: &[Vector],
    tol: f64,
) -> Result<bool> {
    if schedule.times.len() != schedule.lambdas.len() || schedule.times.is_empty() {
        return Err(Error::DegenerateSample("schedule needs one weight per time".into()));
    }
    if schedule.lambdas.iter().any(|l| l.is_negative() || *l > Scalar::one()) {
        return Err(Error::DegenerateSample("weights must lie in [0, 1]".into()));
    }
    let limit = limit_of_ray(norm, &first.q, &first.u)?;
    if !limit.equals(&limit_of_ray(norm, &second.q, &second.u)?)? {
        return Err(Error::DistinctLimits);
    }
    let expected: Vec<Scalar> = samples.iter().map(|y| limit.eval(y)).collect::<Result<_>>()?;
    for (t, lambda) in schedule.times.iter().zip(&schedule.lambdas) {
        let x = first.at(t);
        let y = second.at(t);
        let m = x.scale(&(Scalar::one() - lambda)).add_scaled(lambda, &y);
        for (sample, want) in samples.iter().zip(&expected) {
            let got = norm.psi(&m, sample)?;
            if rational::to_f64(&(got - want)).abs() > tol {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
