use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::Result;
use crate::rootsys::{RootKind, RootSystem};

use super::sequence::{ray_type, FlatRay};
use super::{FlatNorm, FlatVector, SpdPoint};

/// Width of the band within which a decay curve may rise.
pub const DECAY_NOISE: f64 = 1e-6;

#[derive(Clone, Debug)]
pub struct InvarianceConfig {
    /// Random samples for the K-invariance and equivariance checks.
    pub samples: usize,
    pub tolerance: f64,
    pub seed: u64,
    /// Ray `H(t)` in the closed positive chamber; its type fixes the block
    /// groups.
    pub ray: FlatRay,
    pub schedule: Vec<f64>,
    /// Bound on the defect at the last time of the schedule.
    pub decay_threshold: f64,
    /// Group elements and points per decay measurement.
    pub decay_samples: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BlockGroup {
    Identity,
    /// Unipotent upper triangular with zero off-diagonal entries inside the
    /// blocks of the subset.
    #[serde(rename = "N_I")]
    NI,
    /// `a^I k (a^I)⁻¹` with `k` block orthogonal on the blocks of the subset.
    #[serde(rename = "K^I")]
    KI,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecayCurve {
    pub group: BlockGroup,
    /// `(t, max |psi(g x) - psi(x)|)` along the schedule.
    pub defects: Vec<(f64, f64)>,
}

impl DecayCurve {
    pub fn is_monotone(&self) -> bool {
        self.defects.windows(2).all(|w| w[1].1 <= w[0].1 + DECAY_NOISE)
    }

    pub fn last(&self) -> f64 {
        self.defects.last().map_or(0.0, |d| d.1)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvarianceReport {
    /// `max |psi_{p₀}(k x) - psi_{p₀}(x)|`.
    pub k_invariance: f64,
    /// `max |psi_{k z}(x) - psi_z(k⁻¹ x)|`.
    pub equivariance: f64,
    pub subset: Vec<usize>,
    pub decay: Vec<DecayCurve>,
    pub k_invariance_passed: bool,
    pub equivariance_passed: bool,
    pub decay_passed: bool,
}

impl InvarianceReport {
    pub fn passed(&self) -> bool {
        self.k_invariance_passed && self.equivariance_passed && self.decay_passed
    }
}

/// Uniform rotation from the QR decomposition of a Gaussian matrix.
pub fn random_rotation(n: usize, rng: &mut impl Rng) -> DMatrix<f64> {
    let g = DMatrix::from_fn(n, n, |_, _| rng.sample::<f64, _>(StandardNormal));
    let qr = g.qr();
    let r = qr.r();
    let mut q = qr.q();
    for j in 0..n {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    if q.determinant() < 0.0 {
        q.column_mut(0).neg_mut();
    }
    q
}

/// `k diag(exp h) kᵀ` with a random rotation `k` and trace-zero `h` with
/// entries of size at most `spread`.
pub fn random_point(n: usize, spread: f64, rng: &mut impl Rng) -> SpdPoint {
    let mut h: Vec<f64> = (0..n).map(|_| rng.random_range(-spread..=spread)).collect();
    let mean = h.iter().sum::<f64>() / n as f64;
    h.iter_mut().for_each(|x| *x -= mean);
    let k = random_rotation(n, rng);
    SpdPoint::flat(&FlatVector(h)).act(&k).expect("rotations preserve SPD")
}

/// Maximal runs of indices joined by the simple roots in `subset`.
fn blocks(n: usize, subset: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 0..n {
        if i + 1 == n || !subset.contains(&i) {
            out.push((start, i + 1));
            start = i + 1;
        }
    }
    out
}

fn block_of(blocks: &[(usize, usize)], i: usize) -> usize {
    blocks.iter().position(|&(s, e)| (s..e).contains(&i)).expect("blocks cover all indices")
}

fn unipotent(n: usize, blocks: &[(usize, usize)], rng: &mut impl Rng) -> DMatrix<f64> {
    DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            1.0
        } else if i < j && block_of(blocks, i) != block_of(blocks, j) {
            rng.random_range(-0.1..=0.1)
        } else {
            0.0
        }
    })
}

fn block_rotation(n: usize, blocks: &[(usize, usize)], a: &[f64], rng: &mut impl Rng) -> DMatrix<f64> {
    let mut k = DMatrix::identity(n, n);
    for &(s, e) in blocks {
        let r = random_rotation(e - s, rng);
        k.view_mut((s, s), (e - s, e - s)).copy_from(&r);
    }
    let half: Vec<f64> = a.iter().map(|x| (x / 2.0).exp()).collect();
    DMatrix::from_fn(n, n, |i, j| half[i] * k[(i, j)] / half[j])
}

fn max_defect<F>(pairs: impl Iterator<Item = F>) -> Result<f64>
where
    F: FnOnce() -> Result<f64>,
{
    pairs.map(|f| f()).try_fold(0.0_f64, |m, d| Ok(m.max(d?.abs())))
}

/// Runs the three invariance checks for `norm`.
pub fn invariance_suite(norm: &FlatNorm, config: &InvarianceConfig) -> Result<InvarianceReport> {
    let n = norm.n();
    let rs = RootSystem::build(RootKind::A, n - 1)?;
    let ty = ray_type(&rs, &config.ray)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let p0 = SpdPoint::identity(n);

    let mut k_invariance = 0.0_f64;
    let mut equivariance = 0.0_f64;
    for _ in 0..config.samples {
        let x = random_point(n, 1.5, &mut rng);
        let z = random_point(n, 3.0, &mut rng);
        let k = random_rotation(n, &mut rng);
        let kx = x.act(&k)?;
        k_invariance = k_invariance.max((norm.psi(&p0, &kx)? - norm.psi(&p0, &x)?).abs());
        let kz = z.act(&k)?;
        let kinv_x = x.act(&k.transpose())?;
        equivariance = equivariance.max((norm.psi(&kz, &x)? - norm.psi(&z, &kinv_x)?).abs());
    }

    let bl = blocks(n, &ty.subset);
    let points: Vec<SpdPoint> = (0..config.decay_samples).map(|_| random_point(n, 1.0, &mut rng)).collect();
    let groups = [
        (BlockGroup::Identity, vec![DMatrix::identity(n, n)]),
        (BlockGroup::NI, (0..config.decay_samples).map(|_| unipotent(n, &bl, &mut rng)).collect()),
        (BlockGroup::KI, (0..config.decay_samples).map(|_| block_rotation(n, &bl, &ty.limit, &mut rng)).collect()),
    ];
    let mut decay = Vec::new();
    for (group, elements) in groups {
        let moved: Vec<Vec<SpdPoint>> =
            elements.iter().map(|g| points.iter().map(|x| x.act(g)).collect::<Result<_>>()).collect::<Result<_>>()?;
        let mut defects = Vec::new();
        for &t in &config.schedule {
            let z = config.ray.point(t)?;
            let base: Vec<f64> = points.iter().map(|x| norm.psi(&z, x)).collect::<Result<_>>()?;
            let d = max_defect(moved.iter().flat_map(|row| {
                row.iter().zip(&base).map(|(gx, b)| {
                    let z = &z;
                    move || Ok(norm.psi(z, gx)? - b)
                })
            }))?;
            defects.push((t, d));
        }
        decay.push(DecayCurve { group, defects });
    }

    let decay_passed = decay.iter().all(|c| c.is_monotone() && c.last() <= config.decay_threshold);
    Ok(InvarianceReport {
        k_invariance_passed: k_invariance <= config.tolerance,
        equivariance_passed: equivariance <= config.tolerance,
        k_invariance,
        equivariance,
        subset: ty.subset,
        decay,
        decay_passed,
    })
}
