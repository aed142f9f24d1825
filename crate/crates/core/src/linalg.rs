//! Exact linear algebra over the rationals: echelon forms, kernels,
//! orthogonal projections, and small square matrices.

use num_traits::{One, Zero};

use crate::rational::{Scalar, Vector};

/// Reduced row echelon form of `rows`, returning the nonzero rows and the
/// pivot column of each.
pub fn rref(rows: &[Vector]) -> (Vec<Vector>, Vec<usize>) {
    let Some(first) = rows.first() else {
        return (Vec::new(), Vec::new());
    };
    let ncols = first.dim();
    let mut m: Vec<Vec<Scalar>> = rows.iter().map(|r| r.coords().to_vec()).collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for c in col..ncols {
            m[row][c] = &m[row][c] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in col..ncols {
                    let delta = &factor * &m[row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    m.truncate(row);
    (m.into_iter().map(Vector::new).collect(), pivots)
}

pub fn rank(rows: &[Vector]) -> usize {
    rref(rows).1.len()
}

/// Dimension of the affine hull of `points` (0 for a single point).
pub fn affine_dim(points: &[Vector]) -> usize {
    match points.split_first() {
        None => 0,
        Some((p0, rest)) => {
            let diffs: Vec<Vector> = rest.iter().map(|p| p - p0).collect();
            rank(&diffs)
        }
    }
}

/// Basis of `{x : <r, x> = 0 for every row r}` in dimension `dim`.
pub fn nullspace(rows: &[Vector], dim: usize) -> Vec<Vector> {
    let (reduced, pivots) = rref(rows);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = Vector::zeros(dim).into_inner();
            v[f] = Scalar::one();
            for (r, &p) in reduced.iter().zip(&pivots) {
                v[p] = -r[f].clone();
            }
            Vector::new(v)
        })
        .collect()
}

/// Solves `a x = b` for square, nonsingular `a` (given by rows).
pub fn solve(a: &[Vector], b: &Vector) -> Option<Vector> {
    let n = a.len();
    let augmented: Vec<Vector> = a
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| row.iter().cloned().chain(std::iter::once(bi.clone())).collect())
        .collect();
    let (reduced, pivots) = rref(&augmented);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(reduced.iter().map(|r| r[n].clone()).collect())
}

/// Orthogonal projection onto the span of a set of vectors, with respect to
/// the standard inner product.
#[derive(Clone, Debug)]
pub struct Projector {
    dim: usize,
    basis: Vec<Vector>,
    gram_inverse: Vec<Vector>,
}

impl Projector {
    pub fn onto_span(vectors: &[Vector], dim: usize) -> Self {
        let basis = rref(vectors).0;
        let k = basis.len();
        let gram: Vec<Vector> = basis
            .iter()
            .map(|a| basis.iter().map(|b| a.dot(b)).collect())
            .collect();
        let gram_inverse = invert(&gram).unwrap_or_else(|| {
            debug_assert_eq!(k, 0);
            Vec::new()
        });
        Self { dim, basis, gram_inverse }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn project(&self, v: &Vector) -> Vector {
        let rhs: Vec<Scalar> = self.basis.iter().map(|b| b.dot(v)).collect();
        let mut out = Vector::zeros(self.dim);
        for (row, b) in self.gram_inverse.iter().zip(&self.basis) {
            let c: Scalar = row.iter().zip(&rhs).map(|(g, r)| g * r).sum();
            if !c.is_zero() {
                out = out.add_scaled(&c, b);
            }
        }
        out
    }

    /// `v` minus its projection.
    pub fn reject(&self, v: &Vector) -> Vector {
        v - &self.project(v)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.reject(v).is_zero()
    }
}

/// Inverse of a square matrix given by rows.
pub fn invert(rows: &[Vector]) -> Option<Vec<Vector>> {
    let n = rows.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let augmented: Vec<Vector> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| r.iter().cloned().chain(Vector::unit(n, i).into_inner()).collect())
        .collect();
    let (reduced, pivots) = rref(&augmented);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(reduced.iter().map(|r| r.coords()[n..].iter().cloned().collect()).collect())
}

/// Square rational matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    rows: Vec<Vector>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        Self { rows: (0..n).map(|i| Vector::unit(n, i)).collect() }
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        Self { rows }
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        self.rows.iter().map(|r| r.dot(v)).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim();
        Self {
            rows: (0..n).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect(),
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let t = other.transpose();
        Self {
            rows: self
                .rows
                .iter()
                .map(|r| t.rows.iter().map(|c| r.dot(c)).collect())
                .collect(),
        }
    }

    /// Reflection through the hyperplane orthogonal to `normal`.
    pub fn reflection(normal: &Vector) -> Self {
        let n = normal.dim();
        let two_over = Scalar::from_integer(2.into()) / normal.norm_squared();
        Self {
            rows: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
                            delta - &two_over * &normal[i] * &normal[j]
                        })
                        .collect()
                })
                .collect(),
        }
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Matrix::identity(self.dim())
    }
}
