//! Independent oracles and generators shared by the integration tests.
#![allow(dead_code)]

use horopoly::rational::{frac, int};
use horopoly::satake::{satake_ball, weight_hull, WeightSpec};
use horopoly::{PolyhedralNorm, Polytope, Scalar, Vector};
use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub fn v(c: &[i64]) -> Vector {
    Vector::from_ints(c)
}

pub fn random_scalar(rng: &mut impl Rng, range: i64, max_den: i64) -> Scalar {
    frac(rng.random_range(-range..=range), rng.random_range(1..=max_den))
}

pub fn random_vector(rng: &mut impl Rng, dim: usize, range: i64, max_den: i64) -> Vector {
    Vector::new((0..dim).map(|_| random_scalar(rng, range, max_den)).collect())
}

/// A random vector in the linear span of the ball, as a combination of its
/// vertices.
pub fn random_vector_in_span(rng: &mut impl Rng, ball: &Polytope, range: i64, max_den: i64) -> Vector {
    let mut out = Vector::zeros(ball.ambient_dim());
    for x in ball.vertices() {
        out = out.add_scaled(&random_scalar(rng, range, max_den), x);
    }
    out
}

/// Full-dimensional polytope with the origin in its interior, hull of
/// `count` random rational points.
pub fn random_polytope(rng: &mut impl Rng, dim: usize, count: usize) -> Polytope {
    loop {
        let points: Vec<Vector> = (0..count).map(|_| random_vector(rng, dim, 12, 4)).collect();
        if let Ok(p) = Polytope::convex_hull(&points) {
            if p.is_full_dimensional() && p.has_origin_in_relative_interior() {
                return p;
            }
        }
    }
}

/// Solves `A x = b` over the rationals by Gauss-Jordan elimination;
/// `None` unless the solution is unique.
pub fn solve_unique(rows: &[Vector], rhs: &[Scalar]) -> Option<Vector> {
    let n = rows.first()?.dim();
    let mut m: Vec<Vec<Scalar>> =
        rows.iter().zip(rhs).map(|(r, b)| r.coords().iter().cloned().chain([b.clone()]).collect()).collect();
    let mut row = 0;
    for col in 0..n {
        let pivot = (row..m.len()).find(|&r| !m[r][col].is_zero())?;
        m.swap(row, pivot);
        let p = m[row][col].clone();
        for x in &mut m[row] {
            *x = &*x / &p;
        }
        for r in 0..m.len() {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..=n {
                    let sub = &f * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        row += 1;
    }
    if m[row..].iter().any(|r| !r[n].is_zero()) {
        return None;
    }
    Some(Vector::new((0..n).map(|i| m[i][n].clone()).collect()))
}

/// Facet functionals of a full-dimensional polytope with the origin in its
/// interior, by checking every `dim`-subset of the points: `y` with
/// `<y|x> >= -1` on all points and equality on the subset.
pub fn brute_force_functionals(points: &[Vector]) -> Vec<Vector> {
    let dim = points[0].dim();
    let minus_one = vec![-Scalar::one(); dim];
    let mut out: Vec<Vector> = points
        .iter()
        .combinations(dim)
        .filter_map(|subset| {
            let rows: Vec<Vector> = subset.into_iter().cloned().collect();
            let y = solve_unique(&rows, &minus_one)?;
            points.iter().all(|x| y.dot(x) >= -Scalar::one()).then_some(y)
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Minkowski functional `inf {λ >= 0 : v ∈ λB}` read off facet functionals
/// `<y|x> >= -1`.
pub fn minkowski_functional(functionals: &[Vector], v: &Vector) -> Scalar {
    functionals.iter().map(|y| -y.dot(v)).fold(Scalar::zero(), |m, x| if x > m { x } else { m })
}

pub fn abs(x: &Scalar) -> Scalar {
    x.abs()
}

pub fn l1_ball() -> Polytope {
    Polytope::convex_hull(&[v(&[1, 0]), v(&[0, 1]), v(&[-1, 0]), v(&[0, -1])]).unwrap()
}

pub fn triangle() -> Polytope {
    Polytope::convex_hull(&[v(&[2, -1]), v(&[-1, 2]), v(&[-1, -1])]).unwrap()
}

pub fn satake(label: &str, weights: &str) -> Polytope {
    let spec = WeightSpec::parse(label.parse().unwrap(), weights, int(1)).unwrap();
    satake_ball(&weight_hull(&spec).unwrap()).unwrap()
}

/// Balls used by the norm and horofunction suites: symmetric and
/// asymmetric, full-dimensional and lying in a hyperplane.
pub fn test_balls() -> Vec<(&'static str, PolyhedralNorm)> {
    let skew = Polytope::convex_hull(&[v(&[3, 0, 0]), v(&[0, 2, 0]), v(&[0, 0, 1]), v(&[-1, -1, -1]), v(&[1, 1, -2])]).unwrap();
    vec![
        ("l1", l1_ball()),
        ("triangle", triangle()),
        ("A2 hexagon", satake("A2", "adjoint")),
        ("skew simplex", skew),
        ("A3 satake", satake("A3", "adjoint")),
    ]
    .into_iter()
    .map(|(name, b)| (name, PolyhedralNorm::new(b).unwrap()))
    .collect()
}
