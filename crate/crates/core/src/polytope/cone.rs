//! Extreme rays of a pointed polyhedral cone `{y : <row_i, y> >= 0}` by the
//! double description method, in exact integer arithmetic.
//!
//! Both directions of the vertex/halfspace conversion reduce to this: facets
//! of `conv(p_i)` are extreme rays of `{(a, b) : <a, p_i> + b >= 0}`, and
//! vertices of `{x : <n_i, x> >= c_i}` are the rays `(x, s)` with `s > 0` of
//! `{(x, s) : <n_i, x> - c_i s >= 0, s >= 0}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::bitset::BitSet;
use crate::linalg;
use crate::rational::{Scalar, Vector};

#[derive(Clone, Debug)]
pub(crate) struct Ray {
    pub coords: Vec<BigInt>,
    /// Constraint rows on which this ray is tight.
    pub zeros: BitSet,
}

/// Clears denominators of a rational row by a positive factor.
pub(crate) fn integer_row(row: &[Scalar]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    row.iter().map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer()).collect()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in &mut v {
            *x /= &g;
        }
    }
    v
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of the cone cut out by `rows` in dimension `dim`, or `None`
/// when the cone contains a line (the rows have rank below `dim`).
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Option<Vec<Ray>> {
    let n = rows.len();
    let as_vector = |r: &Vec<BigInt>| -> Vector {
        r.iter().map(|x| Scalar::from_integer(x.clone())).collect()
    };

    // Greedy choice of `dim` independent rows seeds a simplicial cone.
    let mut basis_rows: Vec<usize> = Vec::with_capacity(dim);
    let mut basis_vectors: Vec<Vector> = Vec::with_capacity(dim);
    for (i, r) in rows.iter().enumerate() {
        let candidate = as_vector(r);
        basis_vectors.push(candidate);
        if linalg::rank(&basis_vectors) == basis_vectors.len() {
            basis_rows.push(i);
            if basis_rows.len() == dim {
                break;
            }
        } else {
            basis_vectors.pop();
        }
    }
    if basis_rows.len() < dim {
        return None;
    }

    let inverse = linalg::invert(&basis_vectors)?;
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let column: Vec<Scalar> = inverse.iter().map(|row| row[j].clone()).collect();
            let coords = primitive(integer_row(&column));
            let zeros = BitSet::from_indices(n, basis_rows.iter().enumerate().filter(|&(i, _)| i != j).map(|(_, &r)| r));
            Ray { coords, zeros }
        })
        .collect();

    for (k, row) in rows.iter().enumerate() {
        if basis_rows.contains(&k) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(&r.coords, row)).collect();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for (i, v) in values.iter().enumerate() {
            if v.is_positive() {
                positive.push(i);
            } else if v.is_negative() {
                negative.push(i);
            }
        }

        let mut created = Vec::new();
        if !negative.is_empty() {
            for &p in &positive {
                for &q in &negative {
                    let common = rays[p].zeros.intersection(&rays[q].zeros);
                    if common.len() + 2 < dim {
                        continue;
                    }
                    let adjacent = rays
                        .iter()
                        .enumerate()
                        .all(|(r, ray)| r == p || r == q || !common.is_subset(&ray.zeros));
                    if !adjacent {
                        continue;
                    }
                    let (vp, vq) = (&values[p], -&values[q]);
                    let coords: Vec<BigInt> = rays[q]
                        .coords
                        .iter()
                        .zip(&rays[p].coords)
                        .map(|(a, b)| vp * a + &vq * b)
                        .collect();
                    let mut zeros = common;
                    zeros.insert(k);
                    created.push(Ray { coords: primitive(coords), zeros });
                }
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (ray, v) in rays.into_iter().zip(&values) {
            if v.is_negative() {
                continue;
            }
            let mut ray = ray;
            if v.is_zero() {
                ray.zeros.insert(k);
            }
            next.push(ray);
        }
        next.extend(created);
        rays = next;
    }
    Some(rays)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn positive_orthant_has_unit_rays() {
        let rows = vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1])];
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays.len(), 3);
    }

    #[test]
    fn square_cone_has_four_rays() {
        // facets of conv{(±1, ±1)}: rows (p, 1)
        let rows: Vec<Vec<BigInt>> =
            [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]].iter().map(|r| ints(r)).collect();
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays.len(), 4);
        for r in &rays {
            assert_eq!(r.zeros.len(), 2);
            assert!(rows.iter().all(|row| !dot(&r.coords, row).is_negative()));
        }
    }

    #[test]
    fn non_pointed_cone_is_rejected() {
        let rows = vec![ints(&[1, 0]), ints(&[2, 0])];
        assert!(extreme_rays(&rows, 2).is_none());
    }
}
