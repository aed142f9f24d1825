//! Classical root systems in their standard realizations, with Weyl groups
//! enumerated as exact orthogonal matrices.
//!
//! | type | ambient space | positive roots |
//! |------|---------------|----------------|
//! | `A_r` | trace-zero hyperplane of `R^{r+1}` | `e_i - e_j` |
//! | `B_r` | `R^r` | `e_i ± e_j`, `e_i` |
//! | `C_r` | `R^r` | `e_i ± e_j`, `2e_i` |
//! | `D_r` | `R^r` | `e_i ± e_j` |
//!
//! The space carrying the roots is identified with its dual through the
//! standard inner product.

mod weyl;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rational::{int, Scalar, Vector};

pub use weyl::{WeylGroup, WEYL_GROUP_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    A,
    B,
    C,
    D,
}

impl RootKind {
    pub fn letter(self) -> char {
        match self {
            RootKind::A => 'A',
            RootKind::B => 'B',
            RootKind::C => 'C',
            RootKind::D => 'D',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    kind: RootKind,
    rank: usize,
    ambient_dim: usize,
    simple_roots: Vec<Vector>,
    positive_roots: Vec<Vector>,
}

fn e(dim: usize, i: usize) -> Vector {
    Vector::unit(dim, i)
}

impl RootSystem {
    pub fn build(kind: RootKind, rank: usize) -> Result<Self> {
        let unsupported = Error::UnsupportedRootSystem { kind: kind.letter(), rank };
        if rank == 0 || (kind == RootKind::D && rank < 2) {
            return Err(unsupported);
        }
        let dim = if kind == RootKind::A { rank + 1 } else { rank };
        let mut simple: Vec<Vector> = (0..dim - 1).map(|i| &e(dim, i) - &e(dim, i + 1)).collect();
        let mut positive = Vec::new();
        for i in 0..dim {
            for j in i + 1..dim {
                positive.push(&e(dim, i) - &e(dim, j));
                if kind != RootKind::A {
                    positive.push(&e(dim, i) + &e(dim, j));
                }
            }
        }
        let last = dim - 1;
        match kind {
            RootKind::A => {}
            RootKind::B => {
                simple.push(e(dim, last));
                positive.extend((0..dim).map(|i| e(dim, i)));
            }
            RootKind::C => {
                simple.push(e(dim, last).scale(&int(2)));
                positive.extend((0..dim).map(|i| e(dim, i).scale(&int(2))));
            }
            RootKind::D => simple.push(&e(dim, last - 1) + &e(dim, last)),
        }
        positive.sort();
        Ok(Self { kind, rank, ambient_dim: dim, simple_roots: simple, positive_roots: positive })
    }

    pub fn kind(&self) -> RootKind {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// `Δ`, ordered along the Dynkin diagram.
    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Vector] {
        &self.positive_roots
    }

    /// All roots, positive and negative, sorted.
    pub fn roots(&self) -> Vec<Vector> {
        let mut all: Vec<Vector> = self.positive_roots.iter().flat_map(|a| [a.clone(), -a]).collect();
        all.sort();
        all
    }

    fn root(&self, i: usize) -> Result<&Vector> {
        self.simple_roots.get(i).ok_or(Error::BadRootIndex(i))
    }

    /// `2<v, α_i> / <α_i, α_i>`.
    pub fn coroot_pairing(&self, v: &Vector, i: usize) -> Result<Scalar> {
        let a = self.root(i)?;
        Ok(int(2) * a.dot(v) / a.norm_squared())
    }

    pub fn reflect(&self, i: usize, v: &Vector) -> Result<Vector> {
        let c = self.coroot_pairing(v, i)?;
        Ok(v.add_scaled(&-c, &self.simple_roots[i]))
    }

    pub fn simple_reflection(&self, i: usize) -> Result<Matrix> {
        Ok(Matrix::reflection(self.root(i)?))
    }

    pub fn is_dominant(&self, v: &Vector) -> bool {
        self.simple_roots.iter().all(|a| !a.dot(v).is_negative())
    }

    /// Indices of the simple roots vanishing on `v`, which must be dominant.
    /// Empty exactly when `v` is regular.
    pub fn singular_support(&self, v: &Vector) -> Result<Vec<usize>> {
        v.check_dim(self.ambient_dim)?;
        if !self.is_dominant(v) {
            return Err(Error::NotDominant);
        }
        Ok((0..self.rank).filter(|&i| self.simple_roots[i].dot(v).is_zero()).collect())
    }

    /// The unique point of the orbit of `v` in the closed positive chamber.
    pub fn dominant_representative(&self, v: &Vector) -> Result<Vector> {
        v.check_dim(self.ambient_dim)?;
        let mut v = v.clone();
        while let Some(i) = (0..self.rank).find(|&i| self.simple_roots[i].dot(&v).is_negative()) {
            v = self.reflect(i, &v)?;
        }
        Ok(v)
    }

    /// The orbit `W·v`, sorted.
    pub fn weyl_orbit(&self, v: &Vector) -> Result<Vec<Vector>> {
        v.check_dim(self.ambient_dim)?;
        let mut seen: HashSet<Vector> = HashSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                let y = self.reflect(i, &x)?;
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut orbit: Vec<Vector> = seen.into_iter().collect();
        orbit.sort();
        Ok(orbit)
    }

    pub fn weyl_group(&self) -> Result<WeylGroup> {
        WeylGroup::generate(self.ambient_dim, (0..self.rank).map(|i| Matrix::reflection(&self.simple_roots[i])).collect())
    }

    /// Order of the Weyl group from the classical formulas.
    pub fn weyl_group_order(&self) -> usize {
        let fact: usize = (1..=self.rank).product();
        match self.kind {
            RootKind::A => fact * (self.rank + 1),
            RootKind::B | RootKind::C => fact << self.rank,
            RootKind::D => fact << (self.rank - 1),
        }
    }

    /// Coordinates of `v` in the basis of simple roots. `v` must lie in
    /// their span.
    pub fn simple_coordinates(&self, v: &Vector) -> Result<Vector> {
        v.check_dim(self.ambient_dim)?;
        let gram: Vec<Vector> = self
            .simple_roots
            .iter()
            .map(|a| self.simple_roots.iter().map(|b| a.dot(b)).collect())
            .collect();
        let rhs: Vector = self.simple_roots.iter().map(|a| a.dot(v)).collect();
        let c = linalg::solve(&gram, &rhs).expect("simple roots are independent");
        let back = c.iter().zip(&self.simple_roots).fold(Vector::zeros(self.ambient_dim), |acc, (ci, a)| acc.add_scaled(ci, a));
        if back != *v {
            return Err(Error::NotInSpan);
        }
        Ok(c)
    }

    /// The positive root of largest height.
    pub fn highest_root(&self) -> Vector {
        self.positive_roots
            .iter()
            .max_by_key(|a| self.simple_coordinates(a).expect("roots lie in the span").iter().cloned().sum::<Scalar>())
            .expect("root systems are nonempty")
            .clone()
    }

    /// Fundamental weights `ω_1, ..., ω_r`, dual to the simple coroots and
    /// lying in the span of the roots.
    pub fn fundamental_weights(&self) -> Vec<Vector> {
        let cartan_t: Vec<Vector> = (0..self.rank)
            .map(|j| (0..self.rank).map(|i| self.coroot_pairing(&self.simple_roots[i], j).unwrap()).collect())
            .collect();
        (0..self.rank)
            .map(|k| {
                let c = linalg::solve(&cartan_t, &Vector::unit(self.rank, k)).expect("Cartan matrix is invertible");
                c.iter().zip(&self.simple_roots).fold(Vector::zeros(self.ambient_dim), |acc, (ci, a)| acc.add_scaled(ci, a))
            })
            .collect()
    }

    /// Half the sum of the positive roots.
    pub fn rho(&self) -> Vector {
        let sum = self.positive_roots.iter().fold(Vector::zeros(self.ambient_dim), |acc, a| &acc + a);
        sum.scale(&Scalar::new(1.into(), 2.into()))
    }

    /// Named dominant weights: `adjoint` (highest root), `standard`
    /// (`ω_1`), `dual-standard` (`ω_r` for type A, `ω_1` otherwise),
    /// `fundamental:k` (1-based) and `rho`.
    pub fn weight_preset(&self, name: &str) -> Result<Vector> {
        let fundamental = |k: usize| {
            self.fundamental_weights()
                .get(k.wrapping_sub(1))
                .cloned()
                .ok_or_else(|| Error::Parse(format!("no fundamental weight {k} in rank {}", self.rank)))
        };
        match name.trim() {
            "adjoint" => Ok(self.highest_root()),
            "standard" => fundamental(1),
            "dual-standard" if self.kind == RootKind::A => fundamental(self.rank),
            "dual-standard" => fundamental(1),
            "rho" => Ok(self.rho()),
            other => match other.strip_prefix("fundamental:") {
                Some(k) => fundamental(k.trim().parse().map_err(|_| Error::Parse(format!("bad weight index {k:?}")))?),
                None => Err(Error::Parse(format!("unknown weight preset {other:?}"))),
            },
        }
    }

    fn check_subset(&self, subset: &[usize]) -> Result<Vec<usize>> {
        let set: BTreeSet<usize> = subset.iter().copied().collect();
        if let Some(&bad) = set.iter().find(|&&i| i >= self.rank) {
            return Err(Error::BadRootIndex(bad));
        }
        Ok(set.into_iter().collect())
    }

    /// Subspaces and subgroup attached to a subset `I` of the simple roots.
    pub fn subset_data(&self, subset: &[usize]) -> Result<SimpleSubset> {
        let indices = self.check_subset(subset)?;
        let roots: Vec<Vector> = indices.iter().map(|&i| self.simple_roots[i].clone()).collect();
        // a_I is cut out inside the span of the roots.
        let mut rows = linalg::nullspace(&self.simple_roots, self.ambient_dim);
        rows.extend(roots.iter().cloned());
        let lower = linalg::nullspace(&rows, self.ambient_dim);
        let weyl = WeylGroup::generate(self.ambient_dim, roots.iter().map(Matrix::reflection).collect())?;
        Ok(SimpleSubset { indices, lower, upper: roots, weyl })
    }

    /// Connected components of the Dynkin subgraph on `I`, i.e. the finest
    /// partition of `I` into mutually orthogonal parts.
    pub fn irreducible_components(&self, subset: &[usize]) -> Result<Vec<Vec<usize>>> {
        let indices = self.check_subset(subset)?;
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut assigned = HashSet::new();
        for &start in &indices {
            if !assigned.insert(start) {
                continue;
            }
            let mut part = vec![start];
            let mut k = 0;
            while k < part.len() {
                let i = part[k];
                for &j in &indices {
                    if !self.simple_roots[i].dot(&self.simple_roots[j]).is_zero() && assigned.insert(j) {
                        part.push(j);
                    }
                }
                k += 1;
            }
            part.sort_unstable();
            components.push(part);
        }
        Ok(components)
    }

    pub fn label(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for RootSystem {
    type Err = Error;

    /// Parses labels such as `A3` or `b2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => RootKind::A,
            Some('B') => RootKind::B,
            Some('C') => RootKind::C,
            Some('D') => RootKind::D,
            _ => return Err(Error::Parse(format!("unknown root system {s:?}"))),
        };
        let rank = chars.as_str().parse().map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
        Self::build(kind, rank)
    }
}

/// Data attached to a subset `I ⊆ Δ`.
#[derive(Clone, Debug)]
pub struct SimpleSubset {
    pub indices: Vec<usize>,
    /// Basis of `a_I`, the common kernel of the roots in `I`.
    pub lower: Vec<Vector>,
    /// Basis of `a^I`, the orthogonal complement of `a_I` (spanned by `I`).
    pub upper: Vec<Vector>,
    /// `W_I`, generated by the reflections in `I`.
    pub weyl: WeylGroup,
}

#[cfg(test)]
mod tests;
