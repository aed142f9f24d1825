use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::Vector;

/// Largest group [`WeylGroup::generate`] will enumerate.
pub const WEYL_GROUP_CAP: usize = 50_000;

/// A finite reflection group, stored as the full list of its elements.
/// The identity comes first; the rest follow in breadth-first order over
/// the generators, so the list is deterministic.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    dim: usize,
    generators: Vec<Matrix>,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
}

impl WeylGroup {
    pub fn generate(dim: usize, generators: Vec<Matrix>) -> Result<Self> {
        let id = Matrix::identity(dim);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0]);
        while let Some(k) = queue.pop_front() {
            for g in &generators {
                let next = g.mul(&elements[k]);
                if !index.contains_key(&next) {
                    if elements.len() == WEYL_GROUP_CAP {
                        return Err(Error::WeylGroupTooLarge(WEYL_GROUP_CAP));
                    }
                    index.insert(next.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(next);
                }
            }
        }
        Ok(Self { dim, generators, elements, index })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[Matrix] {
        &self.generators
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// `{w·v : w ∈ W}`, sorted.
    pub fn orbit(&self, v: &Vector) -> Result<Vec<Vector>> {
        v.check_dim(self.dim)?;
        let mut orbit: Vec<Vector> = self.elements.iter().map(|w| w.apply(v)).collect();
        orbit.sort();
        orbit.dedup();
        Ok(orbit)
    }

    /// Indices of the elements fixing `v`.
    pub fn stabilizer(&self, v: &Vector) -> Vec<usize> {
        (0..self.elements.len()).filter(|&k| self.elements[k].apply(v) == *v).collect()
    }

    /// Whether `w·S = S` for every element, with `S` given as a sorted list.
    pub fn preserves(&self, sorted_points: &[Vector]) -> bool {
        self.elements.iter().all(|w| {
            let mut image: Vec<Vector> = sorted_points.iter().map(|p| w.apply(p)).collect();
            image.sort();
            image == sorted_points
        })
    }
}
