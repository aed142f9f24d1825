use std::collections::{BTreeSet, HashSet};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rational::Vector;

use super::Polytope;

/// A nonempty face of a polytope, identified by its vertex indices.
///
/// `facets` lists the facets of the parent containing the face; their
/// intersection is exactly the face (the whole polytope has none).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    dim: usize,
    vertices: Vec<usize>,
    facets: Vec<usize>,
}

impl Face {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_indices(&self) -> &[usize] {
        &self.vertices
    }

    /// Indices of the parent's facets containing this face.
    pub fn support(&self) -> &[usize] {
        &self.facets
    }

    pub fn contains_face(&self, other: &Face) -> bool {
        other.vertices.iter().all(|v| self.vertices.binary_search(v).is_ok())
    }

    /// Proper faces miss at least one vertex of the parent.
    pub fn is_proper_in(&self, parent: &Polytope) -> bool {
        self.vertices.len() < parent.vertices().len()
    }
}

impl Polytope {
    fn vertex_set(&self, indices: impl IntoIterator<Item = usize>) -> BitSet {
        BitSet::from_indices(self.vertices.len(), indices)
    }

    fn face_from_set(&self, set: &BitSet) -> Face {
        let vertices = set.to_vec();
        let facets: Vec<usize> = (0..self.facets.len())
            .filter(|&f| self.incidence[f].binary_search(&vertices[0]).is_ok() && set.is_subset(&self.vertex_set(self.incidence[f].iter().copied())))
            .collect();
        let points: Vec<Vector> = vertices.iter().map(|&i| self.vertices[i].clone()).collect();
        Face { dim: linalg::affine_dim(&points), vertices, facets }
    }

    /// The polytope itself as its top face.
    pub fn whole_face(&self) -> Face {
        Face {
            dim: self.affine_dim,
            vertices: (0..self.vertices.len()).collect(),
            facets: Vec::new(),
        }
    }

    /// The smallest face containing the given vertices.
    pub fn smallest_face_containing(&self, vertex_indices: &[usize]) -> Result<Face> {
        if vertex_indices.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&bad) = vertex_indices.iter().find(|&&i| i >= self.vertices.len()) {
            return Err(Error::NotAFace(vec![bad]));
        }
        let wanted = self.vertex_set(vertex_indices.iter().copied());
        let mut closure = BitSet::full(self.vertices.len());
        for on in &self.incidence {
            let facet = self.vertex_set(on.iter().copied());
            if wanted.is_subset(&facet) {
                closure = closure.intersection(&facet);
            }
        }
        Ok(self.face_from_set(&closure))
    }

    /// The face whose vertex set is exactly `vertex_indices`.
    pub fn face(&self, vertex_indices: &[usize]) -> Result<Face> {
        let mut sorted = vertex_indices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let face = self.smallest_face_containing(&sorted)?;
        if face.vertices != sorted {
            return Err(Error::NotAFace(sorted));
        }
        Ok(face)
    }

    /// All nonempty faces, including the polytope itself, sorted by
    /// dimension and then by vertex indices.
    pub fn face_lattice(&self) -> Vec<Face> {
        let n = self.vertices.len();
        let facet_sets: Vec<BitSet> = self.incidence.iter().map(|on| self.vertex_set(on.iter().copied())).collect();
        let mut seen: HashSet<BitSet> = HashSet::new();
        let mut queue: Vec<BitSet> = Vec::new();
        let top = BitSet::full(n);
        seen.insert(top.clone());
        queue.push(top);
        while let Some(face) = queue.pop() {
            for facet in &facet_sets {
                let meet = face.intersection(facet);
                if !meet.is_empty() && !seen.contains(&meet) {
                    seen.insert(meet.clone());
                    queue.push(meet);
                }
            }
        }
        let faces: BTreeSet<Face> = seen.iter().map(|s| self.face_from_set(s)).collect();
        faces.into_iter().collect()
    }

    /// Face counts by dimension, `f_0, ..., f_d`, with `f_d = 1` for the
    /// polytope itself.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0; self.affine_dim + 1];
        for face in self.face_lattice() {
            counts[face.dim] += 1;
        }
        counts
    }

    pub fn face_points(&self, face: &Face) -> Vec<Vector> {
        face.vertices.iter().map(|&i| self.vertices[i].clone()).collect()
    }

    /// Vertex barycenter of a face, which lies in its relative interior.
    pub fn relative_interior_point(&self, face: &Face) -> Vector {
        Vector::barycenter(face.vertices.iter().map(|&i| &self.vertices[i])).expect("faces are nonempty")
    }

    /// The dual face `{y in P° : <y|x> = -1 for all x in F}` as a face of
    /// [`Polytope::polar_dual`].
    ///
    /// Vertex `j` of the polar is the functional of facet `j`, and facet `i`
    /// of the polar comes from vertex `i`, so the dual face swaps the vertex
    /// and support lists.
    pub fn dual_face(&self, face: &Face) -> Result<Face> {
        if !self.has_origin_in_relative_interior() {
            return Err(Error::OriginNotInterior);
        }
        if face.vertices.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !face.is_proper_in(self) {
            return Err(Error::NotProper);
        }
        if self.face(&face.vertices)? != *face {
            return Err(Error::NotAFace(face.vertices.clone()));
        }
        let functionals: Vec<Vector> = face.facets.iter().map(|&f| self.facets[f].normal().clone()).collect();
        Ok(Face {
            dim: linalg::affine_dim(&functionals),
            vertices: face.facets.clone(),
            facets: face.vertices.clone(),
        })
    }
}
