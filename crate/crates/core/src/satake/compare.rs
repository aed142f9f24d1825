//! Deciding whether two weight polytopes give the same compactification.
//!
//! Two specs are taken to give the same compactification when there is a
//! bijection between the vertices of their weight polytopes that
//!
//! * commutes with `W`,
//! * maps faces onto faces, and
//! * preserves the chamber signature of every face, the set of closed Weyl
//!   chambers containing its barycenter.
//!
//! A `W`-equivariant map is fixed by where it sends one dominant vertex per
//! orbit, so the search only runs over those choices.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::polytope::Polytope;
use crate::rational::Vector;
use crate::rootsys::{RootSystem, WeylGroup};

use super::{weight_hull, WeightSpec};

type Signature = Vec<usize>;

fn signature(rs: &RootSystem, weyl: &WeylGroup, point: &Vector) -> Signature {
    (0..weyl.order())
        .filter(|&k| rs.is_dominant(&weyl.elements()[k].transpose().apply(point)))
        .collect()
}

struct Labelled {
    poly: Polytope,
    vertex_sigs: Vec<Signature>,
    stabilizers: Vec<Vec<usize>>,
    faces: HashMap<Vec<usize>, Signature>,
}

impl Labelled {
    fn new(rs: &RootSystem, weyl: &WeylGroup, poly: Polytope) -> Self {
        let vertex_sigs = poly.vertices().iter().map(|v| signature(rs, weyl, v)).collect();
        let stabilizers = poly.vertices().iter().map(|v| weyl.stabilizer(v)).collect();
        let faces = poly
            .face_lattice()
            .into_iter()
            .map(|f| {
                let sig = signature(rs, weyl, &poly.relative_interior_point(&f));
                (f.vertex_indices().to_vec(), sig)
            })
            .collect();
        Self { poly, vertex_sigs, stabilizers, faces }
    }

    fn dominant_vertices(&self, rs: &RootSystem) -> Vec<usize> {
        (0..self.poly.vertices().len()).filter(|&i| rs.is_dominant(&self.poly.vertices()[i])).collect()
    }
}

/// Whether the two specs give `W`-equivariantly isomorphic weight
/// polytopes, respecting chamber signatures.
pub fn same_compactification(first: &WeightSpec, second: &WeightSpec) -> Result<bool> {
    let rs = first.root_system();
    if rs != second.root_system() {
        return Err(Error::MismatchedRootSystems);
    }
    let weyl = rs.weyl_group()?;
    let a = Labelled::new(rs, &weyl, weight_hull(first)?);
    let b = Labelled::new(rs, &weyl, weight_hull(second)?);
    if a.poly.f_vector() != b.poly.f_vector() {
        return Ok(false);
    }

    let reps = a.dominant_vertices(rs);
    // Each vertex of `a` as w·rep.
    let mut placement: Vec<Option<(usize, &Matrix)>> = vec![None; a.poly.vertices().len()];
    for (r, &rep) in reps.iter().enumerate() {
        for w in weyl.elements() {
            let i = a.poly.vertex_index(&w.apply(&a.poly.vertices()[rep])).expect("vertex sets are W-invariant");
            placement[i].get_or_insert((r, w));
        }
    }
    let candidates: Vec<Vec<usize>> = reps
        .iter()
        .map(|&x| {
            b.dominant_vertices(rs)
                .into_iter()
                .filter(|&y| b.stabilizers[y] == a.stabilizers[x] && b.vertex_sigs[y] == a.vertex_sigs[x])
                .collect()
        })
        .collect();

    let mut choice = vec![0; reps.len()];
    Ok(search(&a, &b, &placement, &candidates, &mut choice, 0))
}

fn search(
    a: &Labelled,
    b: &Labelled,
    placement: &[Option<(usize, &Matrix)>],
    candidates: &[Vec<usize>],
    choice: &mut Vec<usize>,
    depth: usize,
) -> bool {
    if depth == candidates.len() {
        return is_isomorphism(a, b, placement, choice);
    }
    for &y in &candidates[depth] {
        choice[depth] = y;
        if search(a, b, placement, candidates, choice, depth + 1) {
            return true;
        }
    }
    false
}

fn is_isomorphism(
    a: &Labelled,
    b: &Labelled,
    placement: &[Option<(usize, &Matrix)>],
    choice: &[usize],
) -> bool {
    let mut map = Vec::with_capacity(placement.len());
    for slot in placement {
        let Some((r, w)) = slot else {
            return false;
        };
        match b.poly.vertex_index(&w.apply(&b.poly.vertices()[choice[*r]])) {
            Some(j) => map.push(j),
            None => return false,
        }
    }
    let mut seen = map.clone();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != b.poly.vertices().len() || map.len() != seen.len() {
        return false;
    }
    a.faces.iter().all(|(verts, sig)| {
        let mut image: Vec<usize> = verts.iter().map(|&i| map[i]).collect();
        image.sort_unstable();
        b.faces.get(&image) == Some(sig)
    })
}
