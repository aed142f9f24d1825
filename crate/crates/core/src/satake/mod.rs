//! Weight polytopes and the Finsler unit balls built from them.
//!
//! For dominant weights `χ_1, ..., χ_l` the weight polytope is
//! `D = conv(W·sχ_1 ∪ ... ∪ W·sχ_l)` for a scale `s`. The ball
//! `B = -D°` gives the (generalized) Satake compactification as a
//! horofunction compactification; the ball `B = D` gives its dual.

mod compare;

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polytope::Polytope;
use crate::rational::{Scalar, Vector};
use crate::rootsys::{RootKind, RootSystem, WeylGroup};

pub use compare::same_compactification;

/// Highest weights and scale defining a weight polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    root_system: RootSystem,
    highest_weights: Vec<Vector>,
    scale: Scalar,
}

impl WeightSpec {
    pub fn new(root_system: RootSystem, highest_weights: Vec<Vector>, scale: Scalar) -> Result<Self> {
        if highest_weights.is_empty() {
            return Err(Error::EmptyInput);
        }
        if !scale.is_positive() {
            return Err(Error::Parse("scale must be positive".into()));
        }
        for chi in &highest_weights {
            chi.check_dim(root_system.ambient_dim())?;
            if !root_system.is_dominant(chi) {
                return Err(Error::NotDominant);
            }
        }
        Ok(Self { root_system, highest_weights, scale })
    }

    /// Parses a `;`-separated list of weights, each a preset name
    /// (see [`RootSystem::weight_preset`]) or comma-separated coordinates.
    pub fn parse(root_system: RootSystem, weights: &str, scale: Scalar) -> Result<Self> {
        let chis = weights
            .split(';')
            .filter(|w| !w.trim().is_empty())
            .map(|w| root_system.weight_preset(w).or_else(|_| Vector::parse(w)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(root_system, chis, scale)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn highest_weights(&self) -> &[Vector] {
        &self.highest_weights
    }

    pub fn scale(&self) -> &Scalar {
        &self.scale
    }

    pub fn with_scale(&self, scale: Scalar) -> Result<Self> {
        Self::new(self.root_system.clone(), self.highest_weights.clone(), scale)
    }
}

/// `D = conv(⋃ W·(scale χ_i))`. Fails unless `D` spans the root space with
/// the origin in its relative interior.
pub fn weight_hull(spec: &WeightSpec) -> Result<Polytope> {
    let rs = &spec.root_system;
    let mut points = Vec::new();
    for chi in &spec.highest_weights {
        points.extend(rs.weyl_orbit(&chi.scale(&spec.scale))?);
    }
    let d = Polytope::convex_hull(&points)?;
    if d.affine_dim() != rs.rank() {
        return Err(Error::NotFullDimensional { affine: d.affine_dim(), ambient: rs.rank() });
    }
    if !d.has_origin_in_relative_interior() {
        return Err(Error::OriginNotInterior);
    }
    Ok(d)
}

/// `B = -D°`.
pub fn satake_ball(d: &Polytope) -> Result<Polytope> {
    Ok(d.polar_dual()?.negated())
}

/// `B = D`, after checking that `D` can serve as a unit ball.
pub fn dual_satake_ball(d: &Polytope) -> Result<Polytope> {
    if !d.has_origin_in_relative_interior() {
        return Err(Error::OriginNotInterior);
    }
    Ok(d.clone())
}

/// Whether `w·P = P` for every element of `W`.
pub fn is_weyl_invariant(weyl: &WeylGroup, p: &Polytope) -> bool {
    weyl.preserves(p.vertices())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Hexagon,
    Cuboctahedron,
    Permutohedron,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Hexagon => "hexagon",
            Shape::Cuboctahedron => "cuboctahedron",
            Shape::Permutohedron => "permutohedron",
        })
    }
}

/// The scale-free part of a [`CompactificationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Combinatorics {
    pub root_system: String,
    /// f-vector of `D`, ending with the 1 for `D` itself.
    pub d_f_vector: Vec<usize>,
    /// f-vector of `B = -D°`.
    pub b_f_vector: Vec<usize>,
    pub facet_count: usize,
    /// `I(χ_i)` for each highest weight, as simple-root indices.
    pub singular_supports: Vec<Vec<usize>>,
    /// Every vertex of `D` lies in an open chamber.
    pub regular: bool,
    pub shape: Option<Shape>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactificationReport {
    #[serde(flatten)]
    pub combinatorics: Combinatorics,
    pub vertices: Vec<Vector>,
}

pub fn classify(spec: &WeightSpec) -> Result<CompactificationReport> {
    let rs = &spec.root_system;
    let d = weight_hull(spec)?;
    let b = satake_ball(&d)?;
    let d_f_vector = d.f_vector();
    let singular_supports = spec.highest_weights.iter().map(|chi| rs.singular_support(chi)).collect::<Result<_>>()?;
    let regular = d.vertices().iter().all(|v| rs.positive_roots().iter().all(|a| !a.dot(v).is_zero()));
    let shape = recognize(rs, &d, &d_f_vector, regular);
    Ok(CompactificationReport {
        combinatorics: Combinatorics {
            root_system: rs.label(),
            b_f_vector: b.f_vector(),
            facet_count: d.facets().len(),
            d_f_vector,
            singular_supports,
            regular,
            shape,
        },
        vertices: d.vertices().to_vec(),
    })
}

fn recognize(rs: &RootSystem, d: &Polytope, f_vector: &[usize], regular: bool) -> Option<Shape> {
    if d.affine_dim() == 2 && d.vertices().len() == 6 {
        return Some(Shape::Hexagon);
    }
    if f_vector == [12, 24, 14, 1] {
        let mut sizes: Vec<usize> = (0..d.facets().len()).map(|i| d.facet_vertices(i).len()).collect();
        sizes.sort_unstable();
        if sizes == [[3; 8].as_slice(), [4; 6].as_slice()].concat() {
            return Some(Shape::Cuboctahedron);
        }
    }
    // Regular vertices come in full orbits, so |W| of them form one orbit.
    if rs.kind() == RootKind::A && rs.rank() >= 3 && regular && d.vertices().len() == rs.weyl_group_order() {
        return Some(Shape::Permutohedron);
    }
    None
}

impl fmt::Display for CompactificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.combinatorics;
        writeln!(f, "root system      {}", c.root_system)?;
        writeln!(f, "f-vector of D    {:?}", c.d_f_vector)?;
        writeln!(f, "f-vector of B    {:?}", c.b_f_vector)?;
        writeln!(f, "facets of D      {}", c.facet_count)?;
        writeln!(f, "singular support {:?}", c.singular_supports)?;
        writeln!(f, "regular          {}", c.regular)?;
        write!(f, "shape            {}", c.shape.map_or("-".to_string(), |s| s.to_string()))
    }
}
