use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Vector;

use super::Polytope;

/// On-disk polytope: `{"dim": m, "vertices": [["p/q", ...], ...]}` with an
/// optional `"facets"` list of functionals `a` meaning `<a|x> >= -1`.
///
/// Facets are only written for polytopes with the origin in the relative
/// interior, where every facet has that form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub dim: usize,
    pub vertices: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vector>>,
}

impl From<&Polytope> for PolytopeJson {
    fn from(p: &Polytope) -> Self {
        let facets = p
            .has_origin_in_relative_interior()
            .then(|| p.facets().iter().map(|h| h.normal().clone()).collect());
        Self { dim: p.ambient_dim(), vertices: p.vertices().to_vec(), facets }
    }
}

impl TryFrom<PolytopeJson> for Polytope {
    type Error = Error;

    /// Rebuilds the polytope and checks that the stored vertices are
    /// exactly its extremal points and that stored facets match.
    fn try_from(raw: PolytopeJson) -> Result<Self> {
        for v in &raw.vertices {
            v.check_dim(raw.dim)?;
        }
        let poly = Polytope::convex_hull(&raw.vertices)?;
        let mut given = raw.vertices.clone();
        given.sort();
        if given != poly.vertices() {
            return Err(Error::InvalidPolytope("listed points are not all extremal and distinct".into()));
        }
        if let Some(mut facets) = raw.facets {
            for f in &facets {
                f.check_dim(raw.dim)?;
            }
            facets.sort();
            let expected: Vec<Vector> = poly
                .facets()
                .iter()
                .map(|h| {
                    h.functional()
                        .cloned()
                        .ok_or_else(|| Error::InvalidPolytope("facets listed for a polytope without interior origin".into()))
                })
                .collect::<Result<_>>()?;
            if facets != expected {
                return Err(Error::InvalidPolytope("facet list does not match the vertices".into()));
            }
        }
        Ok(poly)
    }
}

impl Polytope {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PolytopeJson::from(self)).expect("polytope serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: PolytopeJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}
