pub mod error;
pub mod flatspace;
pub mod horoboundary;
pub mod linalg;
pub mod norm;
pub mod polytope;
pub mod rational;
pub mod rootsys;
pub mod satake;

mod bitset;

pub use error::{Error, Result};
pub use norm::PolyhedralNorm;
pub use polytope::{Face, Halfspace, Polytope};
pub use rational::{Scalar, Vector};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/polytopes.md")]
    mod polytopes {}
    #[doc = include_str!("../../../book/src/norms.md")]
    mod norms {}
    #[doc = include_str!("../../../book/src/horofunctions.md")]
    mod horofunctions {}
    #[doc = include_str!("../../../book/src/roots.md")]
    mod roots {}
    #[doc = include_str!("../../../book/src/satake.md")]
    mod satake {}
    #[doc = include_str!("../../../book/src/flat.md")]
    mod flat {}
}
