//! Quivers, representations and the homological algebra of type-A path
//! algebras.
//!
//! Conventions are pinned by `dim Hom(P_i, M) = dim M_i`: representations are
//! covariant, the projective `P_i` lives on the vertices reachable from `i`
//! and the injective `I_i` on the vertices from which `i` is reachable.
//! Dynkin quivers of type D and E are classified and carry Cartan and Coxeter
//! data, but explicit representations are type A only.

mod coxeter;
mod homological;
mod quiver;
mod rep;

pub use coxeter::{cartan_matrix, coxeter_apply, coxeter_matrix, euler_form, euler_matrix};
pub use homological::{
    ar_translate, ext1_dim, hom_dim_via_resolution, hom_space, indecomposables, injective,
    interval_module, interval_of, intervals, is_indecomposable, is_isomorphic, is_projective, projective,
    projective_resolution, subrepresentation, AddObject, HomSpace, Interval, Kind,
    ProjectiveResolution,
};
pub use quiver::{DynkinClass, Quiver};
pub use rep::{Rep, RepMap};
