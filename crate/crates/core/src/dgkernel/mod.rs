//! The dg category of bounded complexes of representations: hom complexes,
//! shifts, cones, the cycle and homology categories and the cofibrations.
//!
//! Grading is homological (`d` lowers degree by one). A degree-`n` map
//! `f` has differential `d_Y f − (−1)ⁿ f d_X`.

mod complex;
mod cone;
mod hom;
mod homotopy;
pub mod random;

pub use complex::Complex;
pub use cone::{
    cone, cone_with, shift, shift_map, verify_cone_representability,
    verify_cone_representability_with, Cone, Corruption,
};
pub use hom::{ChainMap, GradedMap, HomComplex};
pub use homotopy::{
    class_coordinates, cycle_homs, homology_homs, homotopy_inverse, is_cofibration,
    is_nullhomotopic, is_weak_equivalence, quotient, quotient_matches_cone, triangle_is_exact,
    HomotopyClass,
};

#[cfg(test)]
mod tests;
