//! Exact dense linear algebra over a field and over its polynomial ring.

mod elim;
mod matrix;
mod polymat;
mod spectral;

pub use elim::{
    det, independent_subset, intersect_spans, inverse, kernel, rank, rref, solve_linear, Echelon,
    Solution,
};
pub use matrix::Matrix;
pub use polymat::{invariant_factors, PolyMatrix};
pub use spectral::{
    charpoly, is_nilpotent, is_semisimple, minimal_poly, similar, similar_to_negative,
};
