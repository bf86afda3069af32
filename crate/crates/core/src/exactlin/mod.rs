//! Exact dense linear algebra over the rationals and prime fields.

mod field;
mod mat;
pub mod poly;

pub use field::{Elem, FieldSpec};
pub use mat::{independent_subset, rank_of_vectors, Echelon, Mat};
