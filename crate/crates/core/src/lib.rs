//! Exact computation in the monoid `M_n` of `n x n` rook matrices whose ones
//! lie in one uninterrupted block on a single diagonal, and in `S_n`, the
//! same monoid without its identity.
//!
//! Nonzero elements are triplets `<d,k,m>`: diagonal `d`, first row `k`,
//! last row `m`. Products, powers, roots and transposes are closed-form
//! integer formulas on the triplets ([`algebra`]); [`matrix`] holds a naive
//! dense-matrix implementation used only to cross-check them.

pub mod algebra;
pub mod census;
pub mod checks;
pub mod diagram;
pub mod element;
pub mod enumeration;
pub mod error;
pub mod matrix;

pub use algebra::{
    classify, commutes, is_nonzero_product, multiply, nilpotency_index, no_identity_witness, ones_count, power, root,
    transpose, Classification,
};
pub use element::{Ambient, Dimension, Element, Triplet};
pub use enumeration::{enumerate, CayleyTable, Family};
pub use error::{Error, ValidationError};

/// Validating constructor: `<d,k,m>` if it is an element of `ambient`.
pub fn make_element(d: i64, k: i64, m: i64, ambient: Ambient) -> Result<Element, ValidationError> {
    Element::new(d, k, m, ambient)
}
