//! Exact linear algebra over the ground ring and its fraction field.

mod lattice;
mod matrix;
mod normal_form;

pub use lattice::{
    hnf_basis, in_row_span, integral_preimage, lattice_index, purify, ring_left_kernel, saturate,
    Lattice,
};
pub use matrix::Matrix;
pub use normal_form::{hnf, hnf_frac, snf, Hnf, Snf};
