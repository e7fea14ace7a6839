//! Dense-array numeric engine: shape-carrying arrays, forward kernels, and a
//! recording tape for reverse-mode differentiation.

mod array;
mod gradcheck;
mod kernels;
mod tape;

pub use array::{DenseArray, Scalar};
pub use gradcheck::grad_check;
pub use tape::{Tape, VarId};
