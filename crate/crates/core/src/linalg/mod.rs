//! Exact linear algebra: packed matrices over F₂ and integer Smith normal form.

mod bits;
mod smith;

pub use bits::{span_dimension, BitMatrix, BitVector, SpanBasis};
pub use smith::{smith_decomposition, smith_normal_form, IntMatrix, SmithDecomposition};
