//! Graded pieces of `k[x, y, z]` and of its monomial quotients, polynomials
//! with exact coefficients, and multiplication maps between pieces.

mod basis;
mod maps;
mod monomial;
mod parse;
mod poly;

pub use basis::{PieceBasis, PieceVector};
pub use maps::{mult_map, pairing_matrix, poly_power, reduce, GradedMap};
pub use monomial::{Monomial, Truncation};
pub use parse::parse_poly;
pub use poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradedError {
    #[error("expected degree {expected}, found a term of degree {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("polynomial `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
