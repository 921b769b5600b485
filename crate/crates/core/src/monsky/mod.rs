//! The quartic family `g_α = z⁴ + xyz² + x³z + y³z + α x²y²` in
//! characteristic two, and an exact check that `xy·f^Q` escapes the
//! Frobenius power `(x⁴, y⁴, z⁴)^[Q] + (g_α)` when α is algebraic, while
//! `y·f^Q` lies in it when α is transcendental.
//!
//! Two independent routes are provided. The polynomial route works in the
//! graded pieces of `O = k[x,y,z]/(x^q, y^q, z^q)`; the matrix route
//! reduces to the rank of a small structured matrix `M[Q, α]`.

mod context;
mod direct;
mod lemmas;
mod spaces;
mod special;

pub use context::{quartic_g, quartic_p, CounterexampleContext, Mode, MAX_DEGREE};
pub use direct::{KernelCokernel, NonInclusion};
pub use lemmas::{power_sum_bruteforce, LemmaReport};
pub use spaces::{build_r, build_s, BasisVectors, IdentityReport};
pub use special::{
    b_row, block_report, build_m, c_row, is_special, special_matrix_checks, BlockReport, SpecialMatrix,
    SpecialReport,
};

use crate::fields::FieldError;
use crate::graded::GradedError;
use crate::membership::MembershipError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonskyError {
    #[error("degree {0} is too small: the family needs d ≥ 2")]
    DegreeTooSmall(u32),
    #[error("degree {0} is too large")]
    DegreeTooLarge(u32),
    #[error("α must be nonzero")]
    ZeroAlpha,
    #[error("this computation needs an algebraic α")]
    GenericMode,
    #[error("expected an element of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("the two routes for {0} disagree")]
    RouteMismatch(String),
    #[error("coordinate extraction failed: {0}")]
    CoordinateExtraction(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Membership(#[from] MembershipError),
}
