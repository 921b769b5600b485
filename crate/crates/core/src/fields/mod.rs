//! Exact arithmetic in the coefficient fields used throughout the crate:
//! F₂, the finite extensions F₂ᵐ, and the rational function field F₂(t).
//!
//! Every field here has characteristic two, so negation is the identity and
//! subtraction is addition. Hot loops are generic over [`Field`]; the
//! run-time tagged [`FieldValue`] exists for parsing and the command line.

mod artin_schreier;
mod dynamic;
mod gf2m;
mod gf2poly;
mod ratfunc;

use std::fmt::Debug;

pub use artin_schreier::{artin_schreier_degree, deterministic_irreducible, sample_alpha};
pub use dynamic::{FieldDescriptor, FieldValue};
pub use gf2m::Gf2m;
pub use gf2poly::Gf2Poly;
pub use ratfunc::{RatFunc, RatFuncField};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} vs {1})")]
    DescriptorMismatch(String, String),
    #[error("modulus {0} is not an irreducible polynomial of degree {1}")]
    ReducibleModulus(String, u32),
    #[error("extension degree {0} is outside the supported range 1..=31")]
    UnsupportedDegree(u32),
    #[error("cannot parse field specification `{0}`")]
    BadSpec(String),
    #[error("cannot parse field literal `{0}`")]
    BadLiteral(String),
    #[error("sample_alpha needs degree at least 2, got {0}")]
    DegreeTooSmall(u32),
}

/// A field of characteristic two with cheaply clonable handle.
pub trait Field: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// `None` exactly when `a` is zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn descriptor(&self) -> FieldDescriptor;

    /// Human-readable rendering of an element.
    fn render(&self, a: &Self::Elem) -> String;

    /// Parses a scalar atom: `0`, `1`, and whatever generators the field has
    /// (`u`, `u^k` and hex `0x..` in F₂ᵐ; `t`, `t^k` in F₂(t)).
    fn parse_atom(&self, s: &str) -> Option<Self::Elem>;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn square(&self, a: &Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.square(&base);
            e >>= 1;
        }
        acc
    }

    /// `a^(2^e)`, the `e`-fold Frobenius.
    fn frobenius(&self, a: &Self::Elem, e: u32) -> Self::Elem {
        let mut x = a.clone();
        for _ in 0..e {
            x = self.square(&x);
        }
        x
    }

    fn from_bool(&self, b: bool) -> Self::Elem {
        if b {
            self.one()
        } else {
            self.zero()
        }
    }
}
