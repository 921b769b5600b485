use serde::Serialize;

use super::MonskyError;
use crate::exactla::LinearSolver;
use crate::fields::{artin_schreier_degree, sample_alpha, Field, Gf2m, RatFunc, RatFuncField};
use crate::graded::{Monomial, Poly, Truncation};

/// Largest `d` for which `q = 2^(d+1)` still fits the exponent type.
pub const MAX_DEGREE: u32 = 29;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// α is algebraic over F₂, living in a finite field.
    Algebraic,
    /// α is the transcendental `t` of F₂(t).
    Generic,
}

/// The data of one fiber of the quartic family: α, `d = m(α)`,
/// `Q = 2^(d−1)`, `q = 4Q`, and the polynomials
/// `P = z⁴ + xyz² + x³z + y³z`, `g = P + α x²y²`, `f = y³z³`,
/// `ε = x y^(3Q+1) z^(3Q)`.
#[derive(Clone, Debug)]
pub struct CounterexampleContext<F: LinearSolver> {
    field: F,
    alpha: F::Elem,
    mode: Mode,
    d: u32,
    big_q: u32,
    q: u32,
    p: Poly<F>,
    g: Poly<F>,
    f: Poly<F>,
    eps: Poly<F>,
}

/// `z⁴ + xyz² + x³z + y³z` over any field.
pub fn quartic_p<F: Field>(field: &F) -> Poly<F> {
    let one = field.one();
    Poly::from_terms(
        field,
        [
            (Monomial::new(0, 0, 4), one.clone()),
            (Monomial::new(1, 1, 2), one.clone()),
            (Monomial::new(3, 0, 1), one.clone()),
            (Monomial::new(0, 3, 1), one),
        ],
    )
}

/// `P + α x²y²`.
pub fn quartic_g<F: Field>(field: &F, alpha: &F::Elem) -> Poly<F> {
    let mut g = quartic_p(field);
    g.add_term(Monomial::new(2, 2, 0), alpha.clone());
    g
}

impl<F: LinearSolver> CounterexampleContext<F> {
    fn build(field: &F, alpha: F::Elem, mode: Mode, d: u32) -> Result<Self, MonskyError> {
        if d < 2 {
            return Err(MonskyError::DegreeTooSmall(d));
        }
        if d > MAX_DEGREE {
            return Err(MonskyError::DegreeTooLarge(d));
        }
        let big_q = 1u32 << (d - 1);
        let p = quartic_p(field);
        let g = quartic_g(field, &alpha);
        Ok(Self {
            field: field.clone(),
            alpha,
            mode,
            d,
            big_q,
            q: 4 * big_q,
            p,
            g,
            f: Poly::mono(field, 0, 3, 3),
            eps: Poly::mono(field, 1, 3 * big_q + 1, 3 * big_q),
        })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn alpha(&self) -> &F::Elem {
        &self.alpha
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// The Artin–Schreier degree `m(α)` (the chosen `d` in generic mode).
    pub fn d(&self) -> u32 {
        self.d
    }

    /// `Q = 2^(d−1)`, the Frobenius power under test.
    pub fn big_q(&self) -> u32 {
        self.big_q
    }

    /// `q = 4Q`, the truncation exponent.
    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn truncation(&self) -> Truncation {
        Truncation::cube(self.q)
    }

    pub fn p(&self) -> &Poly<F> {
        &self.p
    }

    pub fn g(&self) -> &Poly<F> {
        &self.g
    }

    pub fn f(&self) -> &Poly<F> {
        &self.f
    }

    pub fn eps(&self) -> &Poly<F> {
        &self.eps
    }

    /// `P⁰, P¹, …, P^k_max`, reduced in the truncated ring.
    pub fn p_powers(&self, k_max: u32) -> Vec<Poly<F>> {
        let t = self.truncation();
        let mut out = vec![Poly::one(&self.field)];
        for _ in 0..k_max {
            let next = out.last().unwrap().mul_truncated(&self.p, &t);
            out.push(next);
        }
        out
    }

    pub fn require_algebraic(&self) -> Result<(), MonskyError> {
        match self.mode {
            Mode::Algebraic => Ok(()),
            Mode::Generic => Err(MonskyError::GenericMode),
        }
    }
}

impl CounterexampleContext<Gf2m> {
    /// The fiber at a nonzero α of a finite field.
    pub fn algebraic(field: &Gf2m, alpha: u32) -> Result<Self, MonskyError> {
        if alpha == 0 {
            return Err(MonskyError::ZeroAlpha);
        }
        let d = artin_schreier_degree(field, &alpha);
        Self::build(field, alpha, Mode::Algebraic, d)
    }

    /// The fiber at `sample_alpha(d)`.
    pub fn sampled(d: u32) -> Result<Self, MonskyError> {
        let (field, alpha) = sample_alpha(d)?;
        Self::algebraic(&field, alpha)
    }
}

impl CounterexampleContext<RatFuncField> {
    /// The generic fiber, with `Q = 2^(d−1)` chosen to match an algebraic
    /// fiber of degree `d`.
    pub fn generic(d: u32) -> Result<Self, MonskyError> {
        Self::build(&RatFuncField, RatFunc::t(), Mode::Generic, d)
    }
}
