use std::collections::HashMap;
use std::sync::Arc;

use super::{GradedError, Monomial, Poly, Truncation};
use crate::fields::Field;

/// The monomial basis of one graded piece, in lex-descending order.
#[derive(Debug, PartialEq, Eq)]
pub struct PieceBasis {
    degree: u32,
    truncation: Truncation,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl PieceBasis {
    pub fn new(degree: u32, truncation: Truncation) -> Arc<Self> {
        let mut monomials = Vec::new();
        for x in (0..=degree).rev() {
            for y in (0..=degree - x).rev() {
                let m = Monomial::new(x, y, degree - x - y);
                if truncation.admits(&m) {
                    monomials.push(m);
                }
            }
        }
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Arc::new(Self {
            degree,
            truncation,
            monomials,
            index,
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn truncation(&self) -> Truncation {
        self.truncation
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coordinates of a homogeneous polynomial of this degree. Terms killed
    /// by the truncation are dropped.
    pub fn coords<F: Field>(&self, p: &Poly<F>) -> Result<Vec<F::Elem>, GradedError> {
        let field = p.field();
        let mut v = vec![field.zero(); self.dim()];
        for (m, c) in p.terms() {
            if m.degree() != self.degree {
                return Err(GradedError::DegreeMismatch {
                    expected: self.degree,
                    found: m.degree(),
                });
            }
            if let Some(i) = self.index_of(m) {
                v[i] = c.clone();
            }
        }
        Ok(v)
    }

    pub fn poly<F: Field>(&self, field: &F, v: &[F::Elem]) -> Poly<F> {
        assert_eq!(v.len(), self.dim(), "coordinate vector has wrong length");
        Poly::from_terms(
            field,
            self.monomials.iter().zip(v).map(|(m, c)| (*m, c.clone())),
        )
    }
}

/// A coordinate vector together with the basis it refers to.
#[derive(Clone, Debug, PartialEq)]
pub struct PieceVector<F: Field> {
    basis: Arc<PieceBasis>,
    coords: Vec<F::Elem>,
}

impl<F: Field> PieceVector<F> {
    pub fn new(basis: &Arc<PieceBasis>, coords: Vec<F::Elem>) -> Self {
        assert_eq!(coords.len(), basis.dim(), "coordinate vector has wrong length");
        Self {
            basis: Arc::clone(basis),
            coords,
        }
    }

    pub fn from_poly(basis: &Arc<PieceBasis>, p: &Poly<F>) -> Result<Self, GradedError> {
        Ok(Self::new(basis, basis.coords(p)?))
    }

    pub fn basis(&self) -> &Arc<PieceBasis> {
        &self.basis
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }

    pub fn to_poly(&self, field: &F) -> Poly<F> {
        self.basis.poly(field, &self.coords)
    }
}
