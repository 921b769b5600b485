use std::sync::Arc;

use super::{GradedError, Monomial, PieceBasis, Poly, Truncation};
use crate::exactla::Matrix;
use crate::fields::Field;

/// A linear map between graded pieces, as a matrix acting on columns.
#[derive(Clone, Debug)]
pub struct GradedMap<F: Field> {
    pub source: Arc<PieceBasis>,
    pub target: Arc<PieceBasis>,
    pub matrix: Matrix<F>,
}

impl<F: Field> GradedMap<F> {
    pub fn apply(&self, p: &Poly<F>) -> Result<Poly<F>, GradedError> {
        let v = self.source.coords(p)?;
        let field = self.matrix.field();
        Ok(self.target.poly(field, &self.matrix.mul_vec(&v)))
    }
}

/// Reduction into a quotient by a monomial truncation.
pub fn reduce<F: Field>(p: &Poly<F>, trunc: &Truncation) -> Poly<F> {
    p.truncate(trunc)
}

pub fn poly_power<F: Field>(p: &Poly<F>, n: u64, trunc: &Truncation) -> Poly<F> {
    p.pow_truncated(n, trunc)
}

/// Multiplication by the homogeneous `f` from `source` to `target`.
pub fn mult_map<F: Field>(
    f: &Poly<F>,
    source: &Arc<PieceBasis>,
    target: &Arc<PieceBasis>,
) -> Result<GradedMap<F>, GradedError> {
    let field = f.field();
    let shift = target.degree() as i64 - source.degree() as i64;
    if !f.is_zero() {
        match f.homogeneous_degree() {
            None => return Err(GradedError::NotHomogeneous(f.to_string())),
            Some(d) if d as i64 != shift => {
                return Err(GradedError::DegreeMismatch {
                    expected: shift.max(0) as u32,
                    found: d,
                })
            }
            _ => {}
        }
    }
    let mut matrix = Matrix::zeros(field, target.dim(), source.dim());
    for (j, m) in source.monomials().iter().enumerate() {
        for (fm, c) in f.terms() {
            if let Some(i) = target.index_of(&m.mul(fm)) {
                let v = field.add(matrix.get(i, j), c);
                matrix.set(i, j, v);
            }
        }
    }
    Ok(GradedMap {
        source: Arc::clone(source),
        target: Arc::clone(target),
        matrix,
    })
}

/// Gram matrix of the pairing `(a, b) ↦ coefficient of socle in a·b` on
/// monomial bases.
pub fn pairing_matrix<F: Field>(field: &F, left: &PieceBasis, right: &PieceBasis, socle: Monomial) -> Matrix<F> {
    let mut m = Matrix::zeros(field, left.dim(), right.dim());
    for (i, a) in left.monomials().iter().enumerate() {
        if let Some(b) = a.quotient_into(&socle) {
            if let Some(j) = right.index_of(&b) {
                m.set(i, j, field.one());
            }
        }
    }
    m
}
