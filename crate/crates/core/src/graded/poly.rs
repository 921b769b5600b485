use std::collections::BTreeMap;
use std::fmt;

use super::{Monomial, Truncation};
use crate::fields::Field;

/// A polynomial in `x, y, z` with sparse coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Field> {
    field: F,
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Poly<F> {
    pub fn zero(field: &F) -> Self {
        Self {
            field: field.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::monomial(field, Monomial::ONE, c)
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn monomial(field: &F, m: Monomial, c: F::Elem) -> Self {
        let mut p = Self::zero(field);
        p.add_term(m, c);
        p
    }

    /// Monomial with coefficient one.
    pub fn mono(field: &F, x: u32, y: u32, z: u32) -> Self {
        Self::monomial(field, Monomial::new(x, y, z), field.one())
    }

    /// Sums the given terms; repeated monomials accumulate.
    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut p = Self::zero(field);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Terms in lex-ascending order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// The common degree of all terms, or `None` if the polynomial is zero
    /// or not homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        if self.field.is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(old) => {
                let s = self.field.add(old, &c);
                if self.field.is_zero(&s) {
                    self.terms.remove(&m);
                } else {
                    *old = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, self.field.mul(a, c)))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            field: self.field.clone(),
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.mul_truncated(o, &Truncation::NONE)
    }

    /// Product with every term outside the truncation discarded.
    pub fn mul_truncated(&self, o: &Self, trunc: &Truncation) -> Self {
        let mut p = Self::zero(&self.field);
        for (a, ca) in &self.terms {
            if !trunc.admits(a) {
                continue;
            }
            for (b, cb) in &o.terms {
                let m = a.mul(b);
                if trunc.admits(&m) {
                    p.add_term(m, self.field.mul(ca, cb));
                }
            }
        }
        p
    }

    pub fn truncate(&self, trunc: &Truncation) -> Self {
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| trunc.admits(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// `self^(2^e)`: in characteristic two this squares coefficients and
    /// multiplies exponents, with no cross terms.
    pub fn frobenius_power(&self, e: u32) -> Self {
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.frobenius(e), self.field.frobenius(c, e)))
                .collect(),
        }
    }

    /// `self^n` modulo the truncation. Squarings go through the Frobenius,
    /// which is exact because the truncation is a monomial ideal.
    pub fn pow_truncated(&self, n: u64, trunc: &Truncation) -> Self {
        let mut acc = Self::one(&self.field).truncate(trunc);
        let mut base = self.truncate(trunc);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul_truncated(&base, trunc);
            }
            n >>= 1;
            if n > 0 {
                base = base.frobenius_power(1).truncate(trunc);
            }
        }
        acc
    }

    pub fn pow(&self, n: u64) -> Self {
        self.pow_truncated(n, &Truncation::NONE)
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, d: u32) -> Self {
        Self {
            field: self.field.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Applies a coefficient map into another field.
    pub fn map_coeffs<G: Field>(&self, target: &G, mut f: impl FnMut(&F::Elem) -> G::Elem) -> Poly<G> {
        Poly::from_terms(target, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                if self.field.is_one(c) {
                    m.to_string()
                } else if *m == Monomial::ONE {
                    format!("({})", self.field.render(c))
                } else {
                    format!("({})*{m}", self.field.render(c))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
