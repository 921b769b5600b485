//! Exact linear algebra: rank, kernels, solving and span membership.
//!
//! Every routine is exact. Over F₂ᵐ with small `m` elimination runs on bit
//! planes; over F₂(t) ranks are first certified by evaluating `t` at points
//! of a finite field and only fall back to elimination with rational
//! functions when no evaluation settles the question.

pub mod bitsliced;
pub mod elementwise;
mod matrix;
mod specialize;

pub use matrix::Matrix;
pub use specialize::{certified_rank, RankRoute, SPECIALIZATION_DEGREE};

use crate::fields::{Field, Gf2m, RatFuncField};

/// Elimination strategy attached to a coefficient field.
pub trait LinearSolver: Field {
    fn rank(a: &Matrix<Self>) -> usize {
        elementwise::rank(a)
    }

    fn rref(a: &Matrix<Self>) -> (Matrix<Self>, Vec<usize>) {
        elementwise::rref(a)
    }

    fn kernel(a: &Matrix<Self>) -> Vec<Vec<Self::Elem>> {
        elementwise::kernel(a)
    }

    fn solve_many(a: &Matrix<Self>, bs: &[Vec<Self::Elem>]) -> Vec<Option<Vec<Self::Elem>>> {
        elementwise::solve_many(a, bs)
    }

    fn column_space_contains(a: &Matrix<Self>, b: &[Self::Elem]) -> bool {
        Self::solve_many(a, &[b.to_vec()])[0].is_some()
    }
}

impl LinearSolver for Gf2m {
    fn rank(a: &Matrix<Self>) -> usize {
        if bitsliced::applies(a.field()) {
            bitsliced::rank(a)
        } else {
            elementwise::rank(a)
        }
    }

    fn rref(a: &Matrix<Self>) -> (Matrix<Self>, Vec<usize>) {
        if bitsliced::applies(a.field()) {
            bitsliced::rref(a)
        } else {
            elementwise::rref(a)
        }
    }

    fn kernel(a: &Matrix<Self>) -> Vec<Vec<u32>> {
        if bitsliced::applies(a.field()) {
            bitsliced::kernel(a)
        } else {
            elementwise::kernel(a)
        }
    }

    fn solve_many(a: &Matrix<Self>, bs: &[Vec<u32>]) -> Vec<Option<Vec<u32>>> {
        if bitsliced::applies(a.field()) {
            bitsliced::solve_many(a, bs)
        } else {
            elementwise::solve_many(a, bs)
        }
    }

    fn column_space_contains(a: &Matrix<Self>, b: &[u32]) -> bool {
        if bitsliced::applies(a.field()) {
            bitsliced::column_space_contains(a, b)
        } else {
            elementwise::solve_many(a, &[b.to_vec()])[0].is_some()
        }
    }
}

impl LinearSolver for RatFuncField {
    fn rank(a: &Matrix<Self>) -> usize {
        certified_rank(a).0
    }

    fn column_space_contains(a: &Matrix<Self>, b: &[Self::Elem]) -> bool {
        specialize::certified_contains(a, b)
    }
}

pub fn rank<F: LinearSolver>(a: &Matrix<F>) -> usize {
    F::rank(a)
}

/// `(rank, nullity)` of `a` viewed as a map on column vectors.
pub fn rank_nullity<F: LinearSolver>(a: &Matrix<F>) -> (usize, usize) {
    let r = F::rank(a);
    (r, a.cols() - r)
}

pub fn rref<F: LinearSolver>(a: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    F::rref(a)
}

pub fn kernel_basis<F: LinearSolver>(a: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    F::kernel(a)
}

pub fn solve<F: LinearSolver>(a: &Matrix<F>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    F::solve_many(a, &[b.to_vec()]).pop().flatten()
}

pub fn solve_many<F: LinearSolver>(a: &Matrix<F>, bs: &[Vec<F::Elem>]) -> Vec<Option<Vec<F::Elem>>> {
    F::solve_many(a, bs)
}

pub fn column_space_contains<F: LinearSolver>(a: &Matrix<F>, b: &[F::Elem]) -> bool {
    F::column_space_contains(a, b)
}

/// Coordinates of `v` in terms of `vectors`, if it lies in their span.
pub fn in_span<F: LinearSolver>(field: &F, vectors: &[Vec<F::Elem>], v: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let a = Matrix::from_columns(field, v.len(), vectors);
    solve(&a, v)
}

/// An incrementally grown basis of a subspace of `F^n`, kept in echelon
/// form so that membership is a single reduction pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Self {
            field: field.clone(),
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn reduce(&self, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(v.len(), self.dim, "vector has wrong length");
        let f = &self.field;
        let mut v = v.to_vec();
        // Each stored row vanishes at the pivots of earlier rows, so one
        // pass in insertion order clears every pivot.
        for (p, row) in &self.rows {
            if f.is_zero(&v[*p]) {
                continue;
            }
            let c = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !f.is_zero(y) {
                    *x = f.add(x, &f.mul(&c, y));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v).iter().all(|e| self.field.is_zero(e))
    }

    /// Adds `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: &[F::Elem]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|e| !self.field.is_zero(e)) else {
            return false;
        };
        let inv = self.field.inv(&r[p]).expect("nonzero");
        for x in &mut r {
            *x = self.field.mul(x, &inv);
        }
        self.rows.push((p, r));
        true
    }
}
