use std::collections::HashMap;

use serde::Serialize;

use super::{CounterexampleContext, MonskyError};
use crate::exactla::{rank, LinearSolver, Matrix};
use crate::fields::Field;

/// `M[Q, α]` together with the row vectors `B(Q)` and `C(Q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpecialMatrix<F: Field> {
    pub big_q: u32,
    pub m: Matrix<F>,
    pub b: Vec<F::Elem>,
    pub c: Vec<F::Elem>,
}

/// `B(Q)`: `b_i = 1` iff `i ≡ 2Q−1 (mod 3)`.
pub fn b_row<F: Field>(field: &F, big_q: u32) -> Vec<F::Elem> {
    let target = (2 * big_q as u64 + 2) % 3;
    (0..big_q as u64).map(|i| field.from_bool(i % 3 == target)).collect()
}

pub fn c_row<F: Field>(field: &F, big_q: u32) -> Vec<F::Elem> {
    vec![field.one(); big_q as usize]
}

/// `m_ij = Σ α^q₀` over `q₀ | Q` with `3q₀ | i − j`.
pub fn build_m<F: Field>(field: &F, big_q: u32, alpha: &F::Elem) -> SpecialMatrix<F> {
    assert!(big_q.is_power_of_two());
    let n = big_q as usize;
    let divisors: Vec<u64> = (0..=big_q.trailing_zeros()).map(|e| 1u64 << e).collect();
    let powers: Vec<F::Elem> = divisors.iter().map(|&q0| field.pow(alpha, q0)).collect();
    let mut m = Matrix::zeros(field, n, n);
    for i in 0..n {
        for j in 0..n {
            let diff = (i as i64 - j as i64).unsigned_abs();
            let mut v = field.zero();
            for (q0, a) in divisors.iter().zip(&powers) {
                if diff.is_multiple_of(3 * q0) {
                    v = field.add(&v, a);
                }
            }
            m.set(i, j, v);
        }
    }
    SpecialMatrix {
        big_q,
        m,
        b: b_row(field, big_q),
        c: c_row(field, big_q),
    }
}

impl<F: Field> SpecialMatrix<F> {
    /// The `(Q+2) × Q` stack `[M; B; C]`.
    pub fn stacked(&self) -> Matrix<F> {
        let field = self.m.field();
        self.m
            .vstack(&Matrix::from_rows(field, vec![self.b.clone(), self.c.clone()]))
    }
}

/// Whether `m` vanishes on the diagonal and off matching residues mod 3,
/// and is nonzero elsewhere with entries depending only on `ord₂(i − j)`.
pub fn is_special<F: Field>(m: &Matrix<F>) -> bool {
    let field = m.field();
    let n = m.rows();
    if m.cols() != n {
        return false;
    }
    let mut by_ord: HashMap<u32, F::Elem> = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            let e = m.get(i, j);
            if i == j || (i as i64 - j as i64) % 3 != 0 {
                if !field.is_zero(e) {
                    return false;
                }
                continue;
            }
            if field.is_zero(e) {
                return false;
            }
            let ord = (i as i64 - j as i64).unsigned_abs().trailing_zeros();
            match by_ord.get(&ord) {
                Some(v) if v != e => return false,
                Some(_) => {}
                None => {
                    by_ord.insert(ord, e.clone());
                }
            }
        }
    }
    true
}

/// The block assertions for a special matrix with `Q ≥ 4`, using rows and
/// columns `[0, Q/4)`, `[Q/4, 3Q/4)`, `[3Q/4, Q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockReport {
    pub center_special: bool,
    pub m1_eq_m8: bool,
    pub m2_eq_m7: bool,
    pub m3_eq_m6: bool,
    pub m4_eq_m5: bool,
    pub m1_plus_m3_nonzero_scalar: bool,
}

impl BlockReport {
    pub fn passed(&self) -> bool {
        self.center_special
            && self.m1_eq_m8
            && self.m2_eq_m7
            && self.m3_eq_m6
            && self.m4_eq_m5
            && self.m1_plus_m3_nonzero_scalar
    }
}

fn is_nonzero_scalar<F: Field>(m: &Matrix<F>) -> bool {
    let field = m.field();
    let d = m.get(0, 0).clone();
    if field.is_zero(&d) {
        return false;
    }
    (0..m.rows()).all(|i| {
        (0..m.cols()).all(|j| {
            let e = m.get(i, j);
            if i == j {
                *e == d
            } else {
                field.is_zero(e)
            }
        })
    })
}

pub fn block_report<F: Field>(m: &Matrix<F>) -> BlockReport {
    let n = m.rows();
    let (a, b) = (n / 4, 3 * n / 4);
    let blk = |r0, r1, c0, c1| m.submatrix(r0, r1, c0, c1);
    let m1 = blk(0, a, 0, a);
    let m3 = blk(0, a, b, n);
    BlockReport {
        center_special: is_special(&blk(a, b, a, b)),
        m1_eq_m8: m1 == blk(b, n, b, n),
        m2_eq_m7: blk(0, a, a, b) == blk(b, n, a, b),
        m3_eq_m6: m3 == blk(b, n, 0, a),
        m4_eq_m5: blk(a, b, 0, a) == blk(a, b, b, n),
        m1_plus_m3_nonzero_scalar: is_nonzero_scalar(&m1.add(&m3)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpecialReport {
    pub big_q: u32,
    pub is_special: bool,
    /// Present for `Q ≥ 4`.
    pub blocks: Option<BlockReport>,
    pub nullity: usize,
    pub stacked_rank: usize,
}

impl SpecialReport {
    pub fn passed(&self) -> bool {
        self.is_special
            && self.blocks.is_none_or(|b| b.passed())
            && self.nullity == 2
            && self.stacked_rank == self.big_q as usize
    }
}

pub fn special_matrix_checks<F: LinearSolver>(sm: &SpecialMatrix<F>) -> SpecialReport {
    SpecialReport {
        big_q: sm.big_q,
        is_special: is_special(&sm.m),
        blocks: (sm.big_q >= 4).then(|| block_report(&sm.m)),
        nullity: sm.m.cols() - rank(&sm.m),
        stacked_rank: rank(&sm.stacked()),
    }
}

impl<F: LinearSolver> CounterexampleContext<F> {
    /// `M[Q, α]` with `B(Q)` and `C(Q)`; algebraic mode only.
    pub fn build_m(&self) -> Result<SpecialMatrix<F>, MonskyError> {
        self.require_algebraic()?;
        Ok(build_m(self.field(), self.big_q(), self.alpha()))
    }
}
