//! Textbook Gaussian elimination over any [`Field`]. Slow but obviously
//! correct; the specialised engines are tested against it.

use super::Matrix;
use crate::fields::Field;

/// Row-reduces `m` in place using pivots among the first `pivot_limit`
/// columns. With `full` the result is reduced row echelon form, otherwise
/// only entries below each pivot are cleared. Returns the pivot columns.
pub fn eliminate<F: Field>(m: &mut Matrix<F>, pivot_limit: usize, full: bool) -> Vec<usize> {
    let field = m.field().clone();
    let (rows, cols) = (m.rows(), m.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..pivot_limit.min(cols) {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !field.is_zero(m.get(i, col))) else {
            continue;
        };
        m.swap_rows(p, r);
        let inv = field.inv(m.get(r, col)).expect("pivot is nonzero");
        if !field.is_one(&inv) {
            for e in &mut m.row_mut(r)[col..] {
                *e = field.mul(e, &inv);
            }
        }
        let pivot_row: Vec<F::Elem> = m.row(r)[col..].to_vec();
        let start = if full { 0 } else { r + 1 };
        for i in start..rows {
            if i == r {
                continue;
            }
            let factor = m.get(i, col).clone();
            if field.is_zero(&factor) {
                continue;
            }
            let row = &mut m.row_mut(i)[col..];
            for (dst, src) in row.iter_mut().zip(&pivot_row) {
                if !field.is_zero(src) {
                    *dst = field.add(dst, &field.mul(&factor, src));
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    let mut m = a.clone();
    eliminate(&mut m, a.cols(), false).len()
}

pub fn rref<F: Field>(a: &Matrix<F>) -> (Matrix<F>, Vec<usize>) {
    let mut m = a.clone();
    let pivots = eliminate(&mut m, a.cols(), true);
    (m, pivots)
}

/// Kernel basis read off a reduced row echelon form: one vector per free
/// column, with a one in that column.
pub fn kernel_from_rref<F: Field>(r: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F::Elem>> {
    let field = r.field();
    let cols = r.cols();
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).clone();
            }
            v
        })
        .collect()
}

pub fn kernel<F: Field>(a: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    let (r, pivots) = rref(a);
    kernel_from_rref(&r, &pivots)
}

/// Solves `A x = b` for each right-hand side, returning one particular
/// solution or `None` when `b` is outside the column space.
pub fn solve_many<F: Field>(a: &Matrix<F>, bs: &[Vec<F::Elem>]) -> Vec<Option<Vec<F::Elem>>> {
    let mut aug = a.hstack_columns(bs);
    let pivots = eliminate(&mut aug, a.cols(), true);
    read_solutions(a.cols(), bs.len(), &pivots, |r, c| aug.get(r, c).clone(), aug.rows(), a.field())
}

pub(crate) fn read_solutions<F: Field>(
    cols: usize,
    rhs: usize,
    pivots: &[usize],
    get: impl Fn(usize, usize) -> F::Elem,
    rows: usize,
    field: &F,
) -> Vec<Option<Vec<F::Elem>>> {
    (0..rhs)
        .map(|j| {
            let c = cols + j;
            if (pivots.len()..rows).any(|i| !field.is_zero(&get(i, c))) {
                return None;
            }
            let mut x = vec![field.zero(); cols];
            for (i, &p) in pivots.iter().enumerate() {
                x[p] = get(i, c);
            }
            Some(x)
        })
        .collect()
}
