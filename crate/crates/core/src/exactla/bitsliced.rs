//! Gaussian elimination over F₂ᵐ on bit planes.
//!
//! A row is stored as `m` planes of `u64` words; plane `k` holds bit `k` of
//! every entry. Adding `c · src` to a row is then `m²` word-wise XOR passes
//! driven by the F₂-matrix of multiplication by `c`, which is much faster
//! than entrywise table lookups for the small `m` used here.

use super::Matrix;
use crate::fields::{Field, Gf2m};

/// Largest extension degree handled on bit planes.
pub const MAX_PLANES: u32 = 10;

pub(crate) struct BitMatrix {
    m: usize,
    rows: usize,
    cols: usize,
    words: usize,
    stride: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(m: usize, rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        let stride = m * words;
        Self {
            m,
            rows,
            cols,
            words,
            stride,
            data: vec![0; rows * stride],
        }
    }

    /// `a` with the given extra columns appended on the right.
    pub fn from_matrix(a: &Matrix<Gf2m>, extra: &[Vec<u32>]) -> Self {
        let m = a.field().degree() as usize;
        let mut bm = Self::zeros(m, a.rows(), a.cols() + extra.len());
        for r in 0..a.rows() {
            for (c, &v) in a.row(r).iter().enumerate() {
                if v != 0 {
                    bm.set(r, c, v);
                }
            }
            for (j, col) in extra.iter().enumerate() {
                if col[r] != 0 {
                    bm.set(r, a.cols() + j, col[r]);
                }
            }
        }
        bm
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        let base = r * self.stride + c / 64;
        let bit = c % 64;
        let mut v = 0u32;
        for k in 0..self.m {
            v |= (((self.data[base + k * self.words] >> bit) & 1) as u32) << k;
        }
        v
    }

    #[inline]
    fn nonzero(&self, r: usize, c: usize) -> bool {
        let base = r * self.stride + c / 64;
        let mask = 1u64 << (c % 64);
        (0..self.m).any(|k| self.data[base + k * self.words] & mask != 0)
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        let base = r * self.stride + c / 64;
        let mask = 1u64 << (c % 64);
        for k in 0..self.m {
            let w = &mut self.data[base + k * self.words];
            if (v >> k) & 1 == 1 {
                *w |= mask;
            } else {
                *w &= !mask;
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let s = self.stride;
        let (head, tail) = self.data.split_at_mut(hi * s);
        head[lo * s..(lo + 1) * s].swap_with_slice(&mut tail[..s]);
    }

    /// Images of the basis `1, u, …, u^(m−1)` under multiplication by `c`.
    fn mul_columns(field: &Gf2m, c: u32, m: usize) -> Vec<u32> {
        (0..m).map(|l| field.mul(&c, &(1u32 << l))).collect()
    }

    /// Row `r` becomes `c · row r`, touching words from `w0` on.
    fn scale_row(&mut self, r: usize, c: u32, field: &Gf2m, w0: usize) {
        let cl = Self::mul_columns(field, c, self.m);
        let (m, words) = (self.m, self.words);
        let row = &mut self.data[r * self.stride..(r + 1) * self.stride];
        let old: Vec<u64> = row.to_vec();
        for k in 0..m {
            for w in w0..words {
                row[k * words + w] = 0;
            }
        }
        for (l, &img) in cl.iter().enumerate() {
            for k in 0..m {
                if (img >> k) & 1 == 1 {
                    for w in w0..words {
                        row[k * words + w] ^= old[l * words + w];
                    }
                }
            }
        }
    }

    /// Row `r` += `c · src`, where `src` is a full row in plane layout.
    fn axpy(&mut self, r: usize, cl: &[u32], src: &[u64], w0: usize) {
        let (m, words) = (self.m, self.words);
        let row = &mut self.data[r * self.stride..(r + 1) * self.stride];
        for (l, &img) in cl.iter().enumerate() {
            let s = &src[l * words + w0..(l + 1) * words];
            for k in 0..m {
                if (img >> k) & 1 == 1 {
                    let d = &mut row[k * words + w0..(k + 1) * words];
                    for (x, y) in d.iter_mut().zip(s) {
                        *x ^= y;
                    }
                }
            }
        }
    }

    /// Same contract as [`super::elementwise::eliminate`].
    pub fn eliminate(&mut self, field: &Gf2m, pivot_limit: usize, full: bool) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..pivot_limit.min(self.cols) {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.nonzero(i, col)) else {
                continue;
            };
            self.swap_rows(p, r);
            let w0 = col / 64;
            let v = self.get(r, col);
            if v != 1 {
                let inv = field.inv(&v).expect("pivot is nonzero");
                self.scale_row(r, inv, field, w0);
            }
            let src: Vec<u64> = self.data[r * self.stride..(r + 1) * self.stride].to_vec();
            let start = if full { 0 } else { r + 1 };
            for i in start..self.rows {
                if i == r {
                    continue;
                }
                let e = self.get(i, col);
                if e == 0 {
                    continue;
                }
                let cl = Self::mul_columns(field, e, self.m);
                self.axpy(i, &cl, &src, w0);
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn to_matrix(&self, field: &Gf2m) -> Matrix<Gf2m> {
        let mut out = Matrix::zeros(field, self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
}

pub fn applies(field: &Gf2m) -> bool {
    field.degree() <= MAX_PLANES
}

pub fn rank(a: &Matrix<Gf2m>) -> usize {
    let mut bm = BitMatrix::from_matrix(a, &[]);
    bm.eliminate(a.field(), a.cols(), false).len()
}

pub fn rref(a: &Matrix<Gf2m>) -> (Matrix<Gf2m>, Vec<usize>) {
    let mut bm = BitMatrix::from_matrix(a, &[]);
    let pivots = bm.eliminate(a.field(), a.cols(), true);
    (bm.to_matrix(a.field()), pivots)
}

pub fn kernel(a: &Matrix<Gf2m>) -> Vec<Vec<u32>> {
    let mut bm = BitMatrix::from_matrix(a, &[]);
    let pivots = bm.eliminate(a.field(), a.cols(), true);
    let mut is_pivot = vec![false; a.cols()];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..a.cols())
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![0u32; a.cols()];
            v[free] = 1;
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = bm.get(i, free);
            }
            v
        })
        .collect()
}

pub fn solve_many(a: &Matrix<Gf2m>, bs: &[Vec<u32>]) -> Vec<Option<Vec<u32>>> {
    let mut bm = BitMatrix::from_matrix(a, bs);
    let pivots = bm.eliminate(a.field(), a.cols(), true);
    super::elementwise::read_solutions(
        a.cols(),
        bs.len(),
        &pivots,
        |r, c| bm.get(r, c),
        bm.rows(),
        a.field(),
    )
}

/// Whether `b` lies in the column space of `a`, without back substitution.
pub fn column_space_contains(a: &Matrix<Gf2m>, b: &[u32]) -> bool {
    let mut bm = BitMatrix::from_matrix(a, &[b.to_vec()]);
    let pivots = bm.eliminate(a.field(), a.cols() + 1, false);
    pivots.last() != Some(&a.cols())
}
