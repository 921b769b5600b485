// Property suites shared by the `properties` and `acceptance` targets.
// Each module exposes `ALL`, a list of named property functions; every
// randomized property runs `CASES` cases.

#![allow(dead_code)]

pub mod cli;
pub mod cohomology;
pub mod exactla;
pub mod fields;
pub mod graded;
pub mod membership;
pub mod monsky;

use std::panic::{catch_unwind, AssertUnwindSafe};

use proptest::prelude::*;
use tightloc::exactla::Matrix;
use tightloc::fields::{Field, Gf2m};
use tightloc::graded::{Monomial, Poly};

pub const CASES: u32 = 256;

pub type Property = (&'static str, fn());

pub fn suites() -> Vec<(&'static str, &'static [Property])> {
    vec![
        ("fields", fields::ALL),
        ("graded", graded::ALL),
        ("exactla", exactla::ALL),
        ("membership", membership::ALL),
        ("monsky", monsky::ALL),
        ("cohomology", cohomology::ALL),
        ("cli", cli::ALL),
    ]
}

/// Runs every property, returning the names of those that failed.
pub fn run(props: &[Property]) -> Vec<&'static str> {
    props
        .iter()
        .filter(|(_, f)| catch_unwind(AssertUnwindSafe(f)).is_err())
        .map(|(name, _)| *name)
        .collect()
}

pub fn config() -> ProptestConfig {
    ProptestConfig {
        cases: CASES,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn gf2m(max_m: u32) -> impl Strategy<Value = Gf2m> {
    (1..=max_m).prop_map(|m| Gf2m::with_degree(m).unwrap())
}

pub fn elem(f: &Gf2m) -> impl Strategy<Value = u32> {
    let mask = (1u32 << f.degree()) - 1;
    any::<u32>().prop_map(move |x| x & mask)
}

pub fn elems(f: &Gf2m, n: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(elem(f), n)
}

/// A field together with `n` of its elements.
pub fn field_with(max_m: u32, n: usize) -> impl Strategy<Value = (Gf2m, Vec<u32>)> {
    gf2m(max_m).prop_flat_map(move |f| {
        let e = elems(&f, n);
        (Just(f), e)
    })
}

/// A homogeneous polynomial of degree `n` with at most `terms` terms.
pub fn homogeneous(f: &Gf2m, n: u32, terms: usize) -> impl Strategy<Value = Poly<Gf2m>> {
    let f = f.clone();
    let mono = (0..=n).prop_flat_map(move |i| (Just(i), 0..=n - i));
    prop::collection::vec((mono, elem(&f)), 0..=terms).prop_map(move |ts| {
        Poly::from_terms(
            &f,
            ts.into_iter()
                .map(|((i, j), c)| (Monomial::new(i, j, n - i - j), c)),
        )
    })
}

pub fn matrix(f: &Gf2m, max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix<Gf2m>> {
    let f = f.clone();
    (1..=max_rows, 1..=max_cols).prop_flat_map(move |(r, c)| {
        let f = f.clone();
        prop::collection::vec(elems(&f, c), r).prop_map(move |rows| Matrix::from_rows(&f, rows))
    })
}

/// Rank by textbook elimination on a copy of the rows; shares no code with
/// the crate's solvers.
pub fn oracle_rank<F: Field>(field: &F, rows: Vec<Vec<F::Elem>>) -> usize {
    let mut rows = rows;
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !field.is_zero(&rows[r][c])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][c]).unwrap();
        let pivot: Vec<_> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for r in 0..rows.len() {
            if r != rank && !field.is_zero(&rows[r][c]) {
                let k = rows[r][c].clone();
                for j in 0..cols {
                    let t = field.mul(&k, &pivot[j]);
                    rows[r][j] = field.add(&rows[r][j], &t);
                }
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}

pub fn matrix_rows<F: Field>(m: &Matrix<F>) -> Vec<Vec<F::Elem>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}
