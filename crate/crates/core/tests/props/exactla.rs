use proptest::prelude::*;
use tightloc::exactla::{
    certified_rank, column_space_contains, kernel_basis, rank, rank_nullity, rref, solve, solve_many, EchelonBasis,
    Matrix,
};
use tightloc::fields::{Field, Gf2Poly, Gf2m, RatFunc, RatFuncField};

use super::{config, elems, gf2m, matrix, matrix_rows, oracle_rank, Property};

pub const ALL: &[Property] = &[
    ("exactla::rank_matches_oracle", rank_matches_oracle),
    ("exactla::rank_nullity_and_kernel", rank_nullity_and_kernel),
    ("exactla::solve_contract", solve_contract),
    ("exactla::solve_many_matches_solve", solve_many_matches_solve),
    ("exactla::permutation_and_transpose_invariance", permutation_and_transpose_invariance),
    ("exactla::rref_is_reduced", rref_is_reduced),
    ("exactla::echelon_basis_tracks_rank", echelon_basis_tracks_rank),
    ("exactla::ratfunc_certified_rank_matches_oracle", ratfunc_certified_rank_matches_oracle),
];

/// Field sizes straddle the bit-sliced limit so both elimination paths run.
fn field_and_matrix(r: usize, c: usize) -> impl Strategy<Value = (Gf2m, Matrix<Gf2m>)> {
    gf2m(12).prop_flat_map(move |f| (Just(f.clone()), matrix(&f, r, c)))
}

/// Low-rank matrices are the interesting ones; build some as products.
fn field_and_low_rank(r: usize, c: usize) -> impl Strategy<Value = (Gf2m, Matrix<Gf2m>)> {
    (gf2m(12), 1..=r, 1..=c, 1usize..4).prop_flat_map(|(f, r, c, k)| {
        let g = f.clone();
        (
            prop::collection::vec(elems(&f, k), r),
            prop::collection::vec(elems(&f, c), k),
        )
            .prop_map(move |(a, b)| {
                let m = Matrix::from_rows(&g, a).mul(&Matrix::from_rows(&g, b));
                (g.clone(), m)
            })
    })
}

fn either(r: usize, c: usize) -> impl Strategy<Value = (Gf2m, Matrix<Gf2m>)> {
    prop_oneof![field_and_matrix(r, c), field_and_low_rank(r, c)]
}

fn ratfunc_entry() -> impl Strategy<Value = RatFunc> {
    (0u64..16, 1u64..8).prop_map(|(n, d)| RatFunc::new(Gf2Poly::from_bits(n), Gf2Poly::from_bits(d)).unwrap())
}

proptest! {
    #![proptest_config(config())]

    fn rank_matches_oracle((f, a) in either(14, 14)) {
        prop_assert_eq!(rank(&a), oracle_rank(&f, matrix_rows(&a)));
    }

    fn rank_nullity_and_kernel((f, a) in either(10, 12)) {
        let (r, n) = rank_nullity(&a);
        prop_assert_eq!(r + n, a.cols());
        let ker = kernel_basis(&a);
        prop_assert_eq!(ker.len(), n);
        for v in &ker {
            prop_assert!(a.mul_vec(v).iter().all(|x| f.is_zero(x)));
        }
        if !ker.is_empty() {
            prop_assert_eq!(oracle_rank(&f, ker), n);
        }
    }

    fn solve_contract(((f, a), seed) in either(10, 10).prop_flat_map(|(f, a)| {
        let x = elems(&f, a.cols());
        (Just((f, a)), x)
    })) {
        let b = a.mul_vec(&seed);
        let x = solve(&a, &b).expect("b = A·seed is solvable");
        prop_assert_eq!(a.mul_vec(&x), b.clone());
        prop_assert!(column_space_contains(&a, &b));
        let _ = f.one();
    }

    fn solve_many_matches_solve(((_f, a), bs) in either(8, 8).prop_flat_map(|(f, a)| {
        let bs = prop::collection::vec(elems(&f, a.rows()), 1..4);
        (Just((f, a)), bs)
    })) {
        let many = solve_many(&a, &bs);
        for (b, s) in bs.iter().zip(many) {
            prop_assert_eq!(s.is_some(), solve(&a, b).is_some());
            prop_assert_eq!(s.is_some(), column_space_contains(&a, b));
            if let Some(x) = s {
                prop_assert_eq!(&a.mul_vec(&x), b);
            }
        }
    }

    fn permutation_and_transpose_invariance(((_f, a), rp, cp) in either(9, 9).prop_flat_map(|(f, a)| {
        let rp = Just((0..a.rows()).collect::<Vec<_>>()).prop_shuffle();
        let cp = Just((0..a.cols()).collect::<Vec<_>>()).prop_shuffle();
        (Just((f, a)), rp, cp)
    })) {
        let f = a.field().clone();
        let rows: Vec<Vec<u32>> = rp.iter().map(|&i| cp.iter().map(|&j| *a.get(i, j)).collect()).collect();
        let b = Matrix::from_rows(&f, rows);
        prop_assert_eq!(rank(&a), rank(&b));
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    fn rref_is_reduced((f, a) in either(10, 10)) {
        let (r, pivots) = rref(&a);
        prop_assert_eq!(pivots.len(), rank(&a));
        for (i, &c) in pivots.iter().enumerate() {
            prop_assert!(f.is_one(r.get(i, c)));
            for k in 0..r.rows() {
                if k != i {
                    prop_assert!(f.is_zero(r.get(k, c)));
                }
            }
        }
        for i in pivots.len()..r.rows() {
            prop_assert!(r.row(i).iter().all(|x| f.is_zero(x)));
        }
        prop_assert_eq!(oracle_rank(&f, matrix_rows(&r)), pivots.len());
    }

    fn echelon_basis_tracks_rank((f, a) in either(12, 8)) {
        let mut e = EchelonBasis::new(&f, a.cols());
        let mut grew = 0;
        for i in 0..a.rows() {
            let before = e.contains(a.row(i));
            let added = e.insert(a.row(i));
            prop_assert_eq!(before, !added);
            prop_assert!(e.contains(a.row(i)));
            grew += added as usize;
        }
        prop_assert_eq!(grew, rank(&a));
        prop_assert_eq!(e.rank(), rank(&a));
    }

    fn ratfunc_certified_rank_matches_oracle(
        (r, c) in (1usize..5, 1usize..5),
        entries in prop::collection::vec(ratfunc_entry(), 25),
        low in any::<bool>(),
    ) {
        let k = RatFuncField;
        let mut rows: Vec<Vec<RatFunc>> = (0..r).map(|i| entries[i * 5..i * 5 + c].to_vec()).collect();
        if low && r > 1 {
            // Force a dependency: last row = t·(first row).
            rows[r - 1] = rows[0].iter().map(|x| k.mul(x, &RatFunc::t())).collect();
        }
        let m = Matrix::from_rows(&k, rows.clone());
        let (rk, _) = certified_rank(&m);
        prop_assert_eq!(rk, oracle_rank(&k, rows));
        prop_assert_eq!(rk, rank(&m));
    }
}
