use proptest::prelude::*;
use tightloc::exactla::{rank, Matrix};
use tightloc::fields::{sample_alpha, Field, Gf2m};
use tightloc::monsky::{b_row, build_m, build_r, c_row, is_special, special_matrix_checks, power_sum_bruteforce};

use super::{config, Property};

pub const ALL: &[Property] = &[
    ("monsky::random_special_matrices_have_nullity_two", random_special_matrices_have_nullity_two),
    ("monsky::special_predicate_detects_defects", special_predicate_detects_defects),
    ("monsky::sampled_m_passes_all_checks", sampled_m_passes_all_checks),
    ("monsky::powers_of_two_sums", powers_of_two_sums),
    ("monsky::r_has_the_defining_shape", r_has_the_defining_shape),
    ("monsky::power_sum_bruteforce_is_clean", power_sum_bruteforce_is_clean),
];

/// A special Q-matrix with the entry for `ord₂(i−j) = k` drawn from `vals`.
fn special(f: &Gf2m, big_q: usize, vals: &[u32]) -> Matrix<Gf2m> {
    let mut m = Matrix::zeros(f, big_q, big_q);
    for i in 0..big_q {
        for j in 0..big_q {
            if i != j && (i as i64 - j as i64) % 3 == 0 {
                let k = (i as i64 - j as i64).unsigned_abs().trailing_zeros() as usize;
                m.set(i, j, vals[k]);
            }
        }
    }
    m
}

fn nonzero_vals(f: &Gf2m) -> impl Strategy<Value = Vec<u32>> {
    let mask = (1u32 << f.degree()) - 1;
    prop::collection::vec((1u32..=mask).prop_map(|x| x), 8)
}

proptest! {
    #![proptest_config(config())]

    fn random_special_matrices_have_nullity_two(
        (f, vals) in (4u32..=10).prop_flat_map(|m| {
            let f = Gf2m::with_degree(m).unwrap();
            (Just(f.clone()), nonzero_vals(&f))
        }),
        e in 1u32..=6,
    ) {
        let big_q = 1usize << e;
        let m = special(&f, big_q, &vals);
        prop_assert!(is_special(&m));
        prop_assert_eq!(big_q - rank(&m), 2);
        let stacked = m
            .vstack(&Matrix::from_rows(&f, vec![b_row(&f, big_q as u32)]))
            .vstack(&Matrix::from_rows(&f, vec![c_row(&f, big_q as u32)]));
        prop_assert_eq!(rank(&stacked), big_q);
    }

    fn special_predicate_detects_defects(
        (f, vals) in Just(Gf2m::with_degree(6).unwrap()).prop_flat_map(|f| (Just(f.clone()), nonzero_vals(&f))),
        e in 2u32..=5,
        pos in (0usize..32, 0usize..32),
    ) {
        let big_q = 1usize << e;
        let mut m = special(&f, big_q, &vals);
        let (i, j) = (pos.0 % big_q, pos.1 % big_q);
        let old = *m.get(i, j);
        m.set(i, j, f.add(&old, &1));
        prop_assert!(!is_special(&m));
    }

    fn sampled_m_passes_all_checks(d in 2u32..=8) {
        let (f, a) = sample_alpha(d).unwrap();
        let sm = build_m(&f, 1 << (d - 1), &a);
        prop_assert!(special_matrix_checks(&sm).passed());
    }

    fn powers_of_two_sums(a_exps in prop::sample::subsequence((0u32..10).collect::<Vec<_>>(), 1..6), b_exps in prop::collection::vec(0u32..3, 6)) {
        let total: u64 = a_exps.iter().zip(&b_exps).map(|(a, b)| 1u64 << (a + b)).sum();
        if (total + 1).is_power_of_two() {
            prop_assert!(a_exps.iter().zip(&b_exps).all(|(_, b)| *b == 0));
        }
    }

    fn r_has_the_defining_shape(e in 3u32..=7) {
        let q = 1u32 << e;
        let f = Gf2m::f2();
        let r = build_r(&f, q);
        let mut count = 0;
        for (m, c) in r.terms() {
            let [a, b, z] = m.exponents();
            prop_assert!(f.is_one(c));
            prop_assert!(z == 1 || z == 2);
            prop_assert_eq!(a + b + z, q);
            prop_assert_eq!(a % 3, b % 3);
            count += 1;
        }
        let expected = (1..=2u32)
            .flat_map(|z| (0..=q - z).map(move |a| (a, q - z - a)))
            .filter(|(a, b)| a % 3 == b % 3)
            .count();
        prop_assert_eq!(count, expected);
    }
}

fn power_sum_bruteforce_is_clean() {
    let rep = power_sum_bruteforce(8, 2, 10);
    assert!(rep.cases > 0 && rep.passed(), "{rep:?}");
}
