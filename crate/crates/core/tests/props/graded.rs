use proptest::prelude::*;
use tightloc::exactla::rank;
use tightloc::fields::{Field, Gf2m};
use tightloc::graded::{mult_map, pairing_matrix, parse_poly, reduce, PieceBasis, Truncation};
use tightloc::membership::socle_monomial;

use super::{config, gf2m, homogeneous, Property};

pub const ALL: &[Property] = &[
    ("graded::truncated_product_is_associative", truncated_product_is_associative),
    ("graded::reduce_commutes_with_multiplication", reduce_commutes_with_multiplication),
    ("graded::mult_maps_compose", mult_maps_compose),
    ("graded::mult_map_is_linear", mult_map_is_linear),
    ("graded::frobenius_power_is_repeated_squaring", frobenius_power_is_repeated_squaring),
    ("graded::coords_round_trip", coords_round_trip),
    ("graded::socle_pairing_is_a_permutation", socle_pairing_is_a_permutation),
    ("graded::display_parses_back", display_parses_back),
    ("graded::piece_dimension_formula", piece_dimension_formula),
];

fn setup() -> impl Strategy<Value = (Gf2m, u32)> {
    (gf2m(4), prop::sample::select(vec![2u32, 4, 8]))
}

/// Monomials of degree n with every exponent below q, counted directly.
fn piece_dim(n: u32, q: u32) -> usize {
    (0..q)
        .flat_map(|i| (0..q).map(move |j| (i, j)))
        .filter(|&(i, j)| i + j <= n && n - i - j < q)
        .count()
}

proptest! {
    #![proptest_config(config())]

    fn truncated_product_is_associative(
        ((_f, q), a, b, c) in setup().prop_flat_map(|(f, q)| {
            let (a, b, c) = (homogeneous(&f, 2, 5), homogeneous(&f, 3, 5), homogeneous(&f, 1, 3));
            (Just((f, q)), a, b, c)
        })
    ) {
        let t = Truncation::cube(q);
        let l = a.mul_truncated(&b, &t).mul_truncated(&c, &t);
        let r = a.mul_truncated(&b.mul_truncated(&c, &t), &t);
        prop_assert_eq!(&l, &r);
        prop_assert_eq!(l, reduce(&a.mul(&b).mul(&c), &t));
    }

    fn reduce_commutes_with_multiplication(
        ((f, q), n, a, b) in setup().prop_flat_map(|(f, q)| (Just((f, q)), 0u32..6)).prop_flat_map(|((f, q), n)| {
            let (a, b) = (homogeneous(&f, 3, 6), homogeneous(&f, n, 6));
            (Just((f, q)), Just(n), a, b)
        })
    ) {
        let t = Truncation::cube(q);
        let map = mult_map(&a, &PieceBasis::new(n, t), &PieceBasis::new(n + 3, t)).unwrap();
        prop_assert_eq!(reduce(&a.mul(&b), &t), map.apply(&reduce(&b, &t)).unwrap());
        let _ = f.one();
    }

    fn mult_maps_compose(
        ((f, q), n, a, b) in setup().prop_flat_map(|(f, q)| (Just((f, q)), 0u32..8)).prop_flat_map(|((f, q), n)| {
            let (a, b) = (homogeneous(&f, 1, 3), homogeneous(&f, 2, 4));
            (Just((f, q)), Just(n), a, b)
        })
    ) {
        let t = Truncation::cube(q);
        let (s, m, e) = (PieceBasis::new(n, t), PieceBasis::new(n + 1, t), PieceBasis::new(n + 3, t));
        let ma = mult_map(&a, &s, &m).unwrap();
        let mb = mult_map(&b, &m, &e).unwrap();
        let mab = mult_map(&a.mul(&b), &s, &e).unwrap();
        prop_assert_eq!(mb.matrix.mul(&ma.matrix), mab.matrix);
        let _ = f.one();
    }

    fn mult_map_is_linear(
        ((f, q), a, b, c) in setup().prop_flat_map(|(f, q)| {
            let (a, b, c) = (homogeneous(&f, 2, 4), homogeneous(&f, 2, 4), super::elem(&f));
            (Just((f, q)), a, b, c)
        })
    ) {
        let t = Truncation::cube(q);
        let (s, e) = (PieceBasis::new(q, t), PieceBasis::new(q + 2, t));
        let sum = a.add(&b.scale(&c));
        let lhs = mult_map(&sum, &s, &e).unwrap().matrix;
        let mb = mult_map(&b, &s, &e).unwrap().matrix;
        let scaled = mb.try_map(&f, |x| Some(f.mul(x, &c))).unwrap();
        prop_assert_eq!(lhs, mult_map(&a, &s, &e).unwrap().matrix.add(&scaled));
    }

    fn frobenius_power_is_repeated_squaring(
        ((f, q), a, e) in setup().prop_flat_map(|(f, q)| (Just((f.clone(), q)), homogeneous(&f, 2, 5), 0u32..3))
    ) {
        let t = Truncation::cube(q);
        let direct = (0..(1u32 << e)).fold(tightloc::graded::Poly::one(&f), |acc, _| acc.mul_truncated(&a, &t));
        prop_assert_eq!(a.pow_truncated(1 << e, &t), direct.clone());
        prop_assert_eq!(reduce(&a.frobenius_power(e), &t), direct);
    }

    fn coords_round_trip(
        ((f, q), a) in setup().prop_flat_map(|(f, q)| (Just((f.clone(), q)), homogeneous(&f, 5, 8)))
    ) {
        let t = Truncation::cube(q);
        let b = PieceBasis::new(5, t);
        let v = b.coords(&a).unwrap();
        prop_assert_eq!(b.poly(&f, &v), reduce(&a, &t));
    }

    fn socle_pairing_is_a_permutation(q in prop::sample::select(vec![2u32, 4, 8, 16]), n in 0u32..46) {
        let n = n % (3 * q - 2);
        let f = Gf2m::f2();
        let t = Truncation::cube(q);
        let (l, r) = (PieceBasis::new(n, t), PieceBasis::new(3 * q - 3 - n, t));
        let p = pairing_matrix(&f, &l, &r, socle_monomial(q));
        prop_assert_eq!(l.dim(), r.dim());
        prop_assert_eq!(rank(&p), l.dim());
        for i in 0..p.rows() {
            prop_assert_eq!(p.row(i).iter().filter(|x| **x != 0).count(), 1);
        }
    }

    fn display_parses_back(
        (f, a) in gf2m(1).prop_flat_map(|f| (Just(f.clone()), homogeneous(&f, 4, 6)))
    ) {
        prop_assert_eq!(parse_poly(&f, &a.to_string(), None).unwrap(), a);
    }

    fn piece_dimension_formula(q in prop::sample::select(vec![2u32, 4, 8, 16, 32]), n in 0u32..200) {
        let n = n % (3 * q + 2);
        prop_assert_eq!(PieceBasis::new(n, Truncation::cube(q)).dim(), piece_dim(n, q));
    }
}
