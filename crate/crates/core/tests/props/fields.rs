use proptest::prelude::*;
use tightloc::fields::{
    artin_schreier_degree, sample_alpha, Field, FieldDescriptor, Gf2Poly, Gf2m, RatFunc, RatFuncField,
};

use super::{config, field_with, Property};

pub const ALL: &[Property] = &[
    ("fields::ring_axioms", ring_axioms),
    ("fields::inverses", inverses),
    ("fields::frobenius_is_additive_and_periodic", frobenius_is_additive_and_periodic),
    ("fields::artin_schreier_matches_orbit_length", artin_schreier_matches_orbit_length),
    ("fields::sample_alpha_has_requested_degree", sample_alpha_has_requested_degree),
    ("fields::ratfunc_axioms", ratfunc_axioms),
    ("fields::ratfunc_evaluation_is_multiplicative", ratfunc_evaluation_is_multiplicative),
    ("fields::descriptor_round_trip", descriptor_round_trip),
];

fn small_poly() -> impl Strategy<Value = Gf2Poly> {
    (0u64..1 << 6).prop_map(Gf2Poly::from_bits)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (small_poly(), (1u64..1 << 5)).prop_map(|(n, d)| RatFunc::new(n, Gf2Poly::from_bits(d)).unwrap())
}

/// Period of `b` under squaring.
fn orbit_length(f: &Gf2m, b: u32) -> u32 {
    let mut k = 1;
    let mut x = f.square(&b);
    while x != b {
        x = f.square(&x);
        k += 1;
    }
    k
}

proptest! {
    #![proptest_config(config())]

    fn ring_axioms((f, v) in field_with(12, 3)) {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
        prop_assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
        prop_assert!(f.is_zero(&f.add(a, a)));
        prop_assert_eq!(f.mul(a, &f.one()), *a);
    }

    fn inverses((f, v) in field_with(16, 1)) {
        let a = v[0];
        match f.inv(&a) {
            None => prop_assert!(f.is_zero(&a)),
            Some(i) => prop_assert!(f.is_one(&f.mul(&a, &i))),
        }
    }

    fn frobenius_is_additive_and_periodic((f, v) in field_with(12, 2)) {
        let (a, b) = (&v[0], &v[1]);
        prop_assert_eq!(f.square(&f.add(a, b)), f.add(&f.square(a), &f.square(b)));
        prop_assert_eq!(f.frobenius(a, f.degree()), *a);
        prop_assert_eq!(f.pow(a, f.order() - 1), f.from_bool(!f.is_zero(a)));
    }

    fn artin_schreier_matches_orbit_length((f, v) in field_with(8, 1)) {
        // β is chosen at random and α = β² + β, so m(α) is the degree of β.
        let b = v[0];
        let a = f.add(&f.square(&b), &b);
        prop_assume!(!f.is_zero(&a));
        prop_assert_eq!(artin_schreier_degree(&f, &a), orbit_length(&f, b));
    }

    fn sample_alpha_has_requested_degree(d in 2u32..=14) {
        let (f, a) = sample_alpha(d).unwrap();
        prop_assert_eq!(f.degree(), d);
        prop_assert_eq!(artin_schreier_degree(&f, &a), d);
    }

    fn ratfunc_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        let k = RatFuncField;
        prop_assert_eq!(k.mul(&k.mul(&a, &b), &c), k.mul(&a, &k.mul(&b, &c)));
        prop_assert_eq!(k.mul(&a, &k.add(&b, &c)), k.add(&k.mul(&a, &b), &k.mul(&a, &c)));
        if let Some(i) = k.inv(&a) {
            prop_assert!(k.is_one(&k.mul(&a, &i)));
        } else {
            prop_assert!(a.is_zero());
        }
        let s = k.square(&k.add(&a, &b));
        prop_assert_eq!(s, k.add(&k.square(&a), &k.square(&b)));
    }

    fn ratfunc_evaluation_is_multiplicative(a in ratfunc(), b in ratfunc(), p in 0u32..256) {
        let f = Gf2m::with_degree(8).unwrap();
        let k = RatFuncField;
        if let (Some(x), Some(y)) = (a.evaluate(&f, p), b.evaluate(&f, p)) {
            prop_assert_eq!(k.mul(&a, &b).evaluate(&f, p), Some(f.mul(&x, &y)));
            prop_assert_eq!(k.add(&a, &b).evaluate(&f, p), Some(f.add(&x, &y)));
        }
    }

    fn descriptor_round_trip(m in 1u32..=20) {
        let f = Gf2m::with_degree(m).unwrap();
        let d = f.descriptor();
        let back: FieldDescriptor = d.to_string().parse().unwrap();
        prop_assert_eq!(back, d);
    }
}
