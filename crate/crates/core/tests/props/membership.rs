use proptest::prelude::*;
use tightloc::fields::{Field, Gf2m};
use tightloc::graded::{Monomial, Poly, PieceBasis, Truncation};
use tightloc::membership::{fiber_dim, frobenius_test, hk_colength, member, GradedIdealSpec};

use super::{config, gf2m, homogeneous, Property};

pub const ALL: &[Property] = &[
    ("membership::monomials_in_monomial_ideals", monomials_in_monomial_ideals),
    ("membership::multiples_of_generators_are_members", multiples_of_generators_are_members),
    ("membership::members_form_a_subspace", members_form_a_subspace),
    ("membership::monotone_in_the_ideal", monotone_in_the_ideal),
    ("membership::frobenius_test_matches_direct_power", frobenius_test_matches_direct_power),
    ("membership::colength_is_sum_of_fibers", colength_is_sum_of_fibers),
];

fn caps() -> impl Strategy<Value = [u32; 3]> {
    [1u32..5, 1u32..5, 1u32..5]
}

/// A quartic relation with a nonzero z⁴ term, so it is never a zero divisor
/// issue for the pure-power part.
fn quartic(f: &Gf2m) -> impl Strategy<Value = Poly<Gf2m>> {
    let g = f.clone();
    homogeneous(f, 4, 5).prop_map(move |p| {
        let lead = Monomial::new(0, 0, 4);
        let mut p = p;
        if g.is_zero(&p.coeff(&lead)) {
            p.add_term(lead, g.one());
        }
        p
    })
}

proptest! {
    #![proptest_config(config())]

    fn monomials_in_monomial_ideals(c in caps(), e in [0u32..7, 0u32..7, 0u32..7]) {
        let f = Gf2m::f2();
        let ideal = GradedIdealSpec::pure_powers(&f, c, None).unwrap();
        let h = Poly::mono(&f, e[0], e[1], e[2]);
        let expected = (0..3).any(|i| e[i] >= c[i]);
        prop_assert_eq!(member(&h, &ideal).unwrap(), expected);
    }

    fn multiples_of_generators_are_members(
        (f, g, gen, mult) in gf2m(3).prop_flat_map(|f| {
            (Just(f.clone()), quartic(&f), homogeneous(&f, 3, 4), homogeneous(&f, 2, 4))
        })
    ) {
        prop_assume!(!gen.is_zero());
        let ideal = GradedIdealSpec::new(&f, vec![gen.clone()], Some(g.clone())).unwrap();
        prop_assert!(member(&gen.mul(&mult), &ideal).unwrap());
        let gm = g.mul(&mult);
        if !gm.is_zero() {
            prop_assert!(member(&gm, &ideal).unwrap());
        }
    }

    fn members_form_a_subspace(
        (f, g, a, b, l) in gf2m(3).prop_flat_map(|f| {
            (Just(f.clone()), quartic(&f), homogeneous(&f, 5, 6), homogeneous(&f, 5, 6), super::elem(&f))
        })
    ) {
        let ideal = GradedIdealSpec::pure_powers(&f, [2, 3, 5], Some(g)).unwrap();
        let (ma, mb) = (member(&a, &ideal).unwrap(), member(&b, &ideal).unwrap());
        let s = a.add(&b.scale(&l));
        if ma && mb {
            prop_assert!(member(&s, &ideal).unwrap());
        }
        if ma && !mb && !f.is_zero(&l) {
            prop_assert!(!member(&s, &ideal).unwrap());
        }
    }

    fn monotone_in_the_ideal(
        (f, g, h, extra) in gf2m(2).prop_flat_map(|f| {
            (Just(f.clone()), quartic(&f), homogeneous(&f, 6, 6), homogeneous(&f, 3, 3))
        }),
        c in caps(),
    ) {
        let pp = |e: [u32; 3]| -> Vec<Poly<Gf2m>> {
            vec![Poly::mono(&f, e[0], 0, 0), Poly::mono(&f, 0, e[1], 0), Poly::mono(&f, 0, 0, e[2])]
        };
        let small = GradedIdealSpec::new(&f, pp(c), Some(g.clone())).unwrap();
        let mut gens = pp(c);
        if !extra.is_zero() {
            gens.push(extra);
        }
        let big = GradedIdealSpec::new(&f, gens, Some(g)).unwrap();
        if member(&h, &small).unwrap() {
            prop_assert!(member(&h, &big).unwrap());
        }
    }

    fn frobenius_test_matches_direct_power(
        (f, g, c, x) in gf2m(2).prop_flat_map(|f| {
            (Just(f.clone()), quartic(&f), homogeneous(&f, 1, 3), homogeneous(&f, 2, 4))
        }),
        e in 0u32..3,
        caps in caps(),
    ) {
        let qf = 1u64 << e;
        let ideal = GradedIdealSpec::pure_powers(&f, caps, None).unwrap();
        let bracket = GradedIdealSpec::pure_powers(&f, caps.map(|k| k << e), Some(g.clone())).unwrap();
        let h = c.mul(&x.pow(qf));
        prop_assert_eq!(frobenius_test(&c, &x, &ideal, &g, qf).unwrap(), member(&h, &bracket).unwrap());
    }

    fn colength_is_sum_of_fibers(
        (f, g) in gf2m(3).prop_flat_map(|f| (Just(f.clone()), quartic(&f))),
        q in prop::sample::select(vec![2u32, 4]),
    ) {
        let hk = hk_colength(&g, q).unwrap();
        prop_assert_eq!(hk.total, hk.dims.iter().sum::<usize>());
        for n in 0..4.min(3 * q - 2) {
            prop_assert_eq!(fiber_dim(&g, q, n).unwrap(), PieceBasis::new(n, Truncation::cube(q)).dim());
        }
        let _ = f.one();
    }
}
