use proptest::prelude::*;
use tightloc::cohomology::{frobenius_class, CechClass, H2Model};
use tightloc::fields::{Field, Gf2m};
use tightloc::graded::Poly;

use super::{config, homogeneous, Property};

pub const ALL: &[Property] = &[
    ("cohomology::amplification_preserves_the_class", amplification_preserves_the_class),
    ("cohomology::frobenius_is_semilinear", frobenius_is_semilinear),
    ("cohomology::multiples_of_g_vanish", multiples_of_g_vanish),
    ("cohomology::zero_classes_stay_zero_under_frobenius", zero_classes_stay_zero_under_frobenius),
];

/// F₈ with a random nonzero α and a class `h/(x^a y^b)`.
fn model_and_class() -> impl Strategy<Value = (H2Model<Gf2m>, CechClass<Gf2m>)> {
    let f = Gf2m::with_degree(3).unwrap();
    (1u32..8, 1u32..4, 1u32..4, 0u32..4).prop_flat_map(move |(alpha, a, b, extra)| {
        let model = H2Model::new(&f, alpha);
        let n = a + b + extra;
        homogeneous(&f, n, 6).prop_map(move |h| (model.clone(), CechClass::new(h, n, a, b).unwrap()))
    })
}

fn two_classes() -> impl Strategy<Value = (H2Model<Gf2m>, CechClass<Gf2m>, CechClass<Gf2m>, u32)> {
    let f = Gf2m::with_degree(3).unwrap();
    (1u32..8, 1u32..4, 1u32..4, 0u32..3, 0u32..8).prop_flat_map(move |(alpha, a, b, k, l)| {
        let model = H2Model::new(&f, alpha);
        let n = a + b + k;
        (homogeneous(&f, n, 5), homogeneous(&f, n + 1, 5)).prop_map(move |(h1, h2)| {
            let c1 = CechClass::new(h1, n, a, b).unwrap();
            let c2 = CechClass::new(h2, n + 1, a + 1, b).unwrap();
            (model.clone(), c1, c2, l)
        })
    })
}

proptest! {
    #![proptest_config(config())]

    fn amplification_preserves_the_class((model, c) in model_and_class(), da in 0u32..4, db in 0u32..4) {
        let (a, b) = c.denominators();
        let big = c.amplify(a + da, b + db);
        prop_assert_eq!(big.degree(), c.degree());
        prop_assert_eq!(model.class_is_zero(&c).unwrap(), model.class_is_zero(&big).unwrap());
    }

    fn frobenius_is_semilinear((model, c1, c2, l) in two_classes()) {
        let f = model.field().clone();
        let lhs = frobenius_class(&c1.add(&c2.scale(&l)));
        let rhs = frobenius_class(&c1).add(&frobenius_class(&c2).scale(&f.square(&l)));
        prop_assert!(model.class_is_zero(&lhs.add(&rhs)).unwrap());
    }

    fn multiples_of_g_vanish((model, c) in model_and_class()) {
        let (a, b) = c.denominators();
        let num = c.numerator().mul(model.g());
        let deg = c.degree() + 4 + (a + b) as i64;
        let k = CechClass::new(num, deg as u32, a, b).unwrap();
        prop_assert!(model.class_is_zero(&k).unwrap());
    }

    fn zero_classes_stay_zero_under_frobenius((model, c) in model_and_class()) {
        if model.class_is_zero(&c).unwrap() {
            prop_assert!(model.class_is_zero(&frobenius_class(&c)).unwrap());
        }
        let _ = Poly::<Gf2m>::zero(model.field());
    }
}
