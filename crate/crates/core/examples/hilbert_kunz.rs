// Colength of (x^q, y^q, z^q, g) on the generic fiber and at α = 1.

use tightloc::fields::{Field, Gf2m, RatFunc, RatFuncField};
use tightloc::membership::hk_colength;
use tightloc::monsky::quartic_g;

fn main() {
    let generic = quartic_g(&RatFuncField, &RatFunc::t());
    let f2 = Gf2m::f2();
    let special = quartic_g(&f2, &f2.one());
    for q in [2, 4, 8, 16] {
        let a = hk_colength(&generic, q).unwrap();
        let b = hk_colength(&special, q).unwrap();
        println!("q = {q:2}: generic {:4}, alpha = 1 {:4}, 3q^2 - 4 = {}", a.total, b.total, 3 * q * q - 4);
        assert_eq!(a.total as u32, 3 * q * q - 4);
    }
}
