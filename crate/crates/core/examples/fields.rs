// Arithmetic in F₁₆ and F₂(t), and the Artin–Schreier degree of a few
// elements.

use tightloc::fields::{artin_schreier_degree, sample_alpha, Field, Gf2m, RatFunc, RatFuncField};

fn main() {
    let f16 = Gf2m::with_degree(4).expect("degree 4 is supported");
    let u = f16.generator();
    let a = f16.add(&f16.square(&u), &u);
    println!("F16 modulus {}", f16.modulus().render("u"));
    println!("u^2 + u = {}, inverse {}", f16.render(&a), f16.render(&f16.inv(&a).unwrap()));
    assert_eq!(f16.frobenius(&u, 4), u);

    for x in [1, u, a] {
        println!("m({}) = {}", f16.render(&x), artin_schreier_degree(&f16, &x));
    }

    let (field, alpha) = sample_alpha(5).unwrap();
    println!("sample_alpha(5) = {} in {}", field.render(&alpha), field.descriptor());
    assert_eq!(artin_schreier_degree(&field, &alpha), 5);

    let k = RatFuncField;
    let t = RatFunc::t();
    let r = k.inv(&k.add(&k.square(&t), &k.one())).unwrap();
    println!("1/(t^2 + 1) = {}", k.render(&r));
    assert_eq!(k.mul(&r, &k.add(&k.square(&t), &k.one())), k.one());
}
