// Membership in the Fermat quintic k[x,y,z]/(x⁵ + y⁵ + z⁵).

use tightloc::fields::Gf2m;
use tightloc::graded::parse_poly;
use tightloc::membership::{member, GradedIdealSpec};

fn main() {
    let f = Gf2m::f2();
    let p = |s: &str| parse_poly(&f, s, None).unwrap();
    let relation = Some(p("x^5 + y^5 + z^5"));

    let i4 = GradedIdealSpec::new(&f, vec![p("x^4"), p("y^4")], relation.clone()).unwrap();
    let z6 = member(&p("z^6"), &i4).unwrap();
    println!("z^6 in (x^4, y^4): {z6}");
    assert!(z6);

    let i2 = GradedIdealSpec::new(&f, vec![p("x^2"), p("y^2")], relation).unwrap();
    let h = member(&p("xyz^4"), &i2).unwrap();
    println!("xyz*z^3 in (x^2, y^2): {h}");
    assert!(!h);
}
