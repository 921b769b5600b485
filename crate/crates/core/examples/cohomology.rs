// H² of the quartic cone via Čech classes: graded dimensions and the
// Frobenius on the degree-0 piece.

use tightloc::cohomology::H2Model;
use tightloc::fields::{Field, Gf2m};

fn main() {
    let f = Gf2m::f2();
    let model = H2Model::new(&f, f.one());
    for k in (-4..=1).rev() {
        println!("dim H^2_{k} = {}", model.piece_basis_h2(k).unwrap().len());
    }
    let action = model.degree_zero_action().unwrap();
    println!("Frobenius on degree 0:");
    for i in 0..action.rows() {
        let row: Vec<_> = action.row(i).iter().map(|a| f.render(a)).collect();
        println!("  {}", row.join(" "));
    }
    let rep = model.frobenius_injectivity_check(-4).unwrap();
    assert!(rep.passed());
    assert!(model.socle_check().unwrap().passed());
}
