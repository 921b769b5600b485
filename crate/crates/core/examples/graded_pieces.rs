// Graded pieces of k[x,y,z]/(x^q, y^q, z^q), a multiplication map and the
// socle pairing.

use tightloc::exactla::rank;
use tightloc::fields::{Field, Gf2m};
use tightloc::graded::{mult_map, pairing_matrix, parse_poly, PieceBasis, Truncation};
use tightloc::membership::socle_monomial;

fn main() {
    let field = Gf2m::f2();
    let q = 8;
    let t = Truncation::cube(q);
    let piece = PieceBasis::new(14, t);
    println!("dim O_14 for q = 8: {}", piece.dim());
    assert_eq!(piece.dim(), 36);

    let p = parse_poly(&field, "z^4 + xyz^2 + x^3z + y^3z", None).unwrap();
    let map = mult_map(&p, &PieceBasis::new(6, t), &PieceBasis::new(10, t)).unwrap();
    println!(
        "P: O_6 -> O_10 is a {}x{} matrix of rank {}",
        map.matrix.rows(),
        map.matrix.cols(),
        rank(&map.matrix)
    );

    let sq = p.pow_truncated(2, &t);
    println!("P^2 in O = {sq}");

    let left = PieceBasis::new(5, t);
    let right = PieceBasis::new(3 * q - 3 - 5, t);
    let pair = pairing_matrix(&field, &left, &right, socle_monomial(q));
    assert_eq!(rank(&pair), left.dim());
    println!("socle pairing O_5 x O_16 is perfect ({} x {})", pair.rows(), pair.cols());
    let _ = field.one();
}
