// Exact rank, kernel and solving over F₂ᵐ, and certified rank over F₂(t).

use tightloc::exactla::{certified_rank, kernel_basis, rank_nullity, solve, Matrix};
use tightloc::fields::{Field, Gf2m, RatFunc, RatFuncField};

fn main() {
    let f = Gf2m::with_degree(3).unwrap();
    let u = f.generator();
    let rows = vec![
        vec![f.one(), u, f.square(&u)],
        vec![u, f.square(&u), f.pow(&u, 3)],
        vec![f.one(), f.zero(), f.one()],
    ];
    let a = Matrix::from_rows(&f, rows);
    let (r, n) = rank_nullity(&a);
    println!("rank {r}, nullity {n}");
    for v in kernel_basis(&a) {
        assert!(a.mul_vec(&v).iter().all(|x| f.is_zero(x)));
        println!("kernel vector {:?}", v.iter().map(|x| f.render(x)).collect::<Vec<_>>());
    }
    let b = a.mul_vec(&[f.one(), f.one(), u]);
    let x = solve(&a, &b).expect("b is in the column space");
    assert_eq!(a.mul_vec(&x), b);

    let k = RatFuncField;
    let t = RatFunc::t();
    let m = Matrix::from_rows(&k, vec![vec![k.one(), t.clone()], vec![t.clone(), k.square(&t)]]);
    let (r, route) = certified_rank(&m);
    println!("rank over F2(t): {r} via {route:?}");
    assert_eq!(r, 1);
}
