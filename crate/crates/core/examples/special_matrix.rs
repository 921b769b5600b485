// The matrix M[Q, α] for α of Artin–Schreier degree d, with its rank checks.

use tightloc::fields::Field;
use tightloc::monsky::{special_matrix_checks, CounterexampleContext};

fn main() {
    for d in 2..=7 {
        let ctx = CounterexampleContext::sampled(d).unwrap();
        let sm = ctx.build_m().unwrap();
        let rep = special_matrix_checks(&sm);
        println!(
            "d = {d}, Q = {:3}: special {}, nullity {}, stacked rank {}",
            rep.big_q, rep.is_special, rep.nullity, rep.stacked_rank
        );
        assert!(rep.passed());
        if d == 2 {
            for i in 0..sm.m.rows() {
                let row: Vec<_> = sm.m.row(i).iter().map(|a| ctx.field().render(a)).collect();
                println!("  {}", row.join(" "));
            }
        }
    }
}
