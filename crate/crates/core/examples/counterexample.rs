// xy·f^Q escapes (x⁴, y⁴, z⁴)^[Q] + (g) at an algebraic α of degree 3,
// while y·f^Q lies in it on the generic fiber.

use tightloc::fields::Field;
use tightloc::monsky::CounterexampleContext;

fn main() {
    let d = 3;
    let ctx = CounterexampleContext::sampled(d).unwrap();
    println!(
        "alpha = {} in {}, Q = {}, q = {}",
        ctx.field().render(ctx.alpha()),
        ctx.field().descriptor(),
        ctx.big_q(),
        ctx.q()
    );
    let n = ctx.direct_noninclusion().unwrap();
    println!("eps in gO: {}, xy f^Q in bracket: {}", n.eps_in_g_o, n.frobenius_member);
    assert!(n.certified());

    let kc = ctx.kernel_cokernel_dims().unwrap();
    println!("kernel {}, cokernel {}", kc.kernel, kc.cokernel);

    let generic = CounterexampleContext::generic(d).unwrap();
    let inc = generic.generic_inclusion().unwrap();
    println!("generic fiber: y f^Q in bracket: {inc}");
    assert!(inc);
}
