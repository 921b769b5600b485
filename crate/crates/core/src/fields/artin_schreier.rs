use super::{Field, FieldError, Gf2Poly, Gf2m};

/// The lexicographically smallest monic irreducible polynomial of degree `d`
/// over F₂, reading coefficients from the constant term upward as a binary
/// number.
pub fn deterministic_irreducible(d: u32) -> Gf2Poly {
    assert!((1..64).contains(&d), "degree must lie in 1..64");
    let top = 1u64 << d;
    (top..top << 1)
        .map(Gf2Poly::from_bits)
        .find(Gf2Poly::is_irreducible)
        .expect("irreducible polynomials exist in every degree")
}

/// Smallest `k ≥ 1` with `α + α² + α⁴ + … + α^(2^(k−1)) = 0`.
///
/// This is the degree over F₂ of a root β of β² + β = α, computed without
/// ever constructing β. The loop stops by `2m` because β lies in F₂^(2m).
pub fn artin_schreier_degree(field: &Gf2m, alpha: &u32) -> u32 {
    let mut sum = 0u32;
    let mut frob = *alpha;
    for k in 1..=2 * field.degree() {
        sum = field.add(&sum, &frob);
        if sum == 0 {
            return k;
        }
        frob = field.square(&frob);
    }
    unreachable!("partial Frobenius sums vanish by k = 2m")
}

/// Returns `(F₂^d, α)` with `α = β² + β` for β the class of `u` modulo the
/// deterministic irreducible of degree `d`, so that α has Artin–Schreier
/// degree exactly `d`.
pub fn sample_alpha(d: u32) -> Result<(Gf2m, u32), FieldError> {
    if d < 2 {
        return Err(FieldError::DegreeTooSmall(d));
    }
    let field = Gf2m::with_degree(d)?;
    let beta = field.generator();
    let alpha = field.add(&field.square(&beta), &beta);
    let found = artin_schreier_degree(&field, &alpha);
    assert_eq!(found, d, "sampled α has Artin–Schreier degree {found}, expected {d}");
    Ok((field, alpha))
}
