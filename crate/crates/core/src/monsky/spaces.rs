//! The polynomials R and S, the spanning sets of W, W̃, D and W′, and the
//! distinguished vectors E, F, G, H and γ.

use serde::Serialize;

use super::CounterexampleContext;
use crate::exactla::LinearSolver;
use crate::fields::Field;
use crate::graded::{Monomial, Poly};

/// `R = Σ x^a y^b z^c` over `c ∈ {1, 2}`, `a + b + c = q`, `a ≡ b (mod 3)`.
pub fn build_r<F: Field>(field: &F, q: u32) -> Poly<F> {
    let mut terms = Vec::new();
    for c in [1u32, 2] {
        for a in 0..=q - c {
            let b = q - c - a;
            if (a as i64 - b as i64).rem_euclid(3) == 0 {
                terms.push((Monomial::new(a, b, c), field.one()));
            }
        }
    }
    Poly::from_terms(field, terms)
}

/// `S = Σ x^a y^b z^(4q₀)` over `q₀ | q/8`, `a + b + 4q₀ = q`,
/// `a ≡ b (mod 12q₀)`. Requires `q ≥ 8`.
pub fn build_s<F: Field>(field: &F, q: u32) -> Poly<F> {
    assert!(q >= 8, "S needs q ≥ 8");
    let mut terms = Vec::new();
    let mut q0 = 1;
    while q0 <= q / 8 {
        let rest = q - 4 * q0;
        for a in 0..=rest {
            let b = rest - a;
            if (a as i64 - b as i64).rem_euclid(12 * q0 as i64) == 0 {
                terms.push((Monomial::new(a, b, 4 * q0), field.one()));
            }
        }
        q0 *= 2;
    }
    Poly::from_terms(field, terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    /// `P^Q = R + S` in the truncated ring.
    pub p_power: bool,
    /// `x³R = y³R` in the truncated ring.
    pub x3r_y3r: bool,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.p_power && self.x3r_y3r
    }
}

impl<F: LinearSolver> CounterexampleContext<F> {
    pub fn r(&self) -> Poly<F> {
        build_r(self.field(), self.q())
    }

    pub fn s(&self) -> Poly<F> {
        build_s(self.field(), self.q())
    }

    /// Tests both identities separately in `O = k[x,y,z]/(x^q, y^q, z^q)`.
    pub fn check_identities(&self) -> IdentityReport {
        let t = self.truncation();
        let r = self.r().truncate(&t);
        let lhs = self.p().pow_truncated(self.big_q() as u64, &t);
        let rhs = r.add(&self.s()).truncate(&t);
        let x3r = r.mul_monomial(&Monomial::new(3, 0, 0)).truncate(&t);
        let y3r = r.mul_monomial(&Monomial::new(0, 3, 0)).truncate(&t);
        IdentityReport {
            p_power: lhs == rhs,
            x3r_y3r: x3r == y3r,
        }
    }

    /// `x^r y^s P^k` with `r + s + 4k = n` and `k ≤ k_max`, reduced, zeros
    /// dropped.
    pub fn monomial_p_multiples(&self, n: u32, k_max: u32) -> Vec<Poly<F>> {
        let t = self.truncation();
        let powers = self.p_powers(k_max);
        let mut out = Vec::new();
        for (k, pk) in powers.iter().enumerate() {
            let k = k as u32;
            if 4 * k > n {
                break;
            }
            let rest = n - 4 * k;
            for r in 0..=rest {
                let v = pk.mul_monomial(&Monomial::new(r, rest - r, 0)).truncate(&t);
                if !v.is_zero() {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Spanning set of W ⊆ O_{6Q−5}.
    pub fn w_span(&self) -> Vec<Poly<F>> {
        self.monomial_p_multiples(6 * self.big_q() - 5, self.big_q() - 1)
    }

    /// Spanning set of W̃ ⊆ W (powers of P below Q−1).
    pub fn w_tilde_span(&self) -> Vec<Poly<F>> {
        if self.big_q() < 2 {
            return Vec::new();
        }
        self.monomial_p_multiples(6 * self.big_q() - 5, self.big_q() - 2)
    }

    /// The reduced vectors `x^r y^s R`, `r + s = 2Q − 1`, spanning D.
    pub fn d_span(&self) -> Vec<Poly<F>> {
        let t = self.truncation();
        let r_poly = self.r();
        let n = 2 * self.big_q() - 1;
        (0..=n)
            .map(|r| r_poly.mul_monomial(&Monomial::new(r, n - r, 0)).truncate(&t))
            .collect()
    }

    /// Spanning set of W′ ⊆ O_{6Q−1}: D together with the `x^r y^s P^k`.
    pub fn w_prime_span(&self) -> Vec<Poly<F>> {
        let mut out = self.d_span();
        out.extend(self.monomial_p_multiples(6 * self.big_q() - 1, self.big_q() - 1));
        out
    }

    pub fn basis_vectors(&self) -> BasisVectors<F> {
        let big_q = self.big_q();
        let t = self.truncation();
        let n = 2 * big_q - 1;
        let pq1 = self.p().pow_truncated((big_q - 1) as u64, &t);
        let e: Vec<Poly<F>> = (0..=n)
            .map(|r| pq1.mul_monomial(&Monomial::new(r, n - r, 0)).truncate(&t))
            .collect();
        let f: Vec<Poly<F>> = (0..=n)
            .map(|r| Poly::mono(self.field(), 2 * big_q + r, 2 * big_q + n - r, 0).truncate(&t))
            .collect();
        let pair = |v: &[Poly<F>], i: u32| v[(2 * i) as usize].add(&v[(n - 2 * i) as usize]);
        let g = (0..big_q).map(|i| pair(&e, i)).collect();
        let h = (0..big_q).map(|i| pair(&f, i)).collect();
        let r_poly = self.r();
        let shift = |a: u32, b: u32| r_poly.mul_monomial(&Monomial::new(a, b, 0)).truncate(&t);
        let gamma = shift(2 * big_q - 2, 1).add(&shift(1, 2 * big_q - 2));
        let d_spanners = vec![
            shift(big_q - 2, big_q + 1),
            shift(2 * big_q - 2, 1),
            shift(1, 2 * big_q - 2),
        ];
        BasisVectors {
            e,
            f,
            g,
            h,
            gamma,
            d_spanners,
        }
    }
}

/// The distinguished vectors of the non-inclusion argument, all reduced in
/// the truncated ring. `e`, `g` live in degree `6Q−5`; the rest in `6Q−1`.
#[derive(Clone, Debug)]
pub struct BasisVectors<F: Field> {
    /// `E_r = x^r y^s P^(Q−1)`, `r + s = 2Q−1`.
    pub e: Vec<Poly<F>>,
    /// `F_r = x^(2Q+r) y^(2Q+s)`.
    pub f: Vec<Poly<F>>,
    /// `G_i = E_{2i} + E_{2Q−1−2i}`.
    pub g: Vec<Poly<F>>,
    /// `H_i = F_{2i} + F_{2Q−1−2i}`.
    pub h: Vec<Poly<F>>,
    /// `γ = (x^(2Q−2) y + x y^(2Q−2)) R`.
    pub gamma: Poly<F>,
    /// `x^(Q−2) y^(Q+1) R`, `x^(2Q−2) y R`, `x y^(2Q−2) R`.
    pub d_spanners: Vec<Poly<F>>,
}
