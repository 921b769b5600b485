//! ε-products and the finite checks behind the non-inclusion argument.

use serde::Serialize;

use super::{CounterexampleContext, MonskyError};
use crate::exactla::{solve_many, LinearSolver, Matrix};
use crate::graded::{Monomial, PieceBasis, Poly};
use crate::membership::socle_monomial;

/// Outcome of a finite family of checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
}

impl LemmaReport {
    fn new(name: &str) -> Self {
        Self {
            name: name.to_string(),
            cases: 0,
            failures: 0,
        }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Exhaustive check: whenever distinct powers of two `a_i ≤ 2^max_a_exp`
/// and powers of two `b_i ≤ 2^max_b_exp` satisfy `Σ a_i b_i = 2^r − 1`
/// with `r ≤ max_r`, every `b_i` is one. Each case is one choice of a set
/// of `a`'s and of `b`'s; `cases` counts the hits on some `2^r − 1`.
pub fn power_sum_bruteforce(max_a_exp: u32, max_b_exp: u32, max_r: u32) -> LemmaReport {
    let mut report = LemmaReport::new("power_sum");
    let n = (max_a_exp + 1) as usize;
    let choices = (max_b_exp + 1) as u64;
    for subset in 1u64..(1 << n) {
        let idx: Vec<u32> = (0..n as u32).filter(|i| subset >> i & 1 == 1).collect();
        let combos = choices.pow(idx.len() as u32);
        for code in 0..combos {
            let mut c = code;
            let mut sum = 0u64;
            let mut all_one = true;
            for &i in &idx {
                let b_exp = (c % choices) as u32;
                c /= choices;
                all_one &= b_exp == 0;
                sum += 1u64 << (i + b_exp);
            }
            let target = sum + 1;
            if target.is_power_of_two() && target.trailing_zeros() <= max_r {
                report.record(all_one);
            }
        }
    }
    report
}

impl<F: LinearSolver> CounterexampleContext<F> {
    /// The monomial whose coefficient in `u ∈ O_{6Q−5}` gives `u·ε`.
    pub fn eps_partner(&self) -> Monomial {
        let (q, big_q) = (self.q(), self.big_q());
        Monomial::new(q - 2, big_q - 2, big_q - 1)
    }

    /// The scalar `c` with `u·ε = c·(xyz)^(q−1)`, computed both by
    /// coefficient extraction and by multiplying into the top degree.
    pub fn eps_product(&self, u: &Poly<F>) -> Result<F::Elem, MonskyError> {
        let n = 6 * self.big_q() - 5;
        if let Some(d) = u.homogeneous_degree() {
            if d != n {
                return Err(MonskyError::WrongDegree { expected: n, found: d });
            }
        } else if !u.is_zero() {
            return Err(MonskyError::WrongDegree {
                expected: n,
                found: u.terms().next().unwrap().0.degree(),
            });
        }
        let t = self.truncation();
        let by_coefficient = u.truncate(&t).coeff(&self.eps_partner());
        let product = u.mul_truncated(self.eps(), &t);
        let by_product = product.coeff(&socle_monomial(self.q()));
        if by_coefficient != by_product {
            return Err(MonskyError::RouteMismatch("ε-product".into()));
        }
        Ok(by_coefficient)
    }

    /// No monomial of `P^k`, `k < Q−1`, has z-exponent `Q−1`.
    pub fn z_exponent_check(&self) -> LemmaReport {
        let mut report = LemmaReport::new("z_exponent");
        let big_q = self.big_q();
        let mut pk = Poly::one(self.field());
        for _k in 0..big_q.saturating_sub(1) {
            report.record(pk.terms().all(|(m, _)| m.z != big_q - 1));
            pk = pk.mul(self.p());
        }
        report
    }

    /// `E_r · ε = c (xyz)^(q−1)` with `c = 1` iff `r ≥ Q+1` and
    /// `r ≡ Q+1 (mod 3)`.
    pub fn congruence_check(&self) -> Result<LemmaReport, MonskyError> {
        let mut report = LemmaReport::new("congruence");
        let big_q = self.big_q();
        let field = self.field();
        for (r, e) in self.basis_vectors().e.iter().enumerate() {
            let r = r as u32;
            let expect = r > big_q && r % 3 == (big_q + 1) % 3;
            report.record(self.eps_product(e)? == field.from_bool(expect));
        }
        Ok(report)
    }

    /// `ε` annihilates the spanning set of W̃.
    pub fn low_power_eps_check(&self) -> Result<LemmaReport, MonskyError> {
        let mut report = LemmaReport::new("low_power_eps");
        for u in self.w_tilde_span() {
            let c = self.eps_product(&u)?;
            report.record(self.field().is_zero(&c));
        }
        Ok(report)
    }

    /// `G_k · ε = (xyz)^(q−1)` iff `k ≡ 2Q−1 (mod 3)`, else 0.
    pub fn g_basis_eps_check(&self) -> Result<LemmaReport, MonskyError> {
        let mut report = LemmaReport::new("g_basis_eps");
        let big_q = self.big_q();
        for (k, gk) in self.basis_vectors().g.iter().enumerate() {
            let expect = (k as u32) % 3 == (2 * big_q - 1) % 3;
            report.record(self.eps_product(gk)? == self.field().from_bool(expect));
        }
        Ok(report)
    }

    /// `g·W ⊆ W′`, tested on every spanning vector of W.
    pub fn inclusion_check(&self) -> Result<LemmaReport, MonskyError> {
        let mut report = LemmaReport::new("inclusion");
        let t = self.truncation();
        let target = PieceBasis::new(6 * self.big_q() - 1, t);
        let span = self
            .w_prime_span()
            .iter()
            .map(|v| target.coords(v))
            .collect::<Result<Vec<_>, _>>()?;
        let a = Matrix::from_columns(self.field(), target.dim(), &span);
        let images = self
            .w_span()
            .iter()
            .map(|w| target.coords(&w.mul_truncated(self.g(), &t)))
            .collect::<Result<Vec<_>, _>>()?;
        for sol in solve_many(&a, &images) {
            report.record(sol.is_some());
        }
        Ok(report)
    }

    /// The D spanners collapse to exactly three distinct vectors, namely
    /// `x^(Q−2) y^(Q+1) R`, `x^(2Q−2) y R` and `x y^(2Q−2) R`.
    pub fn d_collapse_check(&self) -> LemmaReport {
        let mut report = LemmaReport::new("d-collapse");
        let expected = self.basis_vectors().d_spanners;
        let mut distinct: Vec<Poly<F>> = Vec::new();
        for v in self.d_span() {
            report.record(expected.contains(&v));
            if !distinct.contains(&v) {
                distinct.push(v);
            }
        }
        report.record(distinct.len() == 3);
        report
    }
}
