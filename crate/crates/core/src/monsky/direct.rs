//! The polynomial route: everything computed from the graded pieces of the
//! truncated ring, with no appeal to the special-matrix formulas.

use serde::Serialize;

use super::{CounterexampleContext, MonskyError};
use crate::exactla::{rank, solve, solve_many, LinearSolver, Matrix};
use crate::graded::{mult_map, PieceBasis, Poly};
use crate::membership::{frobenius_test, GradedIdealSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NonInclusion {
    /// Whether `ε ∈ g·O`, decided by solving in degree `6Q+2`.
    pub eps_in_g_o: bool,
    /// Whether `xy·f^Q ∈ (x^q, y^q, z^q, g)`, via the Frobenius test.
    pub frobenius_member: bool,
}

impl NonInclusion {
    pub fn routes_agree(&self) -> bool {
        self.eps_in_g_o == self.frobenius_member
    }

    /// Both routes report non-membership.
    pub fn certified(&self) -> bool {
        !self.eps_in_g_o && !self.frobenius_member
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KernelCokernel {
    /// `dim ker(g: O_{6Q−5} → O_{6Q−1})`.
    pub kernel: usize,
    /// `dim coker(g: O_{6Q−2} → O_{6Q+2})`.
    pub cokernel: usize,
}

impl<F: LinearSolver> CounterexampleContext<F> {
    fn g_map(&self, n: u32) -> Result<Matrix<F>, MonskyError> {
        let t = self.truncation();
        let map = mult_map(self.g(), &PieceBasis::new(n, t), &PieceBasis::new(n + 4, t))?;
        Ok(map.matrix)
    }

    /// The ideal `(x⁴, y⁴, z⁴)`.
    pub fn ideal_i(&self) -> GradedIdealSpec<F> {
        GradedIdealSpec::pure_powers(self.field(), [4, 4, 4], None).expect("monomials are homogeneous")
    }

    pub fn direct_noninclusion(&self) -> Result<NonInclusion, MonskyError> {
        let n = 6 * self.big_q() - 2;
        let a = self.g_map(n)?;
        let target = PieceBasis::new(n + 4, self.truncation());
        let b = target.coords(self.eps())?;
        let eps_in_g_o = solve(&a, &b).is_some();
        let xy = Poly::mono(self.field(), 1, 1, 0);
        let frobenius_member = frobenius_test(&xy, self.f(), &self.ideal_i(), self.g(), self.big_q() as u64)?;
        Ok(NonInclusion {
            eps_in_g_o,
            frobenius_member,
        })
    }

    /// Whether `y·f^Q ∈ (x^q, y^q, z^q, g)`; true on the generic fiber.
    pub fn generic_inclusion(&self) -> Result<bool, MonskyError> {
        let y = Poly::mono(self.field(), 0, 1, 0);
        Ok(frobenius_test(&y, self.f(), &self.ideal_i(), self.g(), self.big_q() as u64)?)
    }

    pub fn kernel_cokernel_dims(&self) -> Result<KernelCokernel, MonskyError> {
        let big_q = self.big_q();
        let k = self.g_map(6 * big_q - 5)?;
        let c = self.g_map(6 * big_q - 2)?;
        Ok(KernelCokernel {
            kernel: k.cols() - rank(&k),
            cokernel: c.rows() - rank(&c),
        })
    }

    /// The `(Q+2) × Q` matrix of `X → Y ⊕ O_{12Q−3}`, `u ↦ (u·g, u·ε)`, in
    /// the bases `G_k` and `H_0, …, H_{Q−1}, γ + (xyz)^(q−1), γ`.
    ///
    /// Each `g·G_k` is written in `W′` modulo the span of `g·W̃`, over the
    /// vectors `H_ℓ, γ`; the coordinates must be unique.
    pub fn map_matrix_direct(&self) -> Result<Matrix<F>, MonskyError> {
        self.require_algebraic()?;
        let field = self.field();
        let big_q = self.big_q() as usize;
        let t = self.truncation();
        let target = PieceBasis::new(6 * self.big_q() - 1, t);
        let bv = self.basis_vectors();

        let mut columns = Vec::new();
        for h in &bv.h {
            columns.push(target.coords(h)?);
        }
        columns.push(target.coords(&bv.gamma)?);
        let distinguished = columns.len();
        for w in self.w_tilde_span() {
            columns.push(target.coords(&w.mul_truncated(self.g(), &t))?);
        }
        let a = Matrix::from_columns(field, target.dim(), &columns);
        let quotient = Matrix::from_columns(field, target.dim(), &columns[distinguished..]);
        if rank(&a) != rank(&quotient) + distinguished {
            return Err(MonskyError::CoordinateExtraction(
                "H and γ are dependent modulo g·W̃".into(),
            ));
        }

        let images = bv
            .g
            .iter()
            .map(|gk| target.coords(&gk.mul_truncated(self.g(), &t)))
            .collect::<Result<Vec<_>, _>>()?;
        let solutions = solve_many(&a, &images);

        let mut out = Matrix::zeros(field, big_q + 2, big_q);
        for (k, sol) in solutions.into_iter().enumerate() {
            let x = sol.ok_or_else(|| {
                MonskyError::CoordinateExtraction(format!("g·G_{k} is not in span(H, γ) + g·W̃"))
            })?;
            for l in 0..big_q {
                out.set(l, k, x[l].clone());
            }
            let gamma = x[big_q].clone();
            let top = self.eps_product(&bv.g[k])?;
            // c·γ + t·top = t·(γ + top) + (c + t)·γ
            out.set(big_q, k, top.clone());
            out.set(big_q + 1, k, field.add(&gamma, &top));
        }
        Ok(out)
    }
}
