//! Homogeneous ideal membership in `k[x, y, z]/(g)`, Frobenius-power tests
//! and Hilbert–Kunz colengths.
//!
//! Everything is degree-local linear algebra. Generators that are pure
//! powers of a variable are absorbed into a monomial truncation, so the
//! only remaining spanning columns come from the other generators and the
//! relation.

use serde::Serialize;

use crate::exactla::{column_space_contains, rank, LinearSolver, Matrix};
use crate::graded::{mult_map, GradedError, Monomial, PieceBasis, Poly, Truncation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MembershipError {
    #[error("element `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("generator `{0}` is not a pure power of a variable")]
    NotPurePower(String),
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(u64),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

/// A homogeneous ideal `(generators) + (relation)`.
#[derive(Clone, Debug)]
pub struct GradedIdealSpec<F: LinearSolver> {
    field: F,
    generators: Vec<Poly<F>>,
    relation: Option<Poly<F>>,
}

/// If `p` is `c · v^e` for a single variable `v`, returns `(v, e)`.
fn pure_power<F: LinearSolver>(p: &Poly<F>) -> Option<(usize, u32)> {
    if p.len() != 1 {
        return None;
    }
    let (m, _) = p.terms().next()?;
    let exps = m.exponents();
    let nonzero: Vec<usize> = (0..3).filter(|&i| exps[i] > 0).collect();
    match nonzero.as_slice() {
        [v] => Some((*v, exps[*v])),
        _ => None,
    }
}

fn check_homogeneous<F: LinearSolver>(p: &Poly<F>) -> Result<Option<u32>, MembershipError> {
    if p.is_zero() {
        return Ok(None);
    }
    p.homogeneous_degree()
        .map(Some)
        .ok_or_else(|| MembershipError::NotHomogeneous(p.to_string()))
}

impl<F: LinearSolver> GradedIdealSpec<F> {
    pub fn new(field: &F, generators: Vec<Poly<F>>, relation: Option<Poly<F>>) -> Result<Self, MembershipError> {
        for g in generators.iter().chain(&relation) {
            check_homogeneous(g)?;
        }
        Ok(Self {
            field: field.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            relation: relation.filter(|g| !g.is_zero()),
        })
    }

    /// `(x^e1, y^e2, z^e3)` plus an optional relation.
    pub fn pure_powers(field: &F, exps: [u32; 3], relation: Option<Poly<F>>) -> Result<Self, MembershipError> {
        let gens = (0..3)
            .map(|i| {
                let mut e = [0; 3];
                e[i] = exps[i];
                Poly::mono(field, e[0], e[1], e[2])
            })
            .collect();
        Self::new(field, gens, relation)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn generators(&self) -> &[Poly<F>] {
        &self.generators
    }

    pub fn relation(&self) -> Option<&Poly<F>> {
        self.relation.as_ref()
    }

    /// Splits generators into a truncation (from pure powers) and the rest.
    fn split(&self) -> (Truncation, Vec<&Poly<F>>) {
        let mut caps: [Option<u32>; 3] = [None; 3];
        let mut rest = Vec::new();
        for g in &self.generators {
            match pure_power(g) {
                Some((v, e)) => caps[v] = Some(caps[v].map_or(e, |c| c.min(e))),
                None => rest.push(g),
            }
        }
        if let Some(r) = &self.relation {
            rest.push(r);
        }
        (Truncation::new(caps), rest)
    }

    /// Exponents `[e1, e2, e3]` when every generator is a pure power; a
    /// missing variable gets `None`.
    pub fn pure_power_exponents(&self) -> Result<[Option<u32>; 3], MembershipError> {
        for g in &self.generators {
            if pure_power(g).is_none() {
                return Err(MembershipError::NotPurePower(g.to_string()));
            }
        }
        Ok(self.split().0.caps())
    }
}

/// Columns spanning the degree-`n` part of the ideal generated by `gens`
/// inside the truncated ring.
fn spanning_matrix<F: LinearSolver>(field: &F, gens: &[&Poly<F>], target: &std::sync::Arc<PieceBasis>) -> Result<Matrix<F>, MembershipError> {
    let n = target.degree();
    let trunc = target.truncation();
    let mut columns: Vec<Vec<F::Elem>> = Vec::new();
    for g in gens {
        let d = g.homogeneous_degree().expect("checked at construction");
        if d > n {
            continue;
        }
        let source = PieceBasis::new(n - d, trunc);
        let map = mult_map(g, &source, target)?;
        for j in 0..map.matrix.cols() {
            columns.push(map.matrix.column(j));
        }
    }
    Ok(Matrix::from_columns(field, target.dim(), &columns))
}

/// Whether the homogeneous `h` lies in the ideal.
pub fn member<F: LinearSolver>(h: &Poly<F>, ideal: &GradedIdealSpec<F>) -> Result<bool, MembershipError> {
    let Some(n) = check_homogeneous(h)? else {
        return Ok(true);
    };
    let (trunc, rest) = ideal.split();
    let target = PieceBasis::new(n, trunc);
    let v = target.coords(h)?;
    if v.iter().all(|e| ideal.field.is_zero(e)) {
        return Ok(true);
    }
    let a = spanning_matrix(&ideal.field, &rest, &target)?;
    Ok(column_space_contains(&a, &v))
}

fn log2_exact(q: u64) -> Result<u32, MembershipError> {
    if q == 0 || !q.is_power_of_two() {
        return Err(MembershipError::NotPowerOfTwo(q));
    }
    Ok(q.trailing_zeros())
}

/// Whether `c · f^qf ∈ I^[qf] + (g)` for `I` generated by pure powers.
pub fn frobenius_test<F: LinearSolver>(
    c: &Poly<F>,
    f: &Poly<F>,
    ideal: &GradedIdealSpec<F>,
    g: &Poly<F>,
    qf: u64,
) -> Result<bool, MembershipError> {
    let e = log2_exact(qf)?;
    let caps = ideal.pure_power_exponents()?;
    let field = ideal.field();
    let bracket: Vec<Poly<F>> = (0..3)
        .filter_map(|i| {
            caps[i].map(|c| {
                let mut ex = [0; 3];
                ex[i] = c << e;
                Poly::mono(field, ex[0], ex[1], ex[2])
            })
        })
        .collect();
    let frob_ideal = GradedIdealSpec::new(field, bracket, Some(g.clone()))?;
    let (trunc, _) = frob_ideal.split();
    check_homogeneous(c)?;
    check_homogeneous(f)?;
    let h = c.mul_truncated(&f.pow_truncated(qf, &trunc), &trunc);
    member(&h, &frob_ideal)
}

/// `dim (O / gO)_n` for `O = k[x,y,z]/(x^q, y^q, z^q)`.
pub fn fiber_dim<F: LinearSolver>(g: &Poly<F>, q: u32, n: u32) -> Result<usize, MembershipError> {
    log2_exact(q as u64)?;
    let trunc = Truncation::cube(q);
    let target = PieceBasis::new(n, trunc);
    let Some(dg) = check_homogeneous(g)? else {
        return Ok(target.dim());
    };
    if n < dg || target.dim() == 0 {
        return Ok(target.dim());
    }
    let source = PieceBasis::new(n - dg, trunc);
    let map = mult_map(g, &source, &target)?;
    Ok(target.dim() - rank(&map.matrix))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HkColength {
    pub q: u32,
    /// `dims[n] = dim (O/gO)_n` for `n = 0..=3q−3`.
    pub dims: Vec<usize>,
    pub total: usize,
}

/// `dim k[x,y,z]/(x^q, y^q, z^q, g)`, with the per-degree breakdown.
pub fn hk_colength<F: LinearSolver>(g: &Poly<F>, q: u32) -> Result<HkColength, MembershipError> {
    log2_exact(q as u64)?;
    let dims = (0..=3 * q - 3)
        .map(|n| fiber_dim(g, q, n))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HkColength {
        q,
        total: dims.iter().sum(),
        dims,
    })
}

/// The socle monomial `(xyz)^(q−1)` of the truncated ring.
pub fn socle_monomial(q: u32) -> Monomial {
    Monomial::new(q - 1, q - 1, q - 1)
}
