//! The top local cohomology `H²_m(R)` of `R = k[x,y,z]/(g_α)`, modelled by
//! Čech classes `h / (x^a y^b)`.
//!
//! Since `x, y` is a system of parameters of the Cohen–Macaulay ring `R`, a
//! class `h/(x^a y^b)` vanishes iff `h ∈ (x^a, y^b, g)`, and the maps
//! `R/(x^a, y^a) → R/(x^(a+1), y^(a+1))`, `h ↦ xy·h` are injective. The
//! degree-`k` piece is therefore the stable value of
//! `(k[x,y,z]/(x^a, y^a, g))_(k+2a)` as `a` grows.

use std::sync::Arc;

use serde::Serialize;

use crate::exactla::{rank, solve, EchelonBasis, LinearSolver, Matrix};
use crate::fields::Field;
use crate::graded::{mult_map, GradedError, Monomial, PieceBasis, Poly, Truncation};
use crate::membership::{member, GradedIdealSpec, MembershipError};
use crate::monsky::quartic_g;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("denominator exponents must be at least 1")]
    BadDenominator,
    #[error("numerator `{0}` is not homogeneous")]
    NotHomogeneous(String),
    #[error("degree {0} is outside the supported range")]
    DegreeOutOfRange(i64),
    #[error("piece of degree {k} did not stabilize: dimension {at_a} at level {a}, {at_next} at level {}", a + 1)]
    Stabilization { k: i64, a: u32, at_a: usize, at_next: usize },
    #[error("classes are dependent where a basis was expected")]
    Dependent,
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Membership(#[from] MembershipError),
}

/// The class of `numerator / (x^a y^b)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CechClass<F: Field> {
    numerator: Poly<F>,
    numerator_degree: u32,
    a: u32,
    b: u32,
}

impl<F: Field> CechClass<F> {
    /// `numerator` must be homogeneous of degree `numerator_degree` or zero.
    pub fn new(numerator: Poly<F>, numerator_degree: u32, a: u32, b: u32) -> Result<Self, CohomologyError> {
        if a == 0 || b == 0 {
            return Err(CohomologyError::BadDenominator);
        }
        if !numerator.is_zero() && numerator.homogeneous_degree() != Some(numerator_degree) {
            return Err(CohomologyError::NotHomogeneous(numerator.to_string()));
        }
        Ok(Self {
            numerator,
            numerator_degree,
            a,
            b,
        })
    }

    /// Infers the numerator degree; the numerator must be nonzero.
    pub fn from_numerator(numerator: Poly<F>, a: u32, b: u32) -> Result<Self, CohomologyError> {
        let d = numerator
            .homogeneous_degree()
            .ok_or_else(|| CohomologyError::NotHomogeneous(numerator.to_string()))?;
        Self::new(numerator, d, a, b)
    }

    pub fn numerator(&self) -> &Poly<F> {
        &self.numerator
    }

    pub fn denominators(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    pub fn degree(&self) -> i64 {
        self.numerator_degree as i64 - self.a as i64 - self.b as i64
    }

    /// The same class over the larger denominator `x^a y^b`.
    pub fn amplify(&self, a: u32, b: u32) -> Self {
        assert!(a >= self.a && b >= self.b, "can only enlarge denominators");
        let m = Monomial::new(a - self.a, b - self.b, 0);
        Self {
            numerator: self.numerator.mul_monomial(&m),
            numerator_degree: self.numerator_degree + m.degree(),
            a,
            b,
        }
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            ..self.clone()
        }
    }

    /// Difference (equivalently sum) of two classes of the same degree,
    /// over a common denominator.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "classes of different degrees");
        let (a, b) = (self.a.max(other.a), self.b.max(other.b));
        let (l, r) = (self.amplify(a, b), other.amplify(a, b));
        Self {
            numerator: l.numerator.add(&r.numerator),
            numerator_degree: l.numerator_degree,
            a,
            b,
        }
    }

    /// Multiplication by a monomial of `R`.
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Self {
            numerator: self.numerator.mul_monomial(m),
            numerator_degree: self.numerator_degree + m.degree(),
            ..self.clone()
        }
    }
}

/// `h/(x^a y^b) ↦ h²/(x^(2a) y^(2b))`, squaring coefficients too.
pub fn frobenius_class<F: Field>(c: &CechClass<F>) -> CechClass<F> {
    CechClass {
        numerator: c.numerator.frobenius_power(1),
        numerator_degree: 2 * c.numerator_degree,
        a: 2 * c.a,
        b: 2 * c.b,
    }
}

/// A degree piece of `k[x,y,z]/(x^a, y^b, g)`, with the image of
/// multiplication by `g` held as columns.
struct QuotientPiece<F: LinearSolver> {
    basis: Arc<PieceBasis>,
    image: Matrix<F>,
    image_rank: usize,
}

impl<F: LinearSolver> QuotientPiece<F> {
    fn new(g: &Poly<F>, n: u32, a: u32, b: u32) -> Result<Self, CohomologyError> {
        let field = g.field();
        let trunc = Truncation::new([Some(a), Some(b), None]);
        let basis = PieceBasis::new(n, trunc);
        let image = if n >= 4 {
            mult_map(g, &PieceBasis::new(n - 4, trunc), &basis)?.matrix
        } else {
            Matrix::zeros(field, basis.dim(), 0)
        };
        let image_rank = rank(&image);
        Ok(Self {
            basis,
            image,
            image_rank,
        })
    }

    fn dim(&self) -> usize {
        self.basis.dim() - self.image_rank
    }

    fn coords(&self, c: &CechClass<F>) -> Result<Vec<F::Elem>, CohomologyError> {
        Ok(self.basis.coords(&c.numerator)?)
    }

    /// Rank of the given vectors modulo the image.
    fn rank_mod_image(&self, vectors: &[Vec<F::Elem>]) -> usize {
        rank(&self.image.hstack_columns(vectors)) - self.image_rank
    }
}

/// Dimension oracle: `dim (k[x,y,z]/(g))_n` for a quartic `g`, by the
/// Hilbert series `(1 − T⁴)/(1 − T)³`.
pub fn quartic_ring_dim(n: i64) -> usize {
    let c = |m: i64| if m < 0 { 0 } else { ((m + 1) * (m + 2) / 2) as usize };
    c(n) - c(n - 4)
}

/// `H²_m(R)` for `R = k[x,y,z]/(g_α)`.
#[derive(Clone, Debug)]
pub struct H2Model<F: LinearSolver> {
    field: F,
    alpha: F::Elem,
    g: Poly<F>,
}

/// Lowest supported degree for bases and Frobenius checks.
pub const MIN_DEGREE: i64 = -12;

impl<F: LinearSolver> H2Model<F> {
    pub fn new(field: &F, alpha: F::Elem) -> Self {
        Self {
            field: field.clone(),
            g: quartic_g(field, &alpha),
            alpha,
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn alpha(&self) -> &F::Elem {
        &self.alpha
    }

    pub fn g(&self) -> &Poly<F> {
        &self.g
    }

    /// Whether the class vanishes, i.e. its numerator lies in
    /// `(x^a, y^b, g)`.
    pub fn class_is_zero(&self, c: &CechClass<F>) -> Result<bool, CohomologyError> {
        let (a, b) = c.denominators();
        let ideal = GradedIdealSpec::new(
            &self.field,
            vec![Poly::mono(&self.field, a, 0, 0), Poly::mono(&self.field, 0, b, 0)],
            Some(self.g.clone()),
        )?;
        Ok(member(&c.numerator, &ideal)?)
    }

    /// Stabilization level used for degree `k`.
    pub fn level(k: i64) -> u32 {
        k.unsigned_abs() as u32 + 3
    }

    fn piece(&self, k: i64, a: u32) -> Result<QuotientPiece<F>, CohomologyError> {
        let n = k + 2 * a as i64;
        if n < 0 {
            return Err(CohomologyError::DegreeOutOfRange(k));
        }
        QuotientPiece::new(&self.g, n as u32, a, a)
    }

    /// A basis of the degree-`k` piece, as classes over `(xy)^a` with
    /// `a = |k| + 3`, after checking that the dimension agrees at `a + 1`.
    pub fn piece_basis_h2(&self, k: i64) -> Result<Vec<CechClass<F>>, CohomologyError> {
        if !(MIN_DEGREE..=1).contains(&k) {
            return Err(CohomologyError::DegreeOutOfRange(k));
        }
        let a = Self::level(k);
        let piece = self.piece(k, a)?;
        let next = self.piece(k, a + 1)?;
        if piece.dim() != next.dim() {
            return Err(CohomologyError::Stabilization {
                k,
                a,
                at_a: piece.dim(),
                at_next: next.dim(),
            });
        }
        let mut echelon = EchelonBasis::new(&self.field, piece.basis.dim());
        for j in 0..piece.image.cols() {
            echelon.insert(&piece.image.column(j));
        }
        let mut out = Vec::new();
        for (i, m) in piece.basis.monomials().iter().enumerate() {
            let mut unit = vec![self.field.zero(); piece.basis.dim()];
            unit[i] = self.field.one();
            if echelon.insert(&unit) {
                let num = Poly::monomial(&self.field, *m, self.field.one());
                out.push(CechClass::new(num, piece.basis.degree(), a, a)?);
            }
        }
        Ok(out)
    }

    /// Rank of the Frobenius images of the degree-`k` basis, computed in
    /// the degree-`2k` piece at level `2a`.
    ///
    /// No semilinear twist is needed: over a perfect field the Frobenius is
    /// injective on the span iff the images of a basis are independent.
    pub fn frobenius_rank(&self, k: i64) -> Result<DegreeRank, CohomologyError> {
        let basis = self.piece_basis_h2(k)?;
        let a = Self::level(k);
        let target = self.piece(2 * k, 2 * a)?;
        let images = basis
            .iter()
            .map(|c| target.coords(&frobenius_class(c)))
            .collect::<Result<Vec<_>, _>>()?;
        let r = target.rank_mod_image(&images);
        Ok(DegreeRank {
            k,
            dim: basis.len(),
            rank: r,
            injective: r == basis.len(),
        })
    }

    pub fn frobenius_injectivity_check(&self, k_min: i64) -> Result<InjectivityReport, CohomologyError> {
        if !(MIN_DEGREE / 2..=0).contains(&k_min) {
            return Err(CohomologyError::DegreeOutOfRange(k_min));
        }
        let degrees = (k_min..=0)
            .map(|k| self.frobenius_rank(k))
            .collect::<Result<Vec<_>, _>>()?;
        let zero = degrees.last().expect("degree 0 is included");
        let degree_zero_bijective = zero.injective && zero.dim == self.piece(0, Self::level(0))?.dim();
        Ok(InjectivityReport {
            degree_zero_bijective,
            degrees,
        })
    }

    /// `z²/(xy)`, `z³/(x²y)`, `z³/(xy²)`.
    pub fn degree_zero_classes(&self) -> [CechClass<F>; 3] {
        let f = &self.field;
        [
            CechClass::new(Poly::mono(f, 0, 0, 2), 2, 1, 1).unwrap(),
            CechClass::new(Poly::mono(f, 0, 0, 3), 3, 2, 1).unwrap(),
            CechClass::new(Poly::mono(f, 0, 0, 3), 3, 1, 2).unwrap(),
        ]
    }

    /// Matrix of the Frobenius on the degree-0 piece in the basis
    /// [`Self::degree_zero_classes`]; column `i` holds the coordinates of
    /// the image of class `i`.
    pub fn degree_zero_action(&self) -> Result<Matrix<F>, CohomologyError> {
        let level = 4;
        let piece = QuotientPiece::new(&self.g, 2 * level, level, level)?;
        let classes = self.degree_zero_classes();
        let mut columns = classes
            .iter()
            .map(|c| piece.coords(&c.amplify(level, level)))
            .collect::<Result<Vec<_>, _>>()?;
        if piece.rank_mod_image(&columns) != 3 {
            return Err(CohomologyError::Dependent);
        }
        columns.extend((0..piece.image.cols()).map(|j| piece.image.column(j)));
        let a = Matrix::from_columns(&self.field, piece.basis.dim(), &columns);
        let mut out = Matrix::zeros(&self.field, 3, 3);
        for (i, c) in classes.iter().enumerate() {
            let image = frobenius_class(c).amplify(level, level);
            let x = solve(&a, &piece.coords(&image)?).ok_or(CohomologyError::Dependent)?;
            for j in 0..3 {
                out.set(j, i, x[j].clone());
            }
        }
        Ok(out)
    }

    /// The multiplication map `c ↦ (xc, yc, zc)` on the degree-0 piece.
    pub fn socle_check(&self) -> Result<SocleReport, CohomologyError> {
        let basis = self.piece_basis_h2(0)?;
        let a = Self::level(0);
        let target = self.piece(1, a)?;
        let vars = [Monomial::new(1, 0, 0), Monomial::new(0, 1, 0), Monomial::new(0, 0, 1)];
        let mut per_class = Vec::new();
        let mut stacked: Vec<Vec<F::Elem>> = vec![Vec::new(); basis.len()];
        for (i, c) in basis.iter().enumerate() {
            let mut some_nonzero = false;
            for v in &vars {
                let coords = target.coords(&c.mul_monomial(v))?;
                some_nonzero |= target.rank_mod_image(std::slice::from_ref(&coords)) == 1;
                stacked[i].extend(coords);
            }
            per_class.push(some_nonzero);
        }
        let block = &target.image;
        let (rows, cols) = (block.rows(), block.cols());
        let mut big = Matrix::zeros(&self.field, 3 * rows, 3 * cols);
        for t in 0..3 {
            for r in 0..rows {
                for c in 0..cols {
                    big.set(t * rows + r, t * cols + c, block.get(r, c).clone());
                }
            }
        }
        let joint = rank(&big.hstack_columns(&stacked)) - rank(&big);
        Ok(SocleReport {
            dim: basis.len(),
            joint_rank: joint,
            each_class_detected: per_class,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DegreeRank {
    pub k: i64,
    pub dim: usize,
    pub rank: usize,
    pub injective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityReport {
    pub degrees: Vec<DegreeRank>,
    pub degree_zero_bijective: bool,
}

impl InjectivityReport {
    pub fn passed(&self) -> bool {
        self.degree_zero_bijective && self.degrees.iter().all(|d| d.injective)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SocleReport {
    pub dim: usize,
    /// Rank of `c ↦ (xc, yc, zc)` on the degree-0 piece.
    pub joint_rank: usize,
    /// For each basis class, whether one of `xc, yc, zc` is nonzero.
    pub each_class_detected: Vec<bool>,
}

impl SocleReport {
    /// No nonzero degree-0 class is killed by all of `x, y, z`.
    pub fn passed(&self) -> bool {
        self.joint_rank == self.dim && self.each_class_detected.iter().all(|&b| b)
    }
}
