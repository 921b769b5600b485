use std::fmt;

use super::{Field, FieldDescriptor, Gf2Poly, Gf2m};

/// An element of F₂(t) in lowest terms. The denominator is nonzero and
/// coprime to the numerator; over F₂ every nonzero polynomial is monic, so
/// the representation is canonical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Gf2Poly,
    den: Gf2Poly,
}

impl RatFunc {
    /// Builds `num / den` in lowest terms. Returns `None` for a zero
    /// denominator.
    pub fn new(num: Gf2Poly, den: Gf2Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let g = Gf2Poly::gcd(&num, &den);
        if g.is_one() {
            return Some(Self { num, den });
        }
        Some(Self {
            num: num.div_rem(&g).0,
            den: den.div_rem(&g).0,
        })
    }

    pub fn from_poly(num: Gf2Poly) -> Self {
        Self {
            num,
            den: Gf2Poly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Gf2Poly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Gf2Poly::one())
    }

    /// The transcendental `t`.
    pub fn t() -> Self {
        Self::from_poly(Gf2Poly::monomial(1))
    }

    pub fn numerator(&self) -> &Gf2Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Gf2Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value at a point of a finite field, or `None` if the denominator
    /// vanishes there.
    pub fn evaluate(&self, field: &Gf2m, point: u32) -> Option<u32> {
        let den = eval_poly(&self.den, field, point);
        let inv = field.inv(&den)?;
        Some(field.mul(&eval_poly(&self.num, field, point), &inv))
    }
}

fn eval_poly(p: &Gf2Poly, field: &Gf2m, point: u32) -> u32 {
    let Some(d) = p.degree() else {
        return 0;
    };
    let mut acc = 0u32;
    for i in (0..=d).rev() {
        acc = field.mul(&acc, &point) ^ p.coeff(i) as u32;
    }
    acc
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.render("t");
        if self.den.is_one() {
            f.write_str(&num)
        } else {
            write!(f, "({num})/({})", self.den.render("t"))
        }
    }
}

/// The rational function field F₂(t).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RatFuncField;

impl Field for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc::zero()
    }

    fn one(&self) -> RatFunc {
        RatFunc::one()
    }

    fn is_zero(&self, a: &RatFunc) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_zero() {
            return b.clone();
        }
        if b.is_zero() {
            return a.clone();
        }
        if a.den == b.den {
            return RatFunc::new(a.num.add(&b.num), a.den.clone()).unwrap();
        }
        let num = a.num.mul(&b.den).add(&b.num.mul(&a.den));
        RatFunc::new(num, a.den.mul(&b.den)).unwrap()
    }

    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        if a.is_zero() || b.is_zero() {
            return RatFunc::zero();
        }
        if a.den.is_one() && b.den.is_one() {
            return RatFunc::from_poly(a.num.mul(&b.num));
        }
        // Cross-cancel first to keep intermediate degrees small.
        let g1 = Gf2Poly::gcd(&a.num, &b.den);
        let g2 = Gf2Poly::gcd(&b.num, &a.den);
        let num = a.num.div_rem(&g1).0.mul(&b.num.div_rem(&g2).0);
        let den = a.den.div_rem(&g2).0.mul(&b.den.div_rem(&g1).0);
        RatFunc { num, den }
    }

    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.is_zero() {
            None
        } else {
            Some(RatFunc {
                num: a.den.clone(),
                den: a.num.clone(),
            })
        }
    }

    fn square(&self, a: &RatFunc) -> RatFunc {
        RatFunc {
            num: a.num.square(),
            den: a.den.square(),
        }
    }

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::RatFunc
    }

    fn render(&self, a: &RatFunc) -> String {
        a.to_string()
    }

    fn parse_atom(&self, s: &str) -> Option<RatFunc> {
        match s {
            "0" => return Some(RatFunc::zero()),
            "1" => return Some(RatFunc::one()),
            _ => {}
        }
        let rest = s.strip_prefix('t')?;
        let e = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.parse::<usize>().ok()?
        };
        Some(RatFunc::from_poly(Gf2Poly::monomial(e)))
    }
}
