use std::fmt;
use std::str::FromStr;

use super::gf2m::{mul_raw, MAX_DEGREE};
use super::{deterministic_irreducible, Field, FieldError, Gf2Poly, Gf2m, RatFunc, RatFuncField};

/// Names one of the supported coefficient fields.
///
/// The textual form is `f2`, `f2m:<m>:<modulus-hex>` (bit `i` of the modulus
/// is the coefficient of `u^i`) or `ratfunc`. `f2m:<m>` is accepted as a
/// shorthand for the deterministic modulus of degree `m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    F2,
    F2m { m: u32, modulus: Gf2Poly },
    RatFunc,
}

impl FieldDescriptor {
    pub fn f2m(m: u32) -> Result<Self, FieldError> {
        if m == 0 || m > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(m));
        }
        Ok(Self::F2m {
            m,
            modulus: deterministic_irreducible(m),
        })
    }

    /// Checks the modulus invariant: irreducible of the stated degree.
    pub fn validate(&self) -> Result<(), FieldError> {
        if let Self::F2m { m, modulus } = self {
            if *m == 0 || *m > MAX_DEGREE {
                return Err(FieldError::UnsupportedDegree(*m));
            }
            if modulus.degree() != Some(*m as usize) || !modulus.is_irreducible() {
                return Err(FieldError::ReducibleModulus(modulus.to_string(), *m));
            }
        }
        Ok(())
    }

    /// The finite field this descriptor names, if it is finite.
    pub fn finite_field(&self) -> Option<Result<Gf2m, FieldError>> {
        match self {
            Self::F2 => Some(Ok(Gf2m::f2())),
            Self::F2m { modulus, .. } => Some(Gf2m::new(modulus)),
            Self::RatFunc => None,
        }
    }

    fn degree_and_modulus(&self) -> Option<(u32, u64)> {
        match self {
            Self::F2 => Some((1, 0b10)),
            Self::F2m { m, modulus } => Some((*m, modulus.to_bits()?)),
            Self::RatFunc => None,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::F2 => f.write_str("f2"),
            Self::F2m { m, modulus } => write!(f, "f2m:{m}:{}", modulus.to_hex()),
            Self::RatFunc => f.write_str("ratfunc"),
        }
    }
}

impl FromStr for FieldDescriptor {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FieldError::BadSpec(s.to_string());
        match s.trim() {
            "f2" => return Ok(Self::F2),
            "ratfunc" => return Ok(Self::RatFunc),
            _ => {}
        }
        let mut parts = s.trim().split(':');
        if parts.next() != Some("f2m") {
            return Err(bad());
        }
        let m: u32 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let desc = match parts.next() {
            None => Self::f2m(m)?,
            Some(hex) => Self::F2m {
                m,
                modulus: Gf2Poly::from_hex(hex).ok_or_else(bad)?,
            },
        };
        if parts.next().is_some() {
            return Err(bad());
        }
        desc.validate()?;
        Ok(desc)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum Repr {
    Bits(u32),
    Rat(RatFunc),
}

/// A field element tagged with the field it lives in. Arithmetic between
/// values of different fields is an error rather than a panic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldValue {
    descriptor: FieldDescriptor,
    repr: Repr,
}

impl FieldValue {
    pub fn zero(descriptor: &FieldDescriptor) -> Self {
        Self::from_bits_or_rat(descriptor, 0)
    }

    pub fn one(descriptor: &FieldDescriptor) -> Self {
        Self::from_bits_or_rat(descriptor, 1)
    }

    fn from_bits_or_rat(descriptor: &FieldDescriptor, v: u32) -> Self {
        let repr = match descriptor {
            FieldDescriptor::RatFunc => Repr::Rat(if v == 0 { RatFunc::zero() } else { RatFunc::one() }),
            _ => Repr::Bits(v),
        };
        Self {
            descriptor: descriptor.clone(),
            repr,
        }
    }

    /// Wraps a packed element of a finite field.
    pub fn from_finite(field: &Gf2m, bits: u32) -> Self {
        Self {
            descriptor: field.descriptor(),
            repr: Repr::Bits(bits),
        }
    }

    pub fn from_ratfunc(r: RatFunc) -> Self {
        Self {
            descriptor: FieldDescriptor::RatFunc,
            repr: Repr::Rat(r),
        }
    }

    /// Parses a scalar atom (see [`Field::parse_atom`]).
    pub fn parse(descriptor: &FieldDescriptor, s: &str) -> Result<Self, FieldError> {
        let bad = || FieldError::BadLiteral(s.to_string());
        match descriptor {
            FieldDescriptor::RatFunc => RatFuncField
                .parse_atom(s)
                .map(Self::from_ratfunc)
                .ok_or_else(bad),
            _ => {
                let field = descriptor.finite_field().expect("finite")?;
                field
                    .parse_atom(s)
                    .map(|b| Self::from_finite(&field, b))
                    .ok_or_else(bad)
            }
        }
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.descriptor
    }

    pub fn as_bits(&self) -> Option<u32> {
        match self.repr {
            Repr::Bits(b) => Some(b),
            Repr::Rat(_) => None,
        }
    }

    pub fn as_ratfunc(&self) -> Option<&RatFunc> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            Repr::Bits(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(b) => *b == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    fn check(&self, other: &Self) -> Result<(), FieldError> {
        if self.descriptor == other.descriptor {
            Ok(())
        } else {
            Err(FieldError::DescriptorMismatch(
                self.descriptor.to_string(),
                other.descriptor.to_string(),
            ))
        }
    }

    fn with_repr(&self, repr: Repr) -> Self {
        Self {
            descriptor: self.descriptor.clone(),
            repr,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with_repr(match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => Repr::Bits(a ^ b),
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(RatFuncField.add(a, b)),
            _ => unreachable!("descriptor equality fixes the representation"),
        }))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.check(other)?;
        Ok(self.with_repr(match (&self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                let (m, modulus) = self.descriptor.degree_and_modulus().expect("finite");
                Repr::Bits(mul_raw(*a as u64, *b as u64, m, modulus) as u32)
            }
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(RatFuncField.mul(a, b)),
            _ => unreachable!("descriptor equality fixes the representation"),
        }))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.descriptor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            base = base.mul(&base).expect("same field");
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match &self.repr {
            Repr::Bits(_) => {
                let (m, _) = self.descriptor.degree_and_modulus().expect("finite");
                Ok(self.pow((1u64 << m) - 2))
            }
            Repr::Rat(r) => Ok(self.with_repr(Repr::Rat(RatFuncField.inv(r).expect("nonzero")))),
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Bits(b) => f.write_str(&Gf2Poly::from_bits(*b as u64).render("u")),
            Repr::Rat(r) => write!(f, "{r}"),
        }
    }
}
