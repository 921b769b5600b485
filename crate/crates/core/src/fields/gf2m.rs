use std::fmt;
use std::sync::Arc;

use super::{deterministic_irreducible, Field, FieldDescriptor, FieldError, Gf2Poly};

/// Largest supported extension degree; elements are packed into `u32`.
pub const MAX_DEGREE: u32 = 31;

/// The finite field F₂[u]/(modulus), elements packed as bit patterns of
/// degree < m.
#[derive(Clone)]
pub struct Gf2m {
    m: u32,
    modulus: u64,
    prime: bool,
    tables: Arc<Tables>,
}

enum Tables {
    /// Full multiplication and inversion tables, m ≤ 8.
    Full { mul: Vec<u8>, inv: Vec<u8> },
    /// Discrete log/antilog tables relative to a primitive element, m ≤ 16.
    Log { log: Vec<u32>, exp: Vec<u32> },
    None,
}

/// Carry-less multiplication followed by reduction modulo `modulus`.
pub(crate) fn mul_raw(a: u64, b: u64, m: u32, modulus: u64) -> u64 {
    let mut prod = 0u64;
    let mut b = b;
    while b != 0 {
        prod ^= a << b.trailing_zeros();
        b &= b - 1;
    }
    for bit in (m..2 * m).rev() {
        if (prod >> bit) & 1 == 1 {
            prod ^= modulus << (bit - m);
        }
    }
    prod
}

fn pow_raw(a: u64, mut e: u64, m: u32, modulus: u64) -> u64 {
    let mut base = a;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_raw(acc, base, m, modulus);
        }
        base = mul_raw(base, base, m, modulus);
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl Tables {
    fn build(m: u32, modulus: u64) -> Self {
        let size = 1usize << m;
        if m <= 8 {
            let mut mul = vec![0u8; size * size];
            let mut inv = vec![0u8; size];
            for a in 0..size {
                for b in a..size {
                    let p = mul_raw(a as u64, b as u64, m, modulus) as u8;
                    mul[a * size + b] = p;
                    mul[b * size + a] = p;
                    if p == 1 {
                        inv[a] = b as u8;
                        inv[b] = a as u8;
                    }
                }
            }
            Tables::Full { mul, inv }
        } else if m <= 16 {
            let order = (size - 1) as u64;
            let factors = prime_factors(order);
            let generator = (2..size as u64)
                .find(|&g| factors.iter().all(|p| pow_raw(g, order / p, m, modulus) != 1))
                .expect("the multiplicative group of a finite field is cyclic");
            let mut log = vec![0u32; size];
            let mut exp = vec![0u32; 2 * size];
            let mut x = 1u64;
            for i in 0..order as usize {
                exp[i] = x as u32;
                exp[i + order as usize] = x as u32;
                log[x as usize] = i as u32;
                x = mul_raw(x, generator, m, modulus);
            }
            Tables::Log { log, exp }
        } else {
            Tables::None
        }
    }
}

impl Gf2m {
    /// The field F₂ itself.
    pub fn f2() -> Self {
        let mut f = Self::build(1, 0b10);
        f.prime = true;
        f
    }

    /// F₂[u]/(modulus). The modulus must be irreducible of degree 1..=31.
    pub fn new(modulus: &Gf2Poly) -> Result<Self, FieldError> {
        let m = modulus.degree().unwrap_or(0) as u32;
        if m == 0 || m > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(m));
        }
        if !modulus.is_irreducible() {
            return Err(FieldError::ReducibleModulus(modulus.to_string(), m));
        }
        Ok(Self::build(m, modulus.to_bits().expect("degree below 64")))
    }

    /// F₂ᵐ with the lexicographically smallest irreducible modulus.
    pub fn with_degree(m: u32) -> Result<Self, FieldError> {
        if m == 0 || m > MAX_DEGREE {
            return Err(FieldError::UnsupportedDegree(m));
        }
        Self::new(&deterministic_irreducible(m))
    }

    fn build(m: u32, modulus: u64) -> Self {
        Self {
            m,
            modulus,
            prime: false,
            tables: Arc::new(Tables::build(m, modulus)),
        }
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> Gf2Poly {
        Gf2Poly::from_bits(self.modulus)
    }

    pub fn order(&self) -> u64 {
        1u64 << self.m
    }

    /// The residue class of `u`.
    pub fn generator(&self) -> u32 {
        if self.m == 1 {
            (self.modulus & 1) as u32
        } else {
            2
        }
    }

    /// Reduces an arbitrary F₂-polynomial into the field.
    pub fn reduce(&self, p: &Gf2Poly) -> u32 {
        let r = p.rem(&self.modulus());
        r.to_bits().expect("remainder has degree < m") as u32
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..(1u32 << self.m)
    }

    #[inline]
    pub(crate) fn mul_u32(&self, a: u32, b: u32) -> u32 {
        match &*self.tables {
            Tables::Full { mul, .. } => mul[((a as usize) << self.m) | b as usize] as u32,
            Tables::Log { log, exp } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    exp[(log[a as usize] + log[b as usize]) as usize]
                }
            }
            Tables::None => mul_raw(a as u64, b as u64, self.m, self.modulus) as u32,
        }
    }
}

impl PartialEq for Gf2m {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.modulus == other.modulus && self.prime == other.prime
    }
}

impl Eq for Gf2m {}

impl fmt::Debug for Gf2m {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2m({})", self.descriptor())
    }
}

impl Field for Gf2m {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }

    fn one(&self) -> u32 {
        1
    }

    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        a ^ b
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.mul_u32(*a, *b)
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        Some(match &*self.tables {
            Tables::Full { inv, .. } => inv[*a as usize] as u32,
            Tables::Log { log, exp } => {
                let order = (1u32 << self.m) - 1;
                exp[((order - log[*a as usize]) % order) as usize]
            }
            Tables::None => pow_raw(*a as u64, (1u64 << self.m) - 2, self.m, self.modulus) as u32,
        })
    }

    fn descriptor(&self) -> FieldDescriptor {
        if self.prime {
            FieldDescriptor::F2
        } else {
            FieldDescriptor::F2m {
                m: self.m,
                modulus: self.modulus(),
            }
        }
    }

    fn render(&self, a: &u32) -> String {
        Gf2Poly::from_bits(*a as u64).render("u")
    }

    fn parse_atom(&self, s: &str) -> Option<u32> {
        match s {
            "0" => return Some(0),
            "1" => return Some(1),
            _ => {}
        }
        if self.prime {
            return None;
        }
        if let Some(hex) = s.strip_prefix("0x") {
            return Gf2Poly::from_hex(hex).map(|p| self.reduce(&p));
        }
        let rest = s.strip_prefix('u')?;
        let e = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.parse::<u64>().ok()?
        };
        Some(self.pow(&self.generator(), e))
    }
}
