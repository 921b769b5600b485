use std::fmt;

/// A monomial `x^x y^y z^z`. The derived order is lexicographic with
/// `x > y > z`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
    pub z: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0, z: 0 };

    pub const fn new(x: u32, y: u32, z: u32) -> Self {
        Self { x, y, z }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y + self.z
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.x, self.y, self.z]
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.x <= o.x && self.y <= o.y && self.z <= o.z
    }

    /// `o / self`, if `self` divides `o`.
    pub fn quotient_into(&self, o: &Self) -> Option<Self> {
        self.divides(o)
            .then(|| Self::new(o.x - self.x, o.y - self.y, o.z - self.z))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::new(self.x * e, self.y * e, self.z * e)
    }

    /// Image under the `e`-fold Frobenius: every exponent times `2^e`.
    pub fn frobenius(&self, e: u32) -> Self {
        Self::new(self.x << e, self.y << e, self.z << e)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("y", self.y), ("z", self.z)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

/// Exponent caps: a monomial survives iff each exponent is below its cap.
/// `Truncation::cube(q)` gives the quotient by `(x^q, y^q, z^q)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Truncation {
    caps: [Option<u32>; 3],
}

impl Truncation {
    pub const NONE: Truncation = Truncation { caps: [None; 3] };

    pub fn new(caps: [Option<u32>; 3]) -> Self {
        Self { caps }
    }

    pub fn cube(q: u32) -> Self {
        Self::new([Some(q); 3])
    }

    pub fn caps(&self) -> [Option<u32>; 3] {
        self.caps
    }

    pub fn admits(&self, m: &Monomial) -> bool {
        self.caps
            .iter()
            .zip(m.exponents())
            .all(|(cap, e)| cap.is_none_or(|c| e < c))
    }
}
