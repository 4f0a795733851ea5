use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;

use crate::error::{Error, Result};

/// A residue class in `Z/mZ`, stored as its representative in `[0, m)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ZmodScalar {
    modulus: u64,
    residue: u64,
}

impl ZmodScalar {
    pub fn new(modulus: u64, value: i64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::Domain(format!("modulus must be >= 2, got {modulus}")));
        }
        let residue = (value as i128).rem_euclid(modulus as i128) as u64;
        Ok(ZmodScalar { modulus, residue })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    fn with(&self, residue: u128) -> Self {
        ZmodScalar {
            modulus: self.modulus,
            residue: (residue % self.modulus as u128) as u64,
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixing residues mod {} and mod {}",
            self.modulus, other.modulus
        );
    }

    pub fn is_unit(&self) -> bool {
        self.residue.gcd(&self.modulus) == 1
    }

    pub fn inverse(&self) -> Result<Self> {
        let eg = (self.residue as i128).extended_gcd(&(self.modulus as i128));
        if eg.gcd != 1 {
            return Err(Error::NotAUnit {
                ring: format!("Z/{}", self.modulus),
            });
        }
        Ok(self.with(eg.x.rem_euclid(self.modulus as i128) as u128))
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let mut base = if exp < 0 { self.inverse()? } else { *self };
        let mut e = exp.unsigned_abs();
        let mut acc = self.with(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl fmt::Debug for ZmodScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.residue, self.modulus)
    }
}

impl fmt::Display for ZmodScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for ZmodScalar {
    type Output = ZmodScalar;
    fn add(self, rhs: Self) -> Self {
        self.check(&rhs);
        self.with(self.residue as u128 + rhs.residue as u128)
    }
}

impl Sub for ZmodScalar {
    type Output = ZmodScalar;
    fn sub(self, rhs: Self) -> Self {
        self.check(&rhs);
        self.with(self.residue as u128 + (self.modulus - rhs.residue) as u128)
    }
}

impl Mul for ZmodScalar {
    type Output = ZmodScalar;
    fn mul(self, rhs: Self) -> Self {
        self.check(&rhs);
        self.with(self.residue as u128 * rhs.residue as u128)
    }
}

impl Neg for ZmodScalar {
    type Output = ZmodScalar;
    fn neg(self) -> Self {
        self.with((self.modulus - self.residue) as u128)
    }
}
