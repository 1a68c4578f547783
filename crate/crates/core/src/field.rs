//! Arithmetic in the prime field GF(p).

use core::fmt;

use crate::error::{Error, Result};

/// Largest accepted characteristic. Products of two residues must fit in a `u64`.
pub const MAX_PRIME: u32 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) || p >= MAX_PRIME {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn order(self) -> u32 {
        self.p
    }

    /// Wraps a residue, rejecting values outside `[0, p)`.
    pub fn elem(self, value: u32) -> Result<Scalar> {
        if value >= self.p {
            return Err(Error::ValueOutOfRange { value: value.into(), p: self.p });
        }
        Ok(Scalar { value, field: self })
    }

    /// Reduces an arbitrary signed integer into the field.
    pub fn reduce(self, value: i64) -> Scalar {
        let v = value.rem_euclid(i64::from(self.p)) as u32;
        Scalar { value: v, field: self }
    }

    pub fn zero(self) -> Scalar {
        Scalar { value: 0, field: self }
    }

    pub fn one(self) -> Scalar {
        Scalar { value: 1 % self.p, field: self }
    }

    /// All elements `0, 1, ..., p - 1`.
    pub fn elements(self) -> impl Iterator<Item = Scalar> {
        (0..self.p).map(move |value| Scalar { value, field: self })
    }

    // Raw residue arithmetic used by the linear algebra kernels. Inputs are
    // assumed to be reduced already.

    #[inline]
    pub(crate) fn add_raw(self, x: u32, y: u32) -> u32 {
        let s = u64::from(x) + u64::from(y);
        (s % u64::from(self.p)) as u32
    }

    #[inline]
    pub(crate) fn sub_raw(self, x: u32, y: u32) -> u32 {
        self.add_raw(x, self.neg_raw(y))
    }

    #[inline]
    pub(crate) fn neg_raw(self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.p - x
        }
    }

    #[inline]
    pub(crate) fn mul_raw(self, x: u32, y: u32) -> u32 {
        ((u64::from(x) * u64::from(y)) % u64::from(self.p)) as u32
    }

    pub(crate) fn inv_raw(self, x: u32) -> Option<u32> {
        if x == 0 {
            return None;
        }
        // Fermat: x^(p-2).
        Some(self.pow_raw(x, u64::from(self.p) - 2))
    }

    pub(crate) fn pow_raw(self, base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        let mut b = base % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul_raw(acc, b);
            }
            b = self.mul_raw(b, b);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

/// Trial division.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let n = u64::from(n);
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of GF(p) that remembers its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u32,
    field: PrimeField,
}

impl Scalar {
    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn field(self) -> PrimeField {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Scalar) -> Result<PrimeField> {
        if self.field != other.field {
            return Err(Error::FieldMismatch { left: self.field.p, right: other.field.p });
        }
        Ok(self.field)
    }

    pub fn add(self, other: Scalar) -> Result<Scalar> {
        let f = self.same_field(other)?;
        Ok(Scalar { value: f.add_raw(self.value, other.value), field: f })
    }

    pub fn sub(self, other: Scalar) -> Result<Scalar> {
        let f = self.same_field(other)?;
        Ok(Scalar { value: f.sub_raw(self.value, other.value), field: f })
    }

    pub fn mul(self, other: Scalar) -> Result<Scalar> {
        let f = self.same_field(other)?;
        Ok(Scalar { value: f.mul_raw(self.value, other.value), field: f })
    }

    pub fn neg(self) -> Scalar {
        Scalar { value: self.field.neg_raw(self.value), field: self.field }
    }

    pub fn inv(self) -> Result<Scalar> {
        let value = self.field.inv_raw(self.value).ok_or(Error::DivisionByZero(self.field.p))?;
        Ok(Scalar { value, field: self.field })
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
