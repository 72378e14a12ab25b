//! Elements of `R + uR` where `R = Z4[x]/<m>` and `u^2 = 0`.

use crate::error::Result;
use crate::z4poly::Z4Poly;
use std::fmt;

/// `a(x) + u*b(x)` with both components reduced modulo the ambient modulus.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct UPair {
    pub a: Z4Poly,
    pub b: Z4Poly,
}

impl UPair {
    pub fn new(a: Z4Poly, b: Z4Poly) -> Self {
        UPair { a, b }
    }

    pub fn zero() -> Self {
        UPair {
            a: Z4Poly::zero(),
            b: Z4Poly::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn reduce(&self, modulus: &Z4Poly) -> Result<UPair> {
        Ok(UPair {
            a: self.a.rem(modulus)?,
            b: self.b.rem(modulus)?,
        })
    }

    pub fn add(&self, other: &UPair) -> UPair {
        UPair {
            a: self.a.add(&other.a),
            b: self.b.add(&other.b),
        }
    }

    /// Product with another element: `(a+ub)(c+ud) = ac + u(ad+bc)`.
    pub fn mul(&self, other: &UPair, modulus: &Z4Poly) -> Result<UPair> {
        let a = self.a.mul(&other.a).rem(modulus)?;
        let b = self
            .a
            .mul(&other.b)
            .add(&self.b.mul(&other.a))
            .rem(modulus)?;
        Ok(UPair { a, b })
    }

    /// Product with a plain polynomial (acting on both components).
    pub fn mul_poly(&self, p: &Z4Poly, modulus: &Z4Poly) -> Result<UPair> {
        Ok(UPair {
            a: self.a.mul(p).rem(modulus)?,
            b: self.b.mul(p).rem(modulus)?,
        })
    }

    /// Coefficient row of rank `2d`: a-part slots first, then u-part slots.
    pub fn to_row(&self, d: usize) -> Vec<u8> {
        let mut row = self.a.coeff_vec(d);
        row.extend(self.b.coeff_vec(d));
        row
    }

    /// Reads a row in the `[a | b]` slot layout back into a pair.
    pub fn from_row(row: &[u8]) -> UPair {
        let d = row.len() / 2;
        UPair {
            a: Z4Poly::from_coeffs(row[..d].iter().map(|&c| c as i64)),
            b: Z4Poly::from_coeffs(row[d..].iter().map(|&c| c as i64)),
        }
    }

    /// Applies `x -> -x` to both components.
    pub fn negate_odd(&self) -> UPair {
        UPair {
            a: self.a.negate_odd(),
            b: self.b.negate_odd(),
        }
    }
}

impl fmt::Display for UPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.a, self.b)
    }
}
