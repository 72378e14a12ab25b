//! Dense polynomial arithmetic over Z/4 and Z/2.
//!
//! Coefficients are stored little-endian (`coeffs[i]` is the coefficient of
//! `y^i`) with trailing zeros trimmed, so the zero polynomial is the empty
//! vector. `F2Poly` is a distinct type, not a view of `Z4Poly`: reduction
//! mod 2 is a ring homomorphism but {0,1} is not a subring of Z/4.
//!
//! The text form used by the CLI and file formats is a comma-separated
//! little-endian coefficient list in brackets, e.g. `[3,0,1]` for `3 + y^2`.

use crate::error::{Error, Result};
use std::fmt;

/// Polynomial over Z/4, little-endian coefficients in `{0,1,2,3}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Z4Poly {
    coeffs: Vec<u8>,
}

/// Polynomial over F2, little-endian coefficients in `{0,1}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2Poly {
    coeffs: Vec<u8>,
}

fn trim(coeffs: &mut Vec<u8>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl Z4Poly {
    pub fn zero() -> Self {
        Z4Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Z4Poly { coeffs: vec![1] }
    }

    pub fn constant(c: i64) -> Self {
        Z4Poly::from_coeffs([c])
    }

    /// `c * y^deg`, reduced mod 4.
    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut coeffs = vec![0u8; deg + 1];
        coeffs[deg] = c.rem_euclid(4) as u8;
        let mut p = Z4Poly { coeffs };
        trim(&mut p.coeffs);
        p
    }

    /// Builds a polynomial from little-endian coefficients, reducing each
    /// entry mod 4 and trimming trailing zeros.
    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let mut c: Vec<u8> = coeffs.into_iter().map(|x| x.rem_euclid(4) as u8).collect();
        trim(&mut c);
        Z4Poly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Coefficient of `y^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Coefficients padded with zeros to length `len`.
    pub fn coeff_vec(&self, len: usize) -> Vec<u8> {
        let mut v = vec![0u8; len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i] = c;
        }
        v
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn add(&self, other: &Z4Poly) -> Z4Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u8; n];
        for (i, v) in c.iter_mut().enumerate() {
            *v = (self.coeff(i) + other.coeff(i)) & 3;
        }
        trim(&mut c);
        Z4Poly { coeffs: c }
    }

    pub fn sub(&self, other: &Z4Poly) -> Z4Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u8; n];
        for (i, v) in c.iter_mut().enumerate() {
            *v = (4 + self.coeff(i) - other.coeff(i)) & 3;
        }
        trim(&mut c);
        Z4Poly { coeffs: c }
    }

    pub fn neg(&self) -> Z4Poly {
        Z4Poly::zero().sub(self)
    }

    pub fn scale(&self, c: i64) -> Z4Poly {
        let c = c.rem_euclid(4) as u8;
        let mut out: Vec<u8> = self.coeffs.iter().map(|&x| (x * c) & 3).collect();
        trim(&mut out);
        Z4Poly { coeffs: out }
    }

    pub fn mul(&self, other: &Z4Poly) -> Z4Poly {
        if self.is_zero() || other.is_zero() {
            return Z4Poly::zero();
        }
        let mut c = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) & 3;
            }
        }
        trim(&mut c);
        Z4Poly { coeffs: c }
    }

    /// Multiplication by `y^s`.
    pub fn shl(&self, s: usize) -> Z4Poly {
        if self.is_zero() {
            return Z4Poly::zero();
        }
        let mut c = vec![0u8; s];
        c.extend_from_slice(&self.coeffs);
        Z4Poly { coeffs: c }
    }

    /// Quotient and remainder by a monic modulus.
    pub fn divmod(&self, m: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
        if !m.is_monic() || m.degree() == Some(0) {
            return Err(Error::NonMonicModulus);
        }
        let dm = m.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; self.coeffs.len().saturating_sub(dm)];
        while rem.len() > dm {
            let lead = rem[rem.len() - 1];
            let shift = rem.len() - 1 - dm;
            if lead != 0 {
                quot[shift] = lead;
                for (i, &mc) in m.coeffs.iter().enumerate() {
                    rem[shift + i] = (4 + rem[shift + i] - ((lead * mc) & 3)) & 3;
                }
            }
            rem.pop();
        }
        trim(&mut rem);
        trim(&mut quot);
        Ok((Z4Poly { coeffs: quot }, Z4Poly { coeffs: rem }))
    }

    /// Remainder modulo a monic modulus: the unique representative of
    /// degree below `deg(m)`.
    pub fn rem(&self, m: &Z4Poly) -> Result<Z4Poly> {
        Ok(self.divmod(m)?.1)
    }

    /// Exact quotient by a monic divisor; errors if the division leaves a
    /// remainder.
    pub fn exact_div(&self, m: &Z4Poly) -> Result<Z4Poly> {
        let (q, r) = self.divmod(m)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "exact division left remainder {r}"
            )));
        }
        Ok(q)
    }

    /// `self^e` reduced modulo a monic modulus, by square-and-multiply.
    pub fn pow_mod(&self, e: u64, m: &Z4Poly) -> Result<Z4Poly> {
        let mut base = self.rem(m)?;
        let mut acc = Z4Poly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Coefficient-wise reduction mod 2.
    pub fn bar(&self) -> F2Poly {
        F2Poly::from_coeffs(self.coeffs.iter().map(|&c| (c & 1) as i64))
    }

    /// Substitutes `-x^(2^k)` for the variable: coefficient `c_i` of `y^i`
    /// lands at `x^(i*2^k)` with sign `(-1)^i`.
    pub fn substitute_neg_x2k(&self, k: u32) -> Z4Poly {
        if self.is_zero() {
            return Z4Poly::zero();
        }
        let step = 1usize << k;
        let mut c = vec![0u8; (self.coeffs.len() - 1) * step + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            c[i * step] = if i % 2 == 1 { (4 - a) & 3 } else { a };
        }
        trim(&mut c);
        Z4Poly { coeffs: c }
    }

    /// Negates the coefficients at odd positions, i.e. maps `p(x)` to `p(-x)`.
    pub fn negate_odd(&self) -> Z4Poly {
        let mut c = self.coeffs.clone();
        for (i, v) in c.iter_mut().enumerate() {
            if i % 2 == 1 {
                *v = (4 - *v) & 3;
            }
        }
        trim(&mut c);
        Z4Poly { coeffs: c }
    }

    /// Parses the bracketed text form, e.g. `[3,0,1]`; `[]` is zero.
    pub fn parse(s: &str) -> Result<Z4Poly> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [..] coefficient list, got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Z4Poly::zero());
        }
        let mut coeffs = Vec::new();
        for part in inner.split(',') {
            let v: i64 = part
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {part:?}")))?;
            coeffs.push(v);
        }
        Ok(Z4Poly::from_coeffs(coeffs))
    }
}

impl fmt::Display for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Z4Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z4{self}")
    }
}

impl F2Poly {
    pub fn zero() -> Self {
        F2Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        F2Poly { coeffs: vec![1] }
    }

    pub fn monomial(deg: usize) -> Self {
        let mut coeffs = vec![0u8; deg + 1];
        coeffs[deg] = 1;
        F2Poly { coeffs }
    }

    pub fn from_coeffs<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let mut c: Vec<u8> = coeffs.into_iter().map(|x| x.rem_euclid(2) as u8).collect();
        trim(&mut c);
        F2Poly { coeffs: c }
    }

    /// Polynomial with coefficient `c_i = bit i of mask`.
    pub fn from_bits(mask: u64) -> Self {
        let mut c = Vec::new();
        let mut m = mask;
        while m > 0 {
            c.push((m & 1) as u8);
            m >>= 1;
        }
        F2Poly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeff_vec(&self, len: usize) -> Vec<u8> {
        let mut v = vec![0u8; len];
        for (i, &c) in self.coeffs.iter().enumerate() {
            v[i] = c;
        }
        v
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &F2Poly) -> F2Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![0u8; n];
        for (i, v) in c.iter_mut().enumerate() {
            *v = self.coeff(i) ^ other.coeff(i);
        }
        trim(&mut c);
        F2Poly { coeffs: c }
    }

    pub fn mul(&self, other: &F2Poly) -> F2Poly {
        if self.is_zero() || other.is_zero() {
            return F2Poly::zero();
        }
        let mut c = vec![0u8; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] ^= a & b;
            }
        }
        trim(&mut c);
        F2Poly { coeffs: c }
    }

    /// Quotient and remainder; the divisor must be nonzero (over F2 every
    /// nonzero polynomial is monic).
    pub fn divmod(&self, m: &F2Poly) -> Result<(F2Poly, F2Poly)> {
        if m.is_zero() {
            return Err(Error::NonMonicModulus);
        }
        let dm = m.degree().unwrap();
        if dm == 0 {
            return Ok((self.clone(), F2Poly::zero()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u8; self.coeffs.len().saturating_sub(dm)];
        while rem.len() > dm {
            let lead = rem[rem.len() - 1];
            let shift = rem.len() - 1 - dm;
            if lead != 0 {
                quot[shift] = 1;
                for (i, &mc) in m.coeffs.iter().enumerate() {
                    rem[shift + i] ^= mc;
                }
            }
            rem.pop();
        }
        trim(&mut rem);
        trim(&mut quot);
        Ok((F2Poly { coeffs: quot }, F2Poly { coeffs: rem }))
    }

    pub fn rem(&self, m: &F2Poly) -> Result<F2Poly> {
        Ok(self.divmod(m)?.1)
    }

    /// Monic gcd; errors when both inputs are zero.
    pub fn gcd(&self, other: &F2Poly) -> Result<F2Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }

    /// Extended gcd: returns `(g, s, t)` with `s*self + t*other = g`.
    pub fn xgcd(&self, other: &F2Poly) -> Result<(F2Poly, F2Poly, F2Poly)> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (F2Poly::one(), F2Poly::zero());
        let (mut t0, mut t1) = (F2Poly::zero(), F2Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            r0 = r1;
            r1 = r;
            let s = s0.add(&q.mul(&s1));
            s0 = s1;
            s1 = s;
            let t = t0.add(&q.mul(&t1));
            t0 = t1;
            t1 = t;
        }
        Ok((r0, s0, t0))
    }

    pub fn pow_mod(&self, e: u64, m: &F2Poly) -> Result<F2Poly> {
        let mut base = self.rem(m)?;
        let mut acc = F2Poly::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Irreducibility over F2: `y^(2^m) = y (mod self)` and for each prime
    /// `q | m`, `gcd(y^(2^(m/q)) - y, self) = 1`.
    pub fn is_irreducible(&self) -> bool {
        let m = match self.degree() {
            None | Some(0) => return false,
            Some(d) => d,
        };
        if m == 1 {
            return true;
        }
        let y = F2Poly::monomial(1);
        // y^(2^i) mod self by repeated squaring of the Frobenius image
        let frob = |steps: usize| -> F2Poly {
            let mut acc = y.rem(self).unwrap();
            for _ in 0..steps {
                acc = acc.mul(&acc).rem(self).unwrap();
            }
            acc
        };
        if frob(m) != y.rem(self).unwrap() {
            return false;
        }
        let mut rest = m;
        let mut primes = Vec::new();
        let mut p = 2;
        while p * p <= rest {
            if rest % p == 0 {
                primes.push(p);
                while rest % p == 0 {
                    rest /= p;
                }
            }
            p += 1;
        }
        if rest > 1 {
            primes.push(rest);
        }
        for q in primes {
            let img = frob(m / q).add(&y);
            if self.gcd(&img).unwrap().degree() != Some(0) {
                return false;
            }
        }
        true
    }

    /// Lift to Z/4 keeping the 0/1 coefficients.
    pub fn lift(&self) -> Z4Poly {
        Z4Poly::from_coeffs(self.coeffs.iter().map(|&c| c as i64))
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2{self}")
    }
}

/// Solves `a*big + b*small = 1` exactly in `Z4[y]` for a pair whose mod-2
/// reductions are coprime, with `deg(a) < deg(small)` and
/// `deg(b) < deg(big)`.
///
/// The identity is found over F2 first and corrected by one lifting step:
/// if `a0*F + b0*f = 1 + 2e` then multiplying both cofactors by `1 - 2e`
/// clears the error term, since `4 = 0`.
pub fn bezout_coprime_z4(big: &Z4Poly, small: &Z4Poly) -> Result<(Z4Poly, Z4Poly)> {
    let (g, s, t) = big.bar().xgcd(&small.bar())?;
    if g.degree() != Some(0) {
        return Err(Error::NotCoprimeMod2);
    }
    let a0 = s.lift();
    let b0 = t.lift();
    // a0*big + b0*small = 1 + 2e exactly over Z4
    let err2 = a0.mul(big).add(&b0.mul(small)).sub(&Z4Poly::one());
    if err2.coeffs().iter().any(|&c| c % 2 != 0) {
        return Err(Error::Internal("lift error term is not even".into()));
    }
    let corrector = Z4Poly::one().sub(&err2); // 1 - 2e
    let a_full = a0.mul(&corrector);
    let (a, b) = if small.degree() == Some(0) {
        // small is monic of degree 0, i.e. small = 1
        (Z4Poly::zero(), Z4Poly::one())
    } else {
        let a = a_full.rem(small)?;
        let b = Z4Poly::one().sub(&a.mul(big)).exact_div(small)?;
        (a, b)
    };
    let check = a.mul(big).add(&b.mul(small));
    if check != Z4Poly::one() {
        return Err(Error::Internal(
            "bezout identity failed expansion check".into(),
        ));
    }
    Ok((a, b))
}
