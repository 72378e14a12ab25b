//! Factorization of `y^n - 1` (n odd) into monic basic irreducible
//! polynomials over Z/4.
//!
//! The mod-2 factors are the minimal polynomials of the 2-cyclotomic cosets,
//! built inside an explicit splitting field `F2[z]/<m(z)>`. Each factor is
//! then lifted to Z/4 by one Graeffe root-squaring step, which is exact here
//! because `2^2 = 0`: squaring any mod-4 lift of a Teichmuller root yields
//! the true root of the lifted factor mod 4.

use crate::error::{Error, Result};
use crate::z4poly::{F2Poly, Z4Poly};

/// Partition of `{0..n-1}` into orbits of `i -> 2i mod n`; each coset is
/// sorted ascending and cosets are ordered by smallest member, so the coset
/// of 0 comes first.
pub fn cyclotomic_cosets(n: u64) -> Result<Vec<Vec<u64>>> {
    if n == 0 || n.is_multiple_of(2) {
        return Err(Error::EvenLength(n));
    }
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start as usize] {
            continue;
        }
        let mut coset = Vec::new();
        let mut i = start;
        loop {
            seen[i as usize] = true;
            coset.push(i);
            i = (2 * i) % n;
            if i == start {
                break;
            }
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(cosets)
}

/// Multiplicative order of 2 modulo odd `n > 1`.
fn order_of_two(n: u64) -> u64 {
    let mut ord = 1;
    let mut pow = 2 % n;
    while pow != 1 {
        pow = (pow * 2) % n;
        ord += 1;
    }
    ord
}

fn prime_divisors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v.is_multiple_of(p) {
            out.push(p);
            while v.is_multiple_of(p) {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// Arithmetic in `F2[z]/<modulus>`.
struct F2Ext {
    modulus: F2Poly,
}

impl F2Ext {
    fn mul(&self, a: &F2Poly, b: &F2Poly) -> F2Poly {
        a.mul(b).rem(&self.modulus).unwrap()
    }

    fn pow(&self, a: &F2Poly, mut e: u64) -> F2Poly {
        let mut base = a.rem(&self.modulus).unwrap();
        let mut acc = F2Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// Smallest irreducible polynomial of the given degree over F2, by
/// coefficient-mask order.
fn find_irreducible(degree: usize) -> F2Poly {
    let top = 1u64 << degree;
    for mask in 0..top {
        let p = F2Poly::from_bits(top | mask);
        if p.is_irreducible() {
            return p;
        }
    }
    unreachable!("irreducible polynomials exist in every degree");
}

/// Deterministically finds an element of exact multiplicative order `n`
/// in `F2[z]/<modulus>` with `n | 2^deg - 1`.
fn element_of_order(field: &F2Ext, n: u64) -> F2Poly {
    let m = field.modulus.degree().unwrap() as u32;
    let group_order = (1u64 << m) - 1;
    debug_assert_eq!(group_order % n, 0);
    let cofactor = group_order / n;
    let primes = prime_divisors(n);
    for mask in 2u64.. {
        let g = F2Poly::from_bits(mask);
        if g.degree().is_none_or(|d| d >= m as usize) {
            continue;
        }
        let candidate = field.pow(&g, cofactor);
        if candidate == F2Poly::one() && n > 1 {
            continue;
        }
        if primes
            .iter()
            .all(|&q| field.pow(&candidate, n / q) != F2Poly::one())
        {
            return candidate;
        }
    }
    unreachable!("the multiplicative group is cyclic");
}

/// Irreducible factors of `y^n - 1` over F2, one per 2-cyclotomic coset,
/// in coset order.
pub fn factor_mod2(n: u64) -> Result<Vec<F2Poly>> {
    let cosets = cyclotomic_cosets(n)?;
    if n == 1 {
        return Ok(vec![F2Poly::from_coeffs([1, 1])]);
    }
    let m = order_of_two(n) as usize;
    let field = F2Ext {
        modulus: find_irreducible(m),
    };
    let zeta = element_of_order(&field, n);
    let mut factors = Vec::with_capacity(cosets.len());
    for coset in &cosets {
        // minimal polynomial: product of (y - zeta^i) over the coset,
        // with coefficients living in the big field
        let mut poly: Vec<F2Poly> = vec![F2Poly::one()];
        for &i in coset {
            let root = field.pow(&zeta, i);
            let mut next = vec![F2Poly::zero(); poly.len() + 1];
            for (deg, c) in poly.iter().enumerate() {
                next[deg + 1] = next[deg + 1].add(c);
                next[deg] = next[deg].add(&field.mul(c, &root));
            }
            poly = next;
        }
        let mut bits = Vec::with_capacity(poly.len());
        for c in &poly {
            match c.degree() {
                None => bits.push(0i64),
                Some(0) => bits.push(1),
                Some(_) => {
                    return Err(Error::Internal(
                        "coset minimal polynomial has a coefficient outside F2".into(),
                    ))
                }
            }
        }
        factors.push(F2Poly::from_coeffs(bits));
    }
    // product must re-expand to y^n - 1 over F2
    let mut product = F2Poly::one();
    for f in &factors {
        product = product.mul(f);
    }
    let target = F2Poly::monomial(n as usize).add(&F2Poly::one());
    if product != target {
        return Err(Error::Internal(
            "mod-2 factor product does not re-expand".into(),
        ));
    }
    Ok(factors)
}

/// Lifts an irreducible divisor `g` of `y^n - 1` over F2 to the unique
/// monic basic irreducible divisor of `y^n - 1` over Z/4.
///
/// One Graeffe step: the even part of `g(y) * g(-y)` over Z/4 is, up to the
/// sign fixing monicity, the lift evaluated at `y^2`; dividing exponents by
/// two gives the lift itself. Divisibility is then checked by exact
/// division, which is mandatory.
pub fn hensel_lift(g: &F2Poly, n: u64) -> Result<Z4Poly> {
    let d = g
        .degree()
        .ok_or_else(|| Error::Internal("cannot lift the zero polynomial".into()))?;
    let g4 = g.lift();
    let prod = g4.mul(&g4.negate_odd());
    let mut even = Vec::with_capacity(d + 1);
    for (i, &c) in prod.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            even.push(c as i64);
        } else if c != 0 {
            return Err(Error::Internal(
                "Graeffe product has an odd-degree term".into(),
            ));
        }
    }
    let mut f = Z4Poly::from_coeffs(even);
    if d % 2 == 1 {
        f = f.neg();
    }
    if !f.is_monic() || f.bar() != *g {
        return Err(Error::Internal(
            "Graeffe lift lost monicity or image".into(),
        ));
    }
    let target = Z4Poly::monomial(1, n as usize).add(&Z4Poly::constant(-1));
    if !target.rem(&f)?.is_zero() {
        return Err(Error::Internal(
            "lift does not divide y^n - 1 over Z4".into(),
        ));
    }
    Ok(f)
}

/// The factorization `y^n - 1 = f_1 ... f_r` over Z/4 with `f_1 = y - 1`
/// first, then ascending degree, ties broken by coefficient order.
#[derive(Clone, Debug)]
pub struct FactorSet {
    n: u64,
    factors: Vec<Z4Poly>,
}

impl FactorSet {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[Z4Poly] {
        &self.factors
    }

    pub fn r(&self) -> usize {
        self.factors.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.degree().unwrap()).collect()
    }
}

pub fn factor_yn_minus_1(n: u64) -> Result<FactorSet> {
    let mod2 = factor_mod2(n)?;
    let mut factors = Vec::with_capacity(mod2.len());
    for g in &mod2 {
        factors.push(hensel_lift(g, n)?);
    }
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    // invariants: the product re-expands exactly and degrees sum to n
    let mut product = Z4Poly::one();
    for f in &factors {
        product = product.mul(f);
    }
    let target = Z4Poly::monomial(1, n as usize).add(&Z4Poly::constant(-1));
    if product != target {
        return Err(Error::Internal("factor product does not re-expand".into()));
    }
    let degree_sum: usize = factors.iter().map(|f| f.degree().unwrap()).sum();
    if degree_sum != n as usize {
        return Err(Error::Internal("factor degrees do not sum to n".into()));
    }
    Ok(FactorSet { n, factors })
}
