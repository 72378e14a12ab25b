//! The local ring `R = Z4[x]/<f(-x^(2^k))>` attached to one basic
//! irreducible factor `f` of `y^n - 1`.
//!
//! `R` is a finite chain ring: its maximal ideal is generated by `f(x)`
//! itself, `f^(2^k)` equals twice a unit, and `f` has nilpotency index
//! `2^(k+1)`. Every element has a unique digit expansion
//! `sum b_i(x) f(x)^i` with digits drawn from the 0/1-coefficient
//! polynomials of degree below `deg f`.

use crate::canon::solve;
use crate::error::{Error, Result};
use crate::z4poly::{F2Poly, Z4Poly};
use num_bigint::BigUint;
use num_traits::One;

#[derive(Clone, Debug)]
pub struct ChainRingCtx {
    k: u32,
    f: Z4Poly,
    f_bar: F2Poly,
    d: usize,
    /// Monic associate of `f(-x^(2^k))`; the leading coefficient of the raw
    /// substitution is `(-1)^d`, so for odd `d` the polynomial is negated,
    /// which generates the same ideal.
    modulus: Z4Poly,
    nu: u32,
    theta: Z4Poly,
    /// Powers `f^0 .. f^nu` reduced in the ring.
    f_powers: Vec<Z4Poly>,
    /// Multiplication-by-f matrix, row-major, degree x degree.
    f_matrix: Vec<Vec<u8>>,
}

impl ChainRingCtx {
    /// Builds the ring for a monic `f` with `bar(f)` irreducible and checks
    /// the chain-ring law: `f^(2^k)` reduces to an all-even polynomial whose
    /// half is a unit.
    pub fn new(f: &Z4Poly, k: u32) -> Result<ChainRingCtx> {
        if !f.is_monic() || f.degree() == Some(0) {
            return Err(Error::NonMonicModulus);
        }
        if k == 0 {
            return Err(Error::OutOfRange("k must be at least 1".into()));
        }
        let d = f.degree().unwrap();
        let mut modulus = f.substitute_neg_x2k(k);
        if d % 2 == 1 {
            modulus = modulus.neg();
        }
        if !modulus.is_monic() {
            return Err(Error::Internal("substitution lost monicity".into()));
        }
        let nu = 1u32 << (k + 1);
        let power = f.pow_mod(1u64 << k, &modulus)?;
        let mut half = Vec::with_capacity(power.coeffs().len());
        for &c in power.coeffs() {
            if c % 2 != 0 {
                return Err(Error::ChainRingLaw(format!(
                    "f^(2^k) has an odd coefficient in {power}; f is not basic irreducible"
                )));
            }
            half.push((c / 2) as i64);
        }
        let theta = Z4Poly::from_coeffs(half);
        let f_bar = f.bar();
        if theta.bar().rem(&f_bar)?.is_zero() {
            return Err(Error::ChainRingLaw("the halved power is not a unit".into()));
        }
        let degree = modulus.degree().unwrap();
        let mut f_powers = Vec::with_capacity(nu as usize + 1);
        f_powers.push(Z4Poly::one());
        for _ in 0..nu {
            let next = f_powers.last().unwrap().mul(f).rem(&modulus)?;
            f_powers.push(next);
        }
        if !f_powers[nu as usize].is_zero() {
            return Err(Error::Internal("f^nu is not zero in the ring".into()));
        }
        let cols: Vec<Z4Poly> = (0..degree)
            .map(|j| Z4Poly::monomial(1, j).mul(f).rem(&modulus))
            .collect::<Result<_>>()?;
        let f_matrix: Vec<Vec<u8>> = (0..degree)
            .map(|i| cols.iter().map(|c| c.coeff(i)).collect())
            .collect();
        Ok(ChainRingCtx {
            k,
            f: f.clone(),
            f_bar,
            d,
            modulus,
            nu,
            theta,
            f_powers,
            f_matrix,
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn f(&self) -> &Z4Poly {
        &self.f
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn modulus(&self) -> &Z4Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn nu(&self) -> u32 {
        self.nu
    }

    /// The unit with `f^(2^k) = 2 * theta` in the ring.
    pub fn theta(&self) -> &Z4Poly {
        &self.theta
    }

    /// `f^e` reduced, for `0 <= e <= nu`.
    pub fn f_power(&self, e: u32) -> &Z4Poly {
        &self.f_powers[e as usize]
    }

    /// Canonical residue modulo the ring modulus.
    pub fn reduce(&self, a: &Z4Poly) -> Z4Poly {
        a.rem(&self.modulus).expect("modulus is monic")
    }

    pub fn mul(&self, a: &Z4Poly, b: &Z4Poly) -> Z4Poly {
        self.reduce(&a.mul(b))
    }

    /// `|R|` = 4^(2^k * d).
    pub fn ring_size(&self) -> BigUint {
        BigUint::one() << (2 * self.degree())
    }

    /// `|<f^l>|` = 2^((nu - l) * d) for `0 <= l <= nu`.
    pub fn ideal_size(&self, l: u32) -> Result<BigUint> {
        if l > self.nu {
            return Err(Error::OutOfRange(format!(
                "ideal exponent {l} exceeds the nilpotency index {}",
                self.nu
            )));
        }
        Ok(BigUint::one() << ((self.nu - l) as usize * self.d))
    }

    /// The digit at the residue field: image of `a` modulo `<f, 2>`, lifted
    /// to a 0/1-coefficient polynomial of degree below `d`.
    fn digit_of(&self, a: &Z4Poly) -> Result<F2Poly> {
        a.bar().rem(&self.f_bar)
    }

    /// Divides an element of `<f>` by `f`, solving the multiplication
    /// matrix as a Z4-linear system; any solution serves because the
    /// ambiguity sits in the annihilator of `f` and never reaches the
    /// digits that remain to be extracted.
    fn divide_by_f(&self, a: &Z4Poly) -> Result<Z4Poly> {
        let rhs = a.coeff_vec(self.degree());
        let sol = solve(&self.f_matrix, self.degree(), &rhs)
            .ok_or_else(|| Error::Internal("division by f failed on an element of <f>".into()))?;
        Ok(Z4Poly::from_coeffs(sol.iter().map(|&c| c as i64)))
    }

    /// The unique digit expansion `a = sum_i b_i(x) f^i`, `0 <= i < nu`,
    /// with 0/1-coefficient digits of degree below `d`. The reconstruction
    /// is re-checked before returning.
    pub fn f_adic_expand(&self, a: &Z4Poly) -> Result<Vec<F2Poly>> {
        let a = self.reduce(a);
        let mut digits = Vec::with_capacity(self.nu as usize);
        let mut rest = a.clone();
        for i in 0..self.nu {
            let digit = self.digit_of(&rest)?;
            rest = rest.sub(&digit.lift());
            if i + 1 < self.nu {
                rest = self.divide_by_f(&self.reduce(&rest))?;
            }
            digits.push(digit);
        }
        if self.reconstruct(&digits)? != a {
            return Err(Error::Internal(
                "digit expansion failed to reconstruct".into(),
            ));
        }
        Ok(digits)
    }

    /// Evaluates `sum_i digits[i] * f^i` in the ring.
    pub fn reconstruct(&self, digits: &[F2Poly]) -> Result<Z4Poly> {
        if digits.len() > self.nu as usize {
            return Err(Error::OutOfRange("too many digits".into()));
        }
        let mut acc = Z4Poly::zero();
        for (i, b) in digits.iter().enumerate() {
            acc = acc.add(&self.mul(&b.lift(), &self.f_powers[i]));
        }
        Ok(self.reduce(&acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::factor_yn_minus_1;
    use crate::testutil::SplitMix;

    fn xm1() -> Z4Poly {
        Z4Poly::from_coeffs([3, 1])
    }

    #[test]
    fn basic_ring_for_x_minus_1() {
        let ctx = ChainRingCtx::new(&xm1(), 1).unwrap();
        assert_eq!(ctx.modulus(), &Z4Poly::from_coeffs([1, 0, 1]));
        assert_eq!(ctx.nu(), 4);
        // (x-1)^2 = x^2 + 2x + 1 = 2x mod x^2+1, so theta = x
        assert_eq!(ctx.theta(), &Z4Poly::from_coeffs([0, 1]));
        assert_eq!(
            ctx.mul(ctx.theta(), &Z4Poly::from_coeffs([2])),
            ctx.f_power(2).clone()
        );

        let ctx2 = ChainRingCtx::new(&xm1(), 2).unwrap();
        assert_eq!(ctx2.modulus(), &Z4Poly::from_coeffs([1, 0, 0, 0, 1]));
        assert_eq!(ctx2.nu(), 8);
    }

    #[test]
    fn cubic_factor_ring() {
        let f = Z4Poly::from_coeffs([3, 1, 2, 1]);
        let ctx = ChainRingCtx::new(&f, 1).unwrap();
        assert_eq!(ctx.nu(), 4);
        assert_eq!(ctx.degree(), 6);
        assert_eq!(ctx.ring_size(), BigUint::from(4096u32)); // 4^6
    }

    #[test]
    fn reduce_examples() {
        let ctx = ChainRingCtx::new(&xm1(), 1).unwrap();
        assert!(ctx.reduce(ctx.modulus()).is_zero());
        // f^(2^(k+1)) = (2 theta)^2 = 0
        let f4 = xm1().pow_mod(4, ctx.modulus()).unwrap();
        assert!(f4.is_zero());
        // x^degree reduces to the modulus-determined tail
        let probe = Z4Poly::monomial(1, ctx.degree());
        let (q, r) = probe.divmod(ctx.modulus()).unwrap();
        assert_eq!(ctx.reduce(&probe), r);
        assert_eq!(q.mul(ctx.modulus()).add(&r), probe);
    }

    #[test]
    fn rejects_square_factor() {
        // f = (x+1)^2 has f^2 = 0 in the quotient, so the halved power is
        // no unit and the chain-ring law check trips
        let f = Z4Poly::from_coeffs([1, 2, 1]);
        assert!(matches!(
            ChainRingCtx::new(&f, 1),
            Err(Error::ChainRingLaw(_))
        ));
    }

    #[test]
    fn digits_of_zero_and_f() {
        let ctx = ChainRingCtx::new(&xm1(), 1).unwrap();
        let zero = ctx.f_adic_expand(&Z4Poly::zero()).unwrap();
        assert!(zero.iter().all(|d| d.is_zero()));
        let f_digits = ctx.f_adic_expand(&xm1()).unwrap();
        let expected = vec![
            F2Poly::zero(),
            F2Poly::one(),
            F2Poly::zero(),
            F2Poly::zero(),
        ];
        assert_eq!(f_digits, expected);
    }

    #[test]
    fn digits_of_two_match_exhaustive_search() {
        let ctx = ChainRingCtx::new(&xm1(), 1).unwrap();
        let two = Z4Poly::from_coeffs([2]);
        let digits = ctx.f_adic_expand(&two).unwrap();
        // all 2^4 digit vectors over T = {0,1}: exactly one reconstructs 2
        let mut matches = Vec::new();
        for mask in 0u32..16 {
            let cand: Vec<F2Poly> = (0..4)
                .map(|i| F2Poly::from_bits(((mask >> i) & 1) as u64))
                .collect();
            if ctx.reconstruct(&cand).unwrap() == two {
                matches.push(cand);
            }
        }
        assert_eq!(matches.len(), 1);
        assert_eq!(matches[0], digits);
    }

    #[test]
    fn expansion_is_a_bijection_on_small_rings() {
        // exhaustive where 4^(2^k d) is small: (d,k) = (1,1), (1,2), (2,1)
        let f3 = factor_yn_minus_1(3).unwrap();
        let quadratic = f3.factors()[1].clone();
        let cases = vec![(xm1(), 1u32), (xm1(), 2), (quadratic, 1)];
        for (f, k) in cases {
            let ctx = ChainRingCtx::new(&f, k).unwrap();
            let deg = ctx.degree();
            let total = 4usize.pow(deg as u32);
            let mut seen = std::collections::BTreeSet::new();
            for code in 0..total {
                let coeffs: Vec<i64> = (0..deg).map(|i| ((code >> (2 * i)) & 3) as i64).collect();
                let elem = Z4Poly::from_coeffs(coeffs);
                let digits = ctx.f_adic_expand(&elem).unwrap();
                assert_eq!(ctx.reconstruct(&digits).unwrap(), elem);
                assert!(seen.insert(digits), "digit collision for {elem}");
            }
            assert_eq!(seen.len(), total);
        }
    }

    #[test]
    fn expansion_round_trips_on_random_elements_of_a_big_ring() {
        let f7 = factor_yn_minus_1(7).unwrap();
        let cubic = f7.factors()[1].clone();
        let ctx = ChainRingCtx::new(&cubic, 1).unwrap();
        let mut rng = SplitMix::new(3);
        for _ in 0..1000 {
            let elem = Z4Poly::from_coeffs((0..ctx.degree()).map(|_| rng.below(4) as i64));
            let digits = ctx.f_adic_expand(&elem).unwrap();
            assert_eq!(ctx.reconstruct(&digits).unwrap(), ctx.reduce(&elem));
            assert!(digits
                .iter()
                .all(|d| d.degree().is_none_or(|x| x < ctx.d())));
        }
    }

    #[test]
    fn ideal_sizes() {
        let ctx = ChainRingCtx::new(&xm1(), 1).unwrap();
        assert_eq!(ctx.ideal_size(0).unwrap(), BigUint::from(16u32));
        assert_eq!(ctx.ideal_size(4).unwrap(), BigUint::from(1u32));
        assert!(ctx.ideal_size(5).is_err());
        let f = Z4Poly::from_coeffs([3, 1, 2, 1]);
        let ctx3 = ChainRingCtx::new(&f, 1).unwrap();
        assert_eq!(ctx3.ideal_size(2).unwrap(), BigUint::from(64u32));
    }
}
