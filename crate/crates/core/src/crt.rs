//! Ambient quotient rings and their orthogonal idempotent decomposition.
//!
//! For odd `n` and `k >= 1` the ambient is `Z4[x]/<x^(2^k n)+1>`; the
//! factorization `y^n - 1 = f_1 ... f_r` yields idempotents
//! `theta_j(x) = a_j(-x^(2^k)) F_j(-x^(2^k))` summing to 1, pairwise
//! orthogonal, and splitting the ambient into local components isomorphic
//! to the chain rings of `chain`. With `k = 0` the ambient is
//! `Z4[x]/<x^n - 1>` and the same Bezout data yields the idempotents
//! `e_j(x) = a_j(x) F_j(x)` for the cyclic decomposition.

use crate::chain::ChainRingCtx;
use crate::error::{Error, Result};
use crate::factor::{factor_yn_minus_1, FactorSet};
use crate::upair::UPair;
use crate::z4poly::{bezout_coprime_z4, Z4Poly};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct AmbientCtx {
    n: u64,
    k: u32,
    modulus: Z4Poly,
    factors: FactorSet,
    idempotents: Vec<Z4Poly>,
    /// Local chain rings, one per factor; empty when `k = 0` (the local
    /// rings are then the Galois rings `Z4[x]/<f_j>`).
    chains: Vec<Arc<ChainRingCtx>>,
}

impl AmbientCtx {
    /// Builds the ambient ring and verifies every idempotent identity
    /// exactly: the sum is 1, each is its own square, and distinct ones
    /// multiply to zero.
    pub fn new(n: u64, k: u32) -> Result<AmbientCtx> {
        let factors = factor_yn_minus_1(n)?;
        let degree = if k >= 1 {
            (1usize << k) * n as usize
        } else {
            n as usize
        };
        let modulus = if k >= 1 {
            Z4Poly::monomial(1, degree).add(&Z4Poly::one())
        } else {
            Z4Poly::monomial(1, degree).add(&Z4Poly::constant(-1))
        };
        if k >= 1 {
            // x^(2^k n) + 1 = -(product of the substituted factors)
            let mut prod = Z4Poly::one();
            for f in factors.factors() {
                prod = prod.mul(&f.substitute_neg_x2k(k));
            }
            if prod.neg() != modulus {
                return Err(Error::Internal(
                    "substituted factors do not multiply to the ambient modulus".into(),
                ));
            }
        }
        let target = Z4Poly::monomial(1, n as usize).add(&Z4Poly::constant(-1));
        let mut idempotents = Vec::with_capacity(factors.r());
        for f in factors.factors() {
            let cofactor = target.exact_div(f)?;
            let (a, _b) = bezout_coprime_z4(&cofactor, f)?;
            let idem = if k >= 1 {
                a.substitute_neg_x2k(k)
                    .mul(&cofactor.substitute_neg_x2k(k))
                    .rem(&modulus)?
            } else {
                a.mul(&cofactor).rem(&modulus)?
            };
            idempotents.push(idem);
        }
        let mut sum = Z4Poly::zero();
        for e in &idempotents {
            sum = sum.add(e);
        }
        if sum != Z4Poly::one() {
            return Err(Error::Internal("idempotents do not sum to 1".into()));
        }
        for (i, ei) in idempotents.iter().enumerate() {
            for (j, ej) in idempotents.iter().enumerate() {
                let prod = ei.mul(ej).rem(&modulus)?;
                let expected = if i == j { ei.clone() } else { Z4Poly::zero() };
                if prod != expected {
                    return Err(Error::Internal(format!(
                        "idempotent orthogonality failed at ({i},{j})"
                    )));
                }
            }
        }
        let chains = if k >= 1 {
            factors
                .factors()
                .iter()
                .map(|f| ChainRingCtx::new(f, k).map(Arc::new))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        Ok(AmbientCtx {
            n,
            k,
            modulus,
            factors,
            idempotents,
            chains,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &Z4Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn factors(&self) -> &FactorSet {
        &self.factors
    }

    pub fn idempotents(&self) -> &[Z4Poly] {
        &self.idempotents
    }

    pub fn chains(&self) -> &[Arc<ChainRingCtx>] {
        &self.chains
    }

    /// Modulus of the j-th local ring (0-based): the chain-ring modulus for
    /// `k >= 1`, the factor itself for `k = 0`.
    pub fn local_modulus(&self, j: usize) -> &Z4Poly {
        if self.k >= 1 {
            self.chains[j].modulus()
        } else {
            &self.factors.factors()[j]
        }
    }

    /// Maps per-factor local generators into the ambient: each generator of
    /// the j-th component is multiplied by the j-th idempotent. The code
    /// spanned by the result is the direct sum of the local ideals, so its
    /// cardinality is the product of theirs.
    pub fn assemble(&self, local_gens: &[Vec<UPair>]) -> Result<Vec<UPair>> {
        if local_gens.len() != self.factors.r() {
            return Err(Error::OutOfRange(format!(
                "expected {} generator groups, got {}",
                self.factors.r(),
                local_gens.len()
            )));
        }
        let mut out = Vec::new();
        for (idem, gens) in self.idempotents.iter().zip(local_gens.iter()) {
            for g in gens {
                let lifted = g.mul_poly(idem, &self.modulus)?;
                out.push(lifted);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::span_upairs;
    use crate::testutil::SplitMix;
    use num_bigint::BigUint;
    use num_traits::One;

    #[test]
    fn single_factor_idempotent_is_one() {
        for k in [1u32, 2, 3] {
            let amb = AmbientCtx::new(1, k).unwrap();
            assert_eq!(amb.idempotents(), &[Z4Poly::one()]);
        }
    }

    #[test]
    fn length_14_idempotents_match_known_values() {
        let amb = AmbientCtx::new(7, 1).unwrap();
        let theta1 = Z4Poly::from_coeffs([3, 0, 1, 0, 3, 0, 1, 0, 3, 0, 1, 0, 3]);
        let theta2 = Z4Poly::from_coeffs([1, 0, 1, 0, 3, 0, 2, 0, 3, 0, 2, 0, 2]);
        let theta3 = Z4Poly::from_coeffs([1, 0, 2, 0, 2, 0, 1, 0, 2, 0, 1, 0, 3]);
        assert_eq!(amb.idempotents(), &[theta1, theta2, theta3]);
    }

    #[test]
    fn assemble_zero_and_unit() {
        let amb = AmbientCtx::new(3, 1).unwrap();
        let zero = amb.assemble(&[vec![], vec![]]).unwrap();
        assert!(zero.is_empty());
        assert_eq!(
            span_upairs(amb.modulus(), &zero).unwrap().cardinality(),
            BigUint::one()
        );
        let unit = amb
            .assemble(&[
                vec![UPair::new(Z4Poly::one(), Z4Poly::zero())],
                vec![UPair::new(Z4Poly::one(), Z4Poly::zero())],
            ])
            .unwrap();
        let full = span_upairs(amb.modulus(), &unit).unwrap();
        // 16^(2n) with 2n = 6
        assert_eq!(full.cardinality(), BigUint::from(16u64).pow(6));
    }

    #[test]
    fn assemble_u_ideal_at_length_two() {
        let amb = AmbientCtx::new(1, 1).unwrap();
        let gens = amb
            .assemble(&[vec![UPair::new(Z4Poly::zero(), Z4Poly::one())]])
            .unwrap();
        let code = span_upairs(amb.modulus(), &gens).unwrap();
        assert_eq!(code.cardinality(), BigUint::from(16u32));
    }

    #[test]
    fn idempotent_multiplication_is_a_ring_map_into_the_component() {
        let amb = AmbientCtx::new(7, 1).unwrap();
        let mut rng = SplitMix::new(21);
        let m = amb.modulus();
        for j in 0..amb.factors().r() {
            let theta = &amb.idempotents()[j];
            let local_mod = amb.local_modulus(j);
            let ld = local_mod.degree().unwrap();
            for _ in 0..50 {
                let g = UPair::new(
                    Z4Poly::from_coeffs((0..ld).map(|_| rng.below(4) as i64)),
                    Z4Poly::from_coeffs((0..ld).map(|_| rng.below(4) as i64)),
                );
                let h = UPair::new(
                    Z4Poly::from_coeffs((0..ld).map(|_| rng.below(4) as i64)),
                    Z4Poly::from_coeffs((0..ld).map(|_| rng.below(4) as i64)),
                );
                let gh = g.mul(&h, local_mod).unwrap();
                let lhs = gh.mul_poly(theta, m).unwrap();
                let rhs = g
                    .mul_poly(theta, m)
                    .unwrap()
                    .mul(&h.mul_poly(theta, m).unwrap(), m)
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn cyclic_mode_idempotents() {
        let amb = AmbientCtx::new(7, 0).unwrap();
        assert_eq!(amb.degree(), 7);
        assert_eq!(
            amb.modulus(),
            &Z4Poly::from_coeffs([3, 0, 0, 0, 0, 0, 0, 1])
        );
        assert_eq!(amb.idempotents().len(), 3);
    }
}
