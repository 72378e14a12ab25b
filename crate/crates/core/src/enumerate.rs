//! Enumeration and counting of the ideals of the local rings `R_j + uR_j`,
//! of negacyclic codes of length `2^k n`, and of cyclic codes of odd
//! length over Z4 + uZ4.
//!
//! Every ideal of a local ring falls into one of five families:
//!
//! * I    `<f b(x) + u>` with digits of `b` running over positions
//!   `2^k-1 .. 2^(k+1)-2`;
//! * II   `<f^(lambda+1) b(x) + u f^lambda>` for `1 <= lambda <= nu-1`
//!   (the empty digit range at `lambda = nu-1` degenerates to
//!   `<u f^(nu-1)>`);
//! * III  `<f^lambda>` for `0 <= lambda <= nu`;
//! * IV   `<f b(x) + u, f^t>` for `1 <= t <= nu-1` (`t = 1` is `<u, f>`);
//! * V    `<f^(lambda+1) b(x) + u f^lambda, f^(lambda+t)>` for
//!   `1 <= lambda <= nu-2`, `1 <= t <= nu-lambda-1` (`t = 1` is the
//!   two-generator form `<u f^lambda, f^(lambda+1)>`).
//!
//! The count is `N = sum_{i=0}^{2^k} (1+4i) 2^((2^k - i) d)` per factor and
//! multiplies across factors. Counts are exact big integers throughout.

use crate::chain::ChainRingCtx;
use crate::crt::AmbientCtx;
use crate::error::{Error, Result};
use crate::factor::{cyclotomic_cosets, factor_yn_minus_1};
use crate::upair::UPair;
use crate::z4poly::{F2Poly, Z4Poly};
use itertools::Itertools;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum IdealCase {
    I,
    II,
    III,
    IV,
    V,
}

impl IdealCase {
    pub const ALL: [IdealCase; 5] = [
        IdealCase::I,
        IdealCase::II,
        IdealCase::III,
        IdealCase::IV,
        IdealCase::V,
    ];

    pub fn parse(s: &str) -> Result<IdealCase> {
        match s {
            "I" => Ok(IdealCase::I),
            "II" => Ok(IdealCase::II),
            "III" => Ok(IdealCase::III),
            "IV" => Ok(IdealCase::IV),
            "V" => Ok(IdealCase::V),
            _ => Err(Error::Parse(format!("unknown case {s:?}"))),
        }
    }
}

impl fmt::Display for IdealCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdealCase::I => "I",
            IdealCase::II => "II",
            IdealCase::III => "III",
            IdealCase::IV => "IV",
            IdealCase::V => "V",
        };
        write!(f, "{s}")
    }
}

/// One parameter family of ideals sharing case, lambda, t and digit range.
#[derive(Clone, Debug)]
struct Family {
    case: IdealCase,
    lambda: Option<u32>,
    t: Option<u32>,
    digit_start: u32,
    digit_count: u32,
    size_log2: u64,
}

fn families(nu: u32, d: u32) -> Vec<Family> {
    let d64 = d as u64;
    let nu64 = nu as u64;
    let mut fams = Vec::new();
    fams.push(Family {
        case: IdealCase::I,
        lambda: None,
        t: None,
        digit_start: nu / 2 - 1,
        digit_count: nu / 2,
        size_log2: d64 * nu64,
    });
    for lambda in 1..=nu - 1 {
        let rest = nu - lambda;
        fams.push(Family {
            case: IdealCase::II,
            lambda: Some(lambda),
            t: None,
            digit_start: rest.div_ceil(2) - 1,
            digit_count: rest / 2,
            size_log2: d64 * (rest as u64),
        });
    }
    for lambda in 0..=nu {
        fams.push(Family {
            case: IdealCase::III,
            lambda: Some(lambda),
            t: None,
            digit_start: 0,
            digit_count: 0,
            size_log2: 2 * d64 * ((nu - lambda) as u64),
        });
    }
    for t in 1..=nu - 1 {
        fams.push(Family {
            case: IdealCase::IV,
            lambda: None,
            t: Some(t),
            digit_start: t.div_ceil(2) - 1,
            digit_count: t / 2,
            size_log2: d64 * ((2 * nu - t) as u64),
        });
    }
    for lambda in 1..=nu - 2 {
        for t in 1..=nu - lambda - 1 {
            fams.push(Family {
                case: IdealCase::V,
                lambda: Some(lambda),
                t: Some(t),
                digit_start: t.div_ceil(2) - 1,
                digit_count: t / 2,
                size_log2: d64 * ((2 * nu - 2 * lambda - t) as u64),
            });
        }
    }
    fams
}

/// Digit index in `0..2^d` to the 0/1 polynomial whose coefficient tuple
/// `(c_0, .., c_(d-1))` sorts lexicographically with the index.
fn digit_poly(index: u64, d: u32) -> F2Poly {
    F2Poly::from_coeffs((0..d).map(|i| ((index >> (d - 1 - i)) & 1) as i64))
}

/// Symbolic description of one ideal of `R_j + uR_j`, together with its
/// derived generators and exact cardinality.
#[derive(Clone, Debug)]
pub struct IdealSpec {
    pub j: usize,
    pub case: IdealCase,
    pub lambda: Option<u32>,
    pub t: Option<u32>,
    /// Digit polynomials of `b(x)` keyed by their exponent position; the
    /// keys cover exactly the range the case prescribes.
    pub digits: Vec<(u32, F2Poly)>,
    pub generators: Vec<UPair>,
    pub size_log2: u64,
}

impl IdealSpec {
    pub fn size(&self) -> BigUint {
        BigUint::one() << usize::try_from(self.size_log2).expect("size exponent fits usize")
    }

    fn json_choice(&self, d: usize) -> serde_json::Value {
        let mut b = serde_json::Map::new();
        for (pos, digit) in &self.digits {
            let coeffs: Vec<serde_json::Value> = digit
                .coeff_vec(d)
                .iter()
                .map(|&c| serde_json::Value::from(c))
                .collect();
            b.insert(pos.to_string(), serde_json::Value::Array(coeffs));
        }
        serde_json::json!({
            "j": self.j,
            "case": self.case.to_string(),
            "lambda": self.lambda,
            "t": self.t,
            "b": b,
            "size": self.size().to_string(),
        })
    }
}

fn build_spec(
    ctx: &ChainRingCtx,
    j: usize,
    fam: &Family,
    digit_indices: impl Iterator<Item = u64>,
) -> IdealSpec {
    let d = ctx.d() as u32;
    let digits: Vec<(u32, F2Poly)> = digit_indices
        .enumerate()
        .map(|(off, idx)| (fam.digit_start + off as u32, digit_poly(idx, d)))
        .collect();
    let mut b = Z4Poly::zero();
    for (pos, digit) in &digits {
        b = b.add(&ctx.mul(&digit.lift(), ctx.f_power(*pos)));
    }
    let generators = match fam.case {
        IdealCase::I => vec![UPair::new(ctx.mul(ctx.f_power(1), &b), Z4Poly::one())],
        IdealCase::II => {
            let lambda = fam.lambda.unwrap();
            vec![UPair::new(
                ctx.mul(ctx.f_power(lambda + 1), &b),
                ctx.f_power(lambda).clone(),
            )]
        }
        IdealCase::III => {
            let lambda = fam.lambda.unwrap();
            vec![UPair::new(ctx.f_power(lambda).clone(), Z4Poly::zero())]
        }
        IdealCase::IV => {
            let t = fam.t.unwrap();
            vec![
                UPair::new(ctx.mul(ctx.f_power(1), &b), Z4Poly::one()),
                UPair::new(ctx.f_power(t).clone(), Z4Poly::zero()),
            ]
        }
        IdealCase::V => {
            let lambda = fam.lambda.unwrap();
            let t = fam.t.unwrap();
            vec![
                UPair::new(
                    ctx.mul(ctx.f_power(lambda + 1), &b),
                    ctx.f_power(lambda).clone(),
                ),
                UPair::new(ctx.f_power(lambda + t).clone(), Z4Poly::zero()),
            ]
        }
    };
    IdealSpec {
        j,
        case: fam.case,
        lambda: fam.lambda,
        t: fam.t,
        digits,
        generators,
        size_log2: fam.size_log2,
    }
}

/// Rebuilds an ideal from its symbolic description, validating the
/// parameter and digit ranges against the case rules.
pub fn build_ideal_spec(
    ctx: &ChainRingCtx,
    j: usize,
    case: IdealCase,
    lambda: Option<u32>,
    t: Option<u32>,
    digits: &BTreeMap<u32, F2Poly>,
) -> Result<IdealSpec> {
    let nu = ctx.nu();
    let d = ctx.d() as u32;
    let fam = families(nu, d)
        .into_iter()
        .find(|f| f.case == case && f.lambda == lambda && f.t == t)
        .ok_or_else(|| {
            Error::OutOfRange(format!(
                "no ideal family matches case {case}, lambda {lambda:?}, t {t:?}"
            ))
        })?;
    let expected: Vec<u32> = (fam.digit_start..fam.digit_start + fam.digit_count).collect();
    let got: Vec<u32> = digits.keys().copied().collect();
    if expected != got {
        return Err(Error::OutOfRange(format!(
            "digit positions {got:?} do not match the case range {expected:?}"
        )));
    }
    for digit in digits.values() {
        if digit.degree().is_some_and(|deg| deg >= d as usize) {
            return Err(Error::OutOfRange(
                "digit degree exceeds the factor degree".into(),
            ));
        }
    }
    let indices: Vec<u64> = expected
        .iter()
        .map(|pos| {
            let digit = &digits[pos];
            (0..d).fold(0u64, |acc, i| (acc << 1) | digit.coeff(i as usize) as u64)
        })
        .collect();
    Ok(build_spec(ctx, j, &fam, indices.into_iter()))
}

/// Streams every ideal of `R_j + uR_j` exactly once: cases in order, then
/// lambda, then t, then digit tuples lexicographically.
#[derive(Clone)]
pub struct LocalIdealIter {
    ctx: Arc<ChainRingCtx>,
    j: usize,
    families: Arc<Vec<Family>>,
    fam_idx: usize,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for LocalIdealIter {
    type Item = IdealSpec;

    fn next(&mut self) -> Option<IdealSpec> {
        if self.done {
            return None;
        }
        let fam = &self.families[self.fam_idx];
        let spec = build_spec(&self.ctx, self.j, fam, self.digits.iter().copied());
        // odometer: last digit fastest
        let top = 1u64 << self.ctx.d();
        let mut pos = self.digits.len();
        loop {
            if pos == 0 {
                self.fam_idx += 1;
                if self.fam_idx == self.families.len() {
                    self.done = true;
                } else {
                    let count = self.families[self.fam_idx].digit_count as usize;
                    self.digits = vec![0; count];
                }
                break;
            }
            pos -= 1;
            self.digits[pos] += 1;
            if self.digits[pos] < top {
                break;
            }
            self.digits[pos] = 0;
        }
        Some(spec)
    }
}

/// All ideals of the local ring, in deterministic order; `j` is the
/// 1-based factor index recorded in each spec.
pub fn local_ideals(ctx: &Arc<ChainRingCtx>, j: usize) -> LocalIdealIter {
    let fams = families(ctx.nu(), ctx.d() as u32);
    let first_count = fams[0].digit_count as usize;
    LocalIdealIter {
        ctx: ctx.clone(),
        j,
        families: Arc::new(fams),
        fam_idx: 0,
        digits: vec![0; first_count],
        done: false,
    }
}

/// `N = sum_{i=0}^{2^k} (1+4i) 2^((2^k - i) d)`: the number of ideals of
/// one local ring with factor degree `d` and length exponent `k >= 1`.
pub fn count_local_ideals(d: u32, k: u32) -> BigUint {
    let half = 1u64 << k;
    let mut total = BigUint::zero();
    for i in 0..=half {
        let coeff = BigUint::from(1 + 4 * i);
        total += coeff << usize::try_from((half - i) * d as u64).unwrap();
    }
    total
}

/// Closed form for the same count: for `d >= 2` an exact fraction with
/// denominator `(2^d - 1)^2`, and `10*2^(2^k) - 2^(k+2) - 9` when `d = 1`.
pub fn count_local_ideals_closed(d: u32, k: u32) -> BigUint {
    let two = BigInt::from(2);
    if d == 1 {
        let val = BigInt::from(10) * two.pow(1 << k) - two.pow(k + 2) - BigInt::from(9);
        return val.to_biguint().expect("count is positive");
    }
    let p2d = two.pow(d);
    let numerator = (&p2d + BigInt::from(3)) * two.pow(((1u64 << k) + 1) as u32 * d)
        - &p2d * (two.pow(k + 2) + BigInt::from(5))
        + two.pow(k + 2)
        + BigInt::one();
    let denominator = (&p2d - BigInt::one()).pow(2);
    let (q, r) = (numerator.clone() / &denominator, numerator % &denominator);
    assert!(r.is_zero(), "closed form must divide exactly");
    q.to_biguint().expect("count is positive")
}

/// Per-case totals of the local ideal count, in case order I..V.
pub fn case_counts(d: u32, k: u32) -> Vec<BigUint> {
    let nu = 1u32 << (k + 1);
    let mut totals = vec![BigUint::zero(); 5];
    for fam in families(nu, d) {
        let idx = IdealCase::ALL.iter().position(|c| *c == fam.case).unwrap();
        totals[idx] += BigUint::one() << (fam.digit_count as usize * d as usize);
    }
    totals
}

/// Number of negacyclic codes of length `2^k n` over Z4 + uZ4: the product
/// of the per-factor counts, with the factor degrees given by the
/// 2-cyclotomic coset sizes.
pub fn count_negacyclic(n: u64, k: u32) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::OutOfRange("k must be at least 1".into()));
    }
    let cosets = cyclotomic_cosets(n)?;
    let mut total = BigUint::one();
    for coset in cosets {
        total *= count_local_ideals(coset.len() as u32, k);
    }
    Ok(total)
}

/// Number of cyclic codes of odd length `n` over Z4 + uZ4:
/// product over factors of `2^(d_j) + 5`.
pub fn count_cyclic_odd(n: u64) -> Result<BigUint> {
    let cosets = cyclotomic_cosets(n)?;
    let mut total = BigUint::one();
    for coset in cosets {
        total *= (BigUint::one() << coset.len()) + BigUint::from(5u32);
    }
    Ok(total)
}

/// The mass formula for length `2^k` claimed by an earlier classification:
/// `11*2^(2^k) + 2^(2^(k-1)-1)(5*2^k - 12) - ((2^k)^2 + 5*2^k + 4)`.
/// Evaluates the expression exactly; it overcounts, e.g. 24 instead of 23
/// at `k = 1`, because two entries of its length-2 table coincide.
pub fn bandi_formula(k: u32) -> BigUint {
    let two = BigInt::from(2);
    let p = 1u64 << k; // 2^k
    let val = BigInt::from(11) * two.pow(p as u32)
        + two.pow((p / 2 - 1) as u32) * (BigInt::from(5) * BigInt::from(p) - BigInt::from(12))
        - (BigInt::from(p) * BigInt::from(p) + BigInt::from(5) * BigInt::from(p) + BigInt::from(4));
    assert!(
        val.is_positive(),
        "the claimed count is positive for k >= 1"
    );
    val.to_biguint().unwrap()
}

/// Dougherty-Ling count of ideals of `GR(4,m)[z]/<z^(2^k) - 1>`, evaluated
/// from their published expression with exact rational arithmetic:
///
/// `5 + q^(2^(k-1)) + (5q - 1) q (q^(2^(k-1)-1) - 1)/(q-1)^2
///    - 4 (2^(k-1) - 1)/(q - 1)` with `q = 2^m`.
///
/// The partial fractions are not individually integral but the sum is.
pub fn dougherty_ling_count(m: u32, k: u32) -> BigUint {
    assert!(m >= 1 && k >= 1);
    let q = BigInt::from(2).pow(m);
    let e = 1u64 << (k - 1); // 2^(k-1)
    let rat = |v: BigInt| BigRational::from_integer(v);
    let q_rat = rat(q.clone());
    let term1 = rat(BigInt::from(5));
    let term2 = rat(q.pow(e as u32));
    let numer3 = (rat(BigInt::from(5)) * &q_rat - rat(BigInt::one()))
        * &q_rat
        * (rat(q.pow((e - 1) as u32)) - rat(BigInt::one()));
    let denom3 = (&q_rat - rat(BigInt::one())) * (&q_rat - rat(BigInt::one()));
    let term3 = numer3 / denom3;
    let term4 =
        rat(BigInt::from(4)) * rat(BigInt::from(e) - BigInt::one()) / (&q_rat - rat(BigInt::one()));
    let total = term1 + term2 + term3 - term4;
    assert!(total.is_integer(), "the ideal count is an integer");
    total.to_integer().to_biguint().expect("count is positive")
}

/// A full negacyclic code: one local ideal choice per factor.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    pub n: u64,
    pub k: u32,
    pub choice: Vec<IdealSpec>,
    pub total_size_log2: u64,
}

impl CodeSpec {
    pub fn total_size(&self) -> BigUint {
        BigUint::one() << usize::try_from(self.total_size_log2).expect("size exponent fits usize")
    }

    pub fn local_generators(&self) -> Vec<Vec<UPair>> {
        self.choice.iter().map(|c| c.generators.clone()).collect()
    }

    /// JSON-lines record; `degrees[j-1]` pads the digit vectors.
    pub fn to_json(&self, degrees: &[usize]) -> serde_json::Value {
        let choice: Vec<serde_json::Value> = self
            .choice
            .iter()
            .map(|c| c.json_choice(degrees[c.j - 1]))
            .collect();
        serde_json::json!({
            "n": self.n,
            "k": self.k,
            "choice": choice,
            "total_size": self.total_size().to_string(),
        })
    }
}

/// Streams every negacyclic code of length `2^k n` as a `CodeSpec`:
/// the Cartesian product of the per-factor ideal streams, the last factor
/// varying fastest.
pub fn enumerate_negacyclic(
    ambient: &AmbientCtx,
) -> Result<impl Iterator<Item = CodeSpec> + use<>> {
    if ambient.k() == 0 {
        return Err(Error::OutOfRange(
            "negacyclic enumeration needs k >= 1; use the cyclic stream for k = 0".into(),
        ));
    }
    let n = ambient.n();
    let k = ambient.k();
    let iters: Vec<LocalIdealIter> = ambient
        .chains()
        .iter()
        .enumerate()
        .map(|(idx, ctx)| local_ideals(ctx, idx + 1))
        .collect();
    Ok(iters
        .into_iter()
        .multi_cartesian_product()
        .map(move |choice| {
            let total_size_log2 = choice.iter().map(|c| c.size_log2).sum();
            CodeSpec {
                n,
                k,
                choice,
                total_size_log2,
            }
        }))
}

// ---------------------------------------------------------------------------
// Cyclic codes of odd length (the k = 0 ambient).
// ---------------------------------------------------------------------------

/// The ideals of `K_j + uK_j` for a Galois ring `K_j = Z4[x]/<f_j>`:
/// `<u^i>` (i = 0,1,2), `<2u^s>` (s = 0,1), `<u + 2h(x)>` for nonzero 0/1
/// polynomials `h` of degree below `d`, and `<u, 2>`; that is `2^d + 5`
/// ideals in all.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CyclicIdealKind {
    UnitPower(u32),
    TwoUPower(u32),
    UPlusTwoH(F2Poly),
    UAndTwo,
}

#[derive(Clone, Debug)]
pub struct CyclicIdealSpec {
    pub j: usize,
    pub kind: CyclicIdealKind,
    pub generators: Vec<UPair>,
    pub size_log2: u64,
}

impl CyclicIdealSpec {
    pub fn size(&self) -> BigUint {
        BigUint::one() << usize::try_from(self.size_log2).expect("size exponent fits usize")
    }

    fn json_choice(&self, d: usize) -> serde_json::Value {
        match &self.kind {
            CyclicIdealKind::UnitPower(i) => serde_json::json!({
                "j": self.j, "case": "I", "i": i, "size": self.size().to_string(),
            }),
            CyclicIdealKind::TwoUPower(s) => serde_json::json!({
                "j": self.j, "case": "II", "s": s, "size": self.size().to_string(),
            }),
            CyclicIdealKind::UPlusTwoH(h) => {
                let coeffs: Vec<serde_json::Value> = h
                    .coeff_vec(d)
                    .iter()
                    .map(|&c| serde_json::Value::from(c))
                    .collect();
                serde_json::json!({
                    "j": self.j, "case": "III", "h": coeffs, "size": self.size().to_string(),
                })
            }
            CyclicIdealKind::UAndTwo => serde_json::json!({
                "j": self.j, "case": "V", "size": self.size().to_string(),
            }),
        }
    }
}

/// Builds the generators and size for one cyclic local ideal.
pub fn build_cyclic_spec(f: &Z4Poly, j: usize, kind: CyclicIdealKind) -> Result<CyclicIdealSpec> {
    let d = f
        .degree()
        .ok_or_else(|| Error::Internal("factor of degree zero".into()))? as u64;
    let (generators, size_log2) = match &kind {
        CyclicIdealKind::UnitPower(i) => {
            if *i > 2 {
                return Err(Error::OutOfRange("u power exceeds 2".into()));
            }
            let gens = match i {
                0 => vec![UPair::new(Z4Poly::one(), Z4Poly::zero())],
                1 => vec![UPair::new(Z4Poly::zero(), Z4Poly::one())],
                _ => vec![],
            };
            (gens, 2 * d * (2 - *i as u64))
        }
        CyclicIdealKind::TwoUPower(s) => {
            if *s > 1 {
                return Err(Error::OutOfRange("2u power exceeds 1".into()));
            }
            let two = Z4Poly::from_coeffs([2]);
            let gens = match s {
                0 => vec![UPair::new(two, Z4Poly::zero())],
                _ => vec![UPair::new(Z4Poly::zero(), two)],
            };
            (gens, d * (2 - *s as u64))
        }
        CyclicIdealKind::UPlusTwoH(h) => {
            if h.is_zero() || h.degree().unwrap() as u64 >= d {
                return Err(Error::OutOfRange(
                    "h must be nonzero of degree below d".into(),
                ));
            }
            let gens = vec![UPair::new(h.lift().scale(2), Z4Poly::one())];
            (gens, 2 * d)
        }
        CyclicIdealKind::UAndTwo => {
            let gens = vec![
                UPair::new(Z4Poly::zero(), Z4Poly::one()),
                UPair::new(Z4Poly::from_coeffs([2]), Z4Poly::zero()),
            ];
            (gens, 3 * d)
        }
    };
    Ok(CyclicIdealSpec {
        j,
        kind,
        generators,
        size_log2,
    })
}

/// Streams the `2^d + 5` ideals of one cyclic local ring in deterministic
/// order: `<u^i>`, `<2u^s>`, `<u + 2h>` by digit order, `<u, 2>`.
#[derive(Clone)]
pub struct CyclicLocalIter {
    f: Arc<Z4Poly>,
    j: usize,
    pos: u64,
    total: u64,
}

impl Iterator for CyclicLocalIter {
    type Item = CyclicIdealSpec;

    fn next(&mut self) -> Option<CyclicIdealSpec> {
        if self.pos >= self.total {
            return None;
        }
        let d = self.f.degree().unwrap() as u32;
        let kind = match self.pos {
            0..=2 => CyclicIdealKind::UnitPower(self.pos as u32),
            3..=4 => CyclicIdealKind::TwoUPower(self.pos as u32 - 3),
            p if p < self.total - 1 => CyclicIdealKind::UPlusTwoH(digit_poly(p - 4, d)),
            _ => CyclicIdealKind::UAndTwo,
        };
        self.pos += 1;
        Some(build_cyclic_spec(&self.f, self.j, kind).expect("iterated kinds are valid"))
    }
}

pub fn cyclic_local_ideals(f: &Z4Poly, j: usize) -> CyclicLocalIter {
    let d = f.degree().expect("factor has positive degree");
    CyclicLocalIter {
        f: Arc::new(f.clone()),
        j,
        pos: 0,
        total: (1u64 << d) + 5,
    }
}

/// A full cyclic code of odd length: one local ideal choice per factor.
#[derive(Clone, Debug)]
pub struct CyclicCodeSpec {
    pub n: u64,
    pub choice: Vec<CyclicIdealSpec>,
    pub total_size_log2: u64,
}

impl CyclicCodeSpec {
    pub fn total_size(&self) -> BigUint {
        BigUint::one() << usize::try_from(self.total_size_log2).expect("size exponent fits usize")
    }

    pub fn local_generators(&self) -> Vec<Vec<UPair>> {
        self.choice.iter().map(|c| c.generators.clone()).collect()
    }

    pub fn to_json(&self, degrees: &[usize]) -> serde_json::Value {
        let choice: Vec<serde_json::Value> = self
            .choice
            .iter()
            .map(|c| c.json_choice(degrees[c.j - 1]))
            .collect();
        serde_json::json!({
            "n": self.n,
            "k": 0,
            "choice": choice,
            "total_size": self.total_size().to_string(),
        })
    }
}

/// Streams every cyclic code of odd length `n` over Z4 + uZ4.
pub fn enumerate_cyclic_odd(n: u64) -> Result<impl Iterator<Item = CyclicCodeSpec> + use<>> {
    let factors = factor_yn_minus_1(n)?;
    let iters: Vec<CyclicLocalIter> = factors
        .factors()
        .iter()
        .enumerate()
        .map(|(idx, f)| cyclic_local_ideals(f, idx + 1))
        .collect();
    Ok(iters
        .into_iter()
        .multi_cartesian_product()
        .map(move |choice| {
            let total_size_log2 = choice.iter().map(|c| c.size_log2).sum();
            CyclicCodeSpec {
                n,
                choice,
                total_size_log2,
            }
        }))
}

/// The substitution `x -> -x` on generators: negating the odd-position
/// coefficients carries ideals of the `x^n - 1` ambient to ideals of the
/// `x^n + 1` ambient (n odd) and preserves Lee and Hamming weights.
pub fn rho_transform(gens: &[UPair]) -> Vec<UPair> {
    gens.iter().map(|g| g.negate_odd()).collect()
}

// ---------------------------------------------------------------------------
// Parsing of CodeSpec JSON records (the CLI file format).
// ---------------------------------------------------------------------------

/// A parsed record plus the generators it denotes in its ambient ring.
pub struct RealizedCodeSpec {
    pub ambient: AmbientCtx,
    pub generators: Vec<UPair>,
    pub total_size: BigUint,
}

fn parse_u64(v: &serde_json::Value, field: &str) -> Result<u64> {
    v.get(field)
        .and_then(|x| x.as_u64())
        .ok_or_else(|| Error::Parse(format!("missing integer field {field:?}")))
}

fn parse_digit_list(v: &serde_json::Value) -> Result<F2Poly> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse("digit must be a 0/1 array".into()))?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for x in arr {
        match x.as_u64() {
            Some(b @ (0 | 1)) => coeffs.push(b as i64),
            _ => return Err(Error::Parse("digit entries must be 0 or 1".into())),
        }
    }
    Ok(F2Poly::from_coeffs(coeffs))
}

/// Parses a JSON record as emitted by the enumeration streams and rebuilds
/// the ambient ring and the generator set of the code it denotes.
pub fn realize_code_spec(v: &serde_json::Value) -> Result<RealizedCodeSpec> {
    let n = parse_u64(v, "n")?;
    let k = parse_u64(v, "k")? as u32;
    let ambient = AmbientCtx::new(n, k)?;
    let r = ambient.factors().r();
    let choices = v
        .get("choice")
        .and_then(|c| c.as_array())
        .ok_or_else(|| Error::Parse("missing choice array".into()))?;
    if choices.len() != r {
        return Err(Error::Parse(format!(
            "expected {r} choices for n={n}, got {}",
            choices.len()
        )));
    }
    let mut locals: Vec<Vec<UPair>> = Vec::with_capacity(r);
    let mut total_log2 = 0u64;
    for (idx, choice) in choices.iter().enumerate() {
        let j = parse_u64(choice, "j")? as usize;
        if j != idx + 1 {
            return Err(Error::Parse(format!(
                "choices must be ordered by factor; expected j={} got j={j}",
                idx + 1
            )));
        }
        let case_str = choice
            .get("case")
            .and_then(|c| c.as_str())
            .ok_or_else(|| Error::Parse("missing case".into()))?;
        if k >= 1 {
            let case = IdealCase::parse(case_str)?;
            let lambda = choice
                .get("lambda")
                .and_then(|x| x.as_u64())
                .map(|x| x as u32);
            let t = choice.get("t").and_then(|x| x.as_u64()).map(|x| x as u32);
            let mut digits = BTreeMap::new();
            if let Some(map) = choice.get("b").and_then(|b| b.as_object()) {
                for (key, val) in map {
                    let pos: u32 = key
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad digit position {key:?}")))?;
                    digits.insert(pos, parse_digit_list(val)?);
                }
            }
            let spec = build_ideal_spec(&ambient.chains()[idx], j, case, lambda, t, &digits)?;
            total_log2 += spec.size_log2;
            locals.push(spec.generators);
        } else {
            let f = &ambient.factors().factors()[idx];
            let kind = match case_str {
                "I" => CyclicIdealKind::UnitPower(parse_u64(choice, "i")? as u32),
                "II" => CyclicIdealKind::TwoUPower(parse_u64(choice, "s")? as u32),
                "III" => {
                    let h = choice
                        .get("h")
                        .ok_or_else(|| Error::Parse("case III needs h".into()))?;
                    CyclicIdealKind::UPlusTwoH(parse_digit_list(h)?)
                }
                "V" => CyclicIdealKind::UAndTwo,
                _ => return Err(Error::Parse(format!("unknown cyclic case {case_str:?}"))),
            };
            let spec = build_cyclic_spec(f, j, kind)?;
            total_log2 += spec.size_log2;
            locals.push(spec.generators);
        }
    }
    let generators = ambient.assemble(&locals)?;
    Ok(RealizedCodeSpec {
        ambient,
        generators,
        total_size: BigUint::one() << usize::try_from(total_log2).unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::span_upairs;
    use num_traits::ToPrimitive;
    use std::collections::BTreeSet;

    fn chain_ctx(f: &[i64], k: u32) -> Arc<ChainRingCtx> {
        Arc::new(ChainRingCtx::new(&Z4Poly::from_coeffs(f.iter().copied()), k).unwrap())
    }

    #[test]
    fn local_counts_match_known_values() {
        assert_eq!(count_local_ideals(1, 1), BigUint::from(23u32));
        assert_eq!(count_local_ideals(3, 1), BigUint::from(113u32));
        assert_eq!(count_local_ideals(1, 2), BigUint::from(135u32));
        assert_eq!(count_local_ideals(4, 1), BigUint::from(345u32));
        assert_eq!(count_local_ideals(1, 5), BigUint::from(42949672823u64));
        assert_eq!(
            count_local_ideals(1, 6),
            "184467440737095515895".parse().unwrap()
        );
    }

    #[test]
    fn summation_and_closed_form_agree() {
        for d in 1..=12u32 {
            for k in 1..=6u32 {
                assert_eq!(
                    count_local_ideals(d, k),
                    count_local_ideals_closed(d, k),
                    "d={d} k={k}"
                );
            }
        }
    }

    #[test]
    fn stream_length_equals_count() {
        // (d, k) grid kept within feasible stream sizes; the family
        // decomposition itself is checked against the count on the full
        // grid below
        let f7 = crate::factor::factor_yn_minus_1(7).unwrap();
        let cubic: Vec<i64> = f7.factors()[1].coeffs().iter().map(|&c| c as i64).collect();
        let f3 = crate::factor::factor_yn_minus_1(3).unwrap();
        let quad: Vec<i64> = f3.factors()[1].coeffs().iter().map(|&c| c as i64).collect();
        let f5 = crate::factor::factor_yn_minus_1(5).unwrap();
        let quartic: Vec<i64> = f5.factors()[1].coeffs().iter().map(|&c| c as i64).collect();
        let cases: Vec<(Vec<i64>, u32)> = vec![
            (vec![3, 1], 1),
            (vec![3, 1], 2),
            (vec![3, 1], 3),
            (quad.clone(), 1),
            (quad.clone(), 2),
            (quad, 3),
            (cubic.clone(), 1),
            (cubic, 2),
            (quartic.clone(), 1),
            (quartic, 2),
        ];
        for (f, k) in cases {
            let ctx = chain_ctx(&f, k);
            let d = ctx.d() as u32;
            let count = local_ideals(&ctx, 1).count();
            assert_eq!(
                BigUint::from(count as u64),
                count_local_ideals(d, k),
                "d={d} k={k}"
            );
        }
    }

    #[test]
    fn family_decomposition_sums_to_count_on_full_grid() {
        for d in 1..=4u32 {
            for k in 1..=3u32 {
                let total: BigUint = case_counts(d, k).into_iter().sum();
                assert_eq!(total, count_local_ideals(d, k), "d={d} k={k}");
            }
        }
    }

    #[test]
    fn case_counts_for_known_examples() {
        let to_u32 =
            |v: Vec<BigUint>| -> Vec<u64> { v.iter().map(|x| x.to_u64().unwrap()).collect() };
        assert_eq!(to_u32(case_counts(1, 1)), vec![4, 5, 5, 5, 4]);
        assert_eq!(to_u32(case_counts(3, 1)), vec![64, 17, 5, 17, 10]);
        assert_eq!(to_u32(case_counts(1, 2)), vec![16, 29, 9, 29, 52]);
    }

    #[test]
    fn negacyclic_counts_match_the_length_2n_table() {
        let expected: Vec<(u64, &str)> = vec![
            (3, "1035"),
            (5, "7935"),
            (7, "293687"),
            (9, "4579875"),
            (11, "24235215"),
            (13, "386347215"),
            (15, "42500851875"),
            (17, "102708354375"),
            (19, "1580578111695"),
            (21, "258775875646875"),
        ];
        for (n, want) in expected {
            assert_eq!(
                count_negacyclic(n, 1).unwrap(),
                want.parse::<BigUint>().unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn dougherty_ling_matches_the_local_count() {
        assert_eq!(dougherty_ling_count(1, 2), BigUint::from(23u32));
        assert_eq!(dougherty_ling_count(3, 2), BigUint::from(113u32));
        for m in 1..=4u32 {
            for k in 2..=5u32 {
                assert_eq!(
                    dougherty_ling_count(m, k),
                    count_local_ideals(m, k - 1),
                    "m={m} k={k}"
                );
            }
            // k = 1 degenerates to the cyclic local count 2^m + 5
            assert_eq!(
                dougherty_ling_count(m, 1),
                (BigUint::one() << m as usize) + BigUint::from(5u32)
            );
        }
    }

    #[test]
    fn bandi_formula_reproduces_the_claimed_values() {
        assert_eq!(bandi_formula(1), BigUint::from(24u32));
        assert_eq!(bandi_formula(2), BigUint::from(152u32));
        // both strictly exceed the verified counts
        assert!(bandi_formula(1) > count_local_ideals(1, 1));
        assert!(bandi_formula(2) > count_local_ideals(1, 2));
    }

    #[test]
    fn enumerated_ideals_are_pairwise_distinct_modules() {
        for (f, k) in [(vec![3i64, 1], 1u32), (vec![3, 1], 2)] {
            let ctx = chain_ctx(&f, k);
            let mut seen = BTreeSet::new();
            for spec in local_ideals(&ctx, 1) {
                let module = span_upairs(ctx.modulus(), &spec.generators).unwrap();
                assert_eq!(module.cardinality(), spec.size(), "case {}", spec.case);
                assert!(
                    seen.insert(module),
                    "duplicate module in case {}",
                    spec.case
                );
            }
        }
        // cubic factor at k = 1: distinctness of all 113
        let f7 = crate::factor::factor_yn_minus_1(7).unwrap();
        let ctx = Arc::new(ChainRingCtx::new(&f7.factors()[1], 1).unwrap());
        let mut seen = BTreeSet::new();
        for spec in local_ideals(&ctx, 1) {
            let module = span_upairs(ctx.modulus(), &spec.generators).unwrap();
            assert!(seen.insert(module));
        }
        assert_eq!(seen.len(), 113);
    }

    #[test]
    fn cyclic_local_streams() {
        let f1 = Z4Poly::from_coeffs([3, 1]);
        let ideals: Vec<_> = cyclic_local_ideals(&f1, 1).collect();
        assert_eq!(ideals.len(), 7);
        let mut sizes: Vec<u64> = ideals.iter().map(|i| i.size().to_u64().unwrap()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 4, 4, 4, 8, 16]);

        let f7 = crate::factor::factor_yn_minus_1(7).unwrap();
        let cubic = &f7.factors()[1];
        assert_eq!(cyclic_local_ideals(cubic, 1).count(), 13);
    }

    #[test]
    fn cyclic_stream_length_matches_count_and_refutes_prior_claim() {
        let total = enumerate_cyclic_odd(7).unwrap().count();
        assert_eq!(total, 1183);
        assert_eq!(count_cyclic_odd(7).unwrap(), BigUint::from(1183u32));
        assert_ne!(total, 343); // 7^3 is the withdrawn claim
        assert_eq!(count_cyclic_odd(1).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn rho_negates_odd_positions() {
        let c = UPair::new(Z4Poly::from_coeffs([1]), Z4Poly::zero());
        assert_eq!(rho_transform(std::slice::from_ref(&c)), vec![c]);
        let x = UPair::new(Z4Poly::from_coeffs([0, 1]), Z4Poly::zero());
        assert_eq!(
            rho_transform(&[x]),
            vec![UPair::new(Z4Poly::from_coeffs([0, 3]), Z4Poly::zero())]
        );
    }

    #[test]
    fn enumeration_round_trips_through_json() {
        let ambient = AmbientCtx::new(3, 1).unwrap();
        let degrees = ambient.factors().degrees();
        for spec in enumerate_negacyclic(&ambient).unwrap().take(50) {
            let json = spec.to_json(&degrees);
            let realized = realize_code_spec(&json).unwrap();
            assert_eq!(realized.total_size, spec.total_size());
            let direct = ambient.assemble(&spec.local_generators()).unwrap();
            assert_eq!(realized.generators, direct);
        }
    }

    #[test]
    fn cyclic_records_round_trip_through_json() {
        let ambient = AmbientCtx::new(3, 0).unwrap();
        let degrees = ambient.factors().degrees();
        for spec in enumerate_cyclic_odd(3).unwrap() {
            let json = spec.to_json(&degrees);
            let realized = realize_code_spec(&json).unwrap();
            assert_eq!(realized.total_size, spec.total_size());
            let direct = ambient.assemble(&spec.local_generators()).unwrap();
            assert_eq!(realized.generators, direct);
        }
    }

    #[test]
    fn streams_restart_from_any_index() {
        let ambient = AmbientCtx::new(7, 1).unwrap();
        let prefix: Vec<serde_json::Value> = enumerate_negacyclic(&ambient)
            .unwrap()
            .take(1205)
            .map(|c| c.to_json(&ambient.factors().degrees()))
            .collect();
        let resumed: Vec<serde_json::Value> = enumerate_negacyclic(&ambient)
            .unwrap()
            .skip(1200)
            .take(5)
            .map(|c| c.to_json(&ambient.factors().degrees()))
            .collect();
        assert_eq!(&prefix[1200..], &resumed[..]);
    }

    #[test]
    fn limited_stream_is_a_prefix() {
        let ambient = AmbientCtx::new(7, 1).unwrap();
        let first: Vec<u64> = enumerate_negacyclic(&ambient)
            .unwrap()
            .take(100)
            .map(|c| c.total_size_log2)
            .collect();
        assert_eq!(first.len(), 100);
        let again: Vec<u64> = enumerate_negacyclic(&ambient)
            .unwrap()
            .take(100)
            .map(|c| c.total_size_log2)
            .collect();
        assert_eq!(first, again);
    }
}
