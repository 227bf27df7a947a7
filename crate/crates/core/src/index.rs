//! Scores, the index of a preorder, and the dyadic quantities Ψ and f.

use std::fmt;
use std::iter::Sum;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::completions::IdealSearch;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::order::{Preorder, TotalPreorder};

/// Exact nonnegative integer.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub BigUint);

impl BigCount {
    pub fn pow2(exponent: u32) -> Self {
        BigCount(BigUint::one() << exponent)
    }

    pub fn to_u128(&self) -> Option<u128> {
        self.0.to_u128()
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl From<u64> for BigCount {
    fn from(v: u64) -> Self {
        BigCount(BigUint::from(v))
    }
}

impl Add for BigCount {
    type Output = BigCount;

    fn add(self, rhs: BigCount) -> BigCount {
        BigCount(self.0 + rhs.0)
    }
}

impl Sum for BigCount {
    fn sum<I: Iterator<Item = BigCount>>(iter: I) -> Self {
        iter.fold(BigCount::default(), Add::add)
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for BigCount {
    /// Serialized as a decimal string so no JSON reader loses precision.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

/// `numerator / 2^exponent`, kept with an odd numerator (or `0 / 2^0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    numerator: BigUint,
    exponent: u32,
}

impl DyadicRational {
    pub fn new(numerator: BigUint, exponent: u32) -> Self {
        if numerator.is_zero() {
            return DyadicRational::zero();
        }
        let shift = numerator.trailing_zeros().unwrap_or(0).min(exponent as u64) as u32;
        DyadicRational {
            numerator: numerator >> shift,
            exponent: exponent - shift,
        }
    }

    pub fn zero() -> Self {
        DyadicRational {
            numerator: BigUint::zero(),
            exponent: 0,
        }
    }

    pub fn integer(v: u64) -> Self {
        DyadicRational::new(BigUint::from(v), 0)
    }

    /// `2^-k`.
    pub fn inverse_pow2(k: u32) -> Self {
        DyadicRational::new(BigUint::one(), k)
    }

    pub fn numerator(&self) -> &BigUint {
        &self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// Multiplies by `2^-k`.
    pub fn halve(&self, k: u32) -> Self {
        DyadicRational::new(self.numerator.clone(), self.exponent + k)
    }

    /// Multiplies by `2^k`.
    pub fn double(&self, k: u32) -> Self {
        let up = k.min(self.exponent);
        DyadicRational::new(self.numerator.clone() << (k - up), self.exponent - up)
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigUint> {
        (self.exponent == 0).then(|| self.numerator.clone())
    }

    pub fn to_f64(&self) -> f64 {
        self.numerator.to_f64().unwrap_or(f64::INFINITY) / 2f64.powi(self.exponent as i32)
    }
}

impl Add for &DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        let e = self.exponent.max(rhs.exponent);
        let a = &self.numerator << (e - self.exponent);
        let b = &rhs.numerator << (e - rhs.exponent);
        DyadicRational::new(a + b, e)
    }
}

impl Add for DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: DyadicRational) -> DyadicRational {
        &self + &rhs
    }
}

impl Sum for DyadicRational {
    fn sum<I: Iterator<Item = DyadicRational>>(iter: I) -> Self {
        iter.fold(DyadicRational::zero(), Add::add)
    }
}

impl fmt::Display for DyadicRational {
    /// `n` for integers, otherwise `n/2^e`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

/// `2^|x↓|`, the number of subsets of the weak down-set of `x`.
pub fn score(p: &Preorder, x: usize) -> BigCount {
    BigCount::pow2(p.down_set(x, false).len() as u32)
}

pub(crate) fn index_total_u128(t: &TotalPreorder) -> u128 {
    let n = t.len();
    let mut below = n;
    let mut total = 0u128;
    for block in t.blocks() {
        total += block.len() as u128 * (1u128 << below);
        below -= block.len();
    }
    total
}

/// Sum of scores of a complete preorder.
pub fn index_total(t: &TotalPreorder) -> BigCount {
    index_total_u128(t).into()
}

/// Largest index over the completions of `p`.
pub fn index_general(p: &Preorder, limits: &Limits) -> Result<BigCount> {
    if p.is_total() {
        return Ok(index_total(&p.to_total()?));
    }
    IdealSearch::new(p, limits).max_index().map(BigCount::from)
}

/// `Ψ = Σ_x 2^-|x↑|` over strict up-sets, so that `𝕀 = 2ⁿ·Ψ`.
pub fn psi(t: &TotalPreorder) -> DyadicRational {
    let mut above = 0u32;
    let mut total = DyadicRational::zero();
    for block in t.blocks() {
        total = total + DyadicRational::integer(block.len() as u64).halve(above);
        above += block.len() as u32;
    }
    total
}

/// `f(n₁,…,n_k) = n₁ + Σ_{i≥2} nᵢ·2^-(n₁+…+n_{i-1})`.
pub fn f_layers(sizes: &[usize]) -> Result<DyadicRational> {
    if sizes.is_empty() {
        return Err(Error::EmptySequence);
    }
    let mut above = 0u32;
    let mut total = DyadicRational::zero();
    for &n in sizes {
        total = total + DyadicRational::integer(n as u64).halve(above);
        above += n as u32;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::GroundSet;

    fn chain(n: usize) -> Preorder {
        let g = GroundSet::indexed("x", n).unwrap();
        Preorder::generated_by(g, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn dyadic_canonical_form() {
        let v = DyadicRational::new(BigUint::from(12u32), 4);
        assert_eq!(v.numerator(), &BigUint::from(3u32));
        assert_eq!(v.exponent(), 2);
        assert_eq!(
            DyadicRational::new(BigUint::zero(), 9),
            DyadicRational::zero()
        );
        assert_eq!(DyadicRational::integer(6).to_string(), "6");
        assert_eq!(v.to_string(), "3/2^2");
        assert_eq!(v.double(2), DyadicRational::integer(3));
        assert_eq!(v.double(5), DyadicRational::integer(24));
    }

    #[test]
    fn scores_of_a_chain() {
        let c = chain(5);
        // x1 is the top; the i-th element from the bottom scores 2^i.
        for i in 0..5 {
            assert_eq!(score(&c, i), BigCount::pow2(5 - i as u32));
        }
    }

    #[test]
    fn index_extremes() {
        for n in 1..=8 {
            let lin = chain(n).to_total().unwrap();
            assert_eq!(index_total(&lin), BigCount::from(2 * ((1u128 << n) - 1)));
            let g = GroundSet::indexed("x", n).unwrap();
            let all = TotalPreorder::indifferent(g.clone());
            assert_eq!(index_total(&all), BigCount::from(n as u128 * (1u128 << n)));
            assert_eq!(
                index_general(&Preorder::equality(g), &Limits::default()).unwrap(),
                BigCount::from(n as u128 * (1u128 << n))
            );
        }
    }

    #[test]
    fn psi_values() {
        let g = GroundSet::indexed("x", 5).unwrap();
        assert_eq!(
            psi(&TotalPreorder::indifferent(g)),
            DyadicRational::integer(5)
        );
        let lin = chain(3).to_total().unwrap();
        assert_eq!(psi(&lin), DyadicRational::new(BigUint::from(14u32), 3));
    }

    #[test]
    fn f_values() {
        assert_eq!(f_layers(&[7]).unwrap(), DyadicRational::integer(7));
        assert_eq!(
            f_layers(&[1, 1, 1]).unwrap(),
            DyadicRational::new(BigUint::from(7u32), 2)
        );
        assert_eq!(f_layers(&[]), Err(Error::EmptySequence));
    }

    #[test]
    fn big_count_serializes_as_string() {
        let v = BigCount::pow2(100);
        assert_eq!(
            serde_json::to_string(&v).unwrap(),
            "\"1267650600228229401496703205376\""
        );
    }
}
