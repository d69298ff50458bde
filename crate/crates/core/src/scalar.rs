//! Exact scalars for structure constants.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact field elements. Every comparison is equality; there is no tolerance.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    /// `num / den`, or `None` when `den` is zero in the field.
    fn from_ratio(num: i64, den: i64) -> Option<Self>;
}

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        (den != 0).then(|| rat(num, den))
    }
}

/// Integers modulo the prime `P`. Intended for quick experiments on larger
/// carriers; results agree with the rational ones only when no denominator
/// or numerator collapses mod `P`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct ModP<const P: u64>(u64);

impl<const P: u64> ModP<P> {
    pub fn new(v: i64) -> Self {
        ModP(v.rem_euclid(P as i64) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2)
        let (mut base, mut exp, mut acc) = (self.0 as u128, P - 2, 1u128);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % P as u128;
            }
            base = base * base % P as u128;
            exp >>= 1;
        }
        Some(ModP(acc as u64))
    }
}

impl<const P: u64> Display for ModP<P> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for ModP<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        ModP(((self.0 as u128 + o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for ModP<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Neg for ModP<P> {
    type Output = Self;
    fn neg(self) -> Self {
        ModP((P - self.0) % P)
    }
}

impl<const P: u64> Mul for ModP<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        ModP(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Zero for ModP<P> {
    fn zero() -> Self {
        ModP(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for ModP<P> {
    fn one() -> Self {
        ModP(1 % P)
    }
}

impl<const P: u64> Scalar for ModP<P> {
    fn from_i64(v: i64) -> Self {
        ModP::new(v)
    }

    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        ModP::new(den).inverse().map(|d| ModP::new(num) * d)
    }
}
