//! Exact rational values for every invariant.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number in lowest terms with a positive denominator.
///
/// Serialized as `p/q` (always with an explicit denominator, so `1` is `1/1`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ratio(BigRational);

impl Ratio {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Ratio(BigRational::new(numer.into(), denom.into()))
    }

    /// `numer / denom` for non-negative counts.
    pub fn from_counts(numer: usize, denom: usize) -> Self {
        assert!(denom != 0, "zero denominator");
        Ratio(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(value: i64) -> Self {
        Ratio(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Ratio(BigRational::zero())
    }

    pub fn one() -> Self {
        Ratio(BigRational::one())
    }

    pub fn half() -> Self {
        Ratio::new(1, 2)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn recip(&self) -> Ratio {
        Ratio(self.0.recip())
    }

    /// `self * count`
    pub fn scale(&self, count: usize) -> Ratio {
        Ratio(&self.0 * BigRational::from_integer(count.into()))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

impl From<BigRational> for Ratio {
    fn from(r: BigRational) -> Self {
        Ratio(r)
    }
}

impl From<usize> for Ratio {
    fn from(v: usize) -> Self {
        Ratio(BigRational::from_integer(v.into()))
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl std::ops::$tr<&Ratio> for &Ratio {
            type Output = Ratio;
            fn $method(self, rhs: &Ratio) -> Ratio {
                Ratio(std::ops::$tr::$method(&self.0, &rhs.0))
            }
        }
        impl std::ops::$tr for Ratio {
            type Output = Ratio;
            fn $method(self, rhs: Ratio) -> Ratio {
                Ratio(std::ops::$tr::$method(self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::RatioParse(s.to_string());
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        Ok(Ratio(BigRational::new(p, q)))
    }
}
