//! Exact scalar types.
//!
//! Everything in this crate works over an exact ring. Integer-valued
//! computations use [`BigInt`]; machine integers (`i64`, `i128`) are
//! accepted where the values are known to be small, and the rational types
//! are used where a field is needed (kernels, traces on homology).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact numeric type: a commutative ring with a (possibly partial)
/// exact division, plus the conversions the algorithms need.
pub trait Scalar:
    Signed + Clone + PartialOrd + FromPrimitive + Debug + Display + Send + Sync + 'static
{
    /// Converts an arbitrary-precision integer, `None` on overflow.
    fn from_bigint(value: &BigInt) -> Option<Self>;

    /// Converts back to an integer, `None` if the value is not integral.
    fn to_bigint(&self) -> Option<BigInt>;

    /// `self / rhs` when the quotient is exact in this type.
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let q = self.clone() / rhs.clone();
        if q.clone() * rhs.clone() == *self {
            Some(q)
        } else {
            None
        }
    }

    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count does not fit the scalar type")
    }
}

impl Scalar for BigInt {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }

    fn to_bigint(&self) -> Option<BigInt> {
        Some(self.clone())
    }
}

macro_rules! machine_scalar {
    ($($t:ty => $to:ident),*) => {$(
        impl Scalar for $t {
            fn from_bigint(value: &BigInt) -> Option<Self> {
                value.$to()
            }

            fn to_bigint(&self) -> Option<BigInt> {
                Some(BigInt::from(*self))
            }

            fn exact_div(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    self.checked_div(*rhs)
                }
            }
        }
    )*};
}

machine_scalar!(i64 => to_i64, i128 => to_i128);

impl Scalar for BigRational {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(Ratio::from_integer(value.clone()))
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.to_integer())
    }
}

impl Scalar for Ratio<i64> {
    fn from_bigint(value: &BigInt) -> Option<Self> {
        value.to_i64().map(Ratio::from_integer)
    }

    fn to_bigint(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(self.to_integer()))
    }
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub fn falling(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    ((n - k + 1)..=n).fold(BigInt::from(1), |acc, i| acc * BigInt::from(i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::from(0));
        assert_eq!(binomial(5, -1), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn exact_division() {
        assert_eq!(BigInt::from(12).exact_div(&BigInt::from(4)), Some(BigInt::from(3)));
        assert_eq!(BigInt::from(-12).exact_div(&BigInt::from(5)), None);
        assert_eq!(7i64.exact_div(&2), None);
        assert_eq!(8i64.exact_div(&-2), Some(-4));
        let r = BigRational::new(BigInt::from(1), BigInt::from(3));
        assert!(r.exact_div(&BigRational::from_integer(BigInt::from(7))).is_some());
    }

    #[test]
    fn falling_factorials() {
        assert_eq!(falling(4, 2), BigInt::from(12));
        assert_eq!(falling(2, 3), BigInt::from(0));
        assert_eq!(falling(3, 0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
