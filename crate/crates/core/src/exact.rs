//! Exact scalars and the factorial family.
//!
//! Everything here is arbitrary precision: [`Int`] is a [`BigInt`] and [`Rat`] a
//! reduced [`BigRational`]. There is no floating point anywhere in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("double factorial is defined here only for odd m >= -1, got {0}")]
    InvalidDoubleFactorial(i64),
    #[error("factor at index {index} vanishes inside the reciprocal range of an inverted product")]
    ZeroFactorInReciprocalRange { index: i64 },
}

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(Int::from(num), Int::from(den))
}

/// `a (a-1) ... (a-k+1)`, the empty product for `k = 0`.
pub fn falling_factorial(a: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        if acc.is_zero() {
            break;
        }
        term -= Rat::one();
    }
    acc
}

/// `a (a+2) (a+4) ... (a+2(k-1))`, with `a^{↑↑0} = 1`.
pub fn double_rising_factorial(a: &Rat, k: u32) -> Rat {
    let two = rat(2);
    let mut acc = Rat::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += &two;
    }
    acc
}

/// `m!! = m (m-2) ... 1` for odd `m >= -1`; `(-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<Int, ExactError> {
    if m < -1 || m.is_even() {
        return Err(ExactError::InvalidDoubleFactorial(m));
    }
    let mut acc = Int::one();
    let mut t = m;
    while t > 1 {
        acc *= t;
        t -= 2;
    }
    Ok(acc)
}

pub fn factorial(n: u64) -> Int {
    (2..=n).fold(Int::one(), |acc, i| acc * i)
}

/// Binomial coefficient via the multiplicative formula; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        // exact at every step: acc = C(n, i+1) after the division
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `Cat(m) = (2m)! / (m! (m+1)!)`.
pub fn catalan(m: u64) -> Int {
    let (q, r) = factorial(2 * m).div_rem(&(factorial(m) * factorial(m + 1)));
    debug_assert!(r.is_zero());
    q
}

/// Product `a_lower ... a_upper` under the inverted-range convention:
/// the empty product when `upper = lower - 1`, and the reciprocal
/// `1 / (a_{upper+1} ... a_{lower-1})` when `upper <= lower - 2`.
///
/// With this convention `prod(lower, l + 1) = prod(lower, l) * a_{l+1}` for
/// every integer `l`. A vanishing factor inside the reciprocal range is an
/// error.
pub fn extended_product<F>(lower: i64, upper: i64, mut factor: F) -> Result<Rat, ExactError>
where
    F: FnMut(i64) -> Rat,
{
    if upper >= lower - 1 {
        let mut acc = Rat::one();
        for r in lower..=upper {
            acc *= factor(r);
        }
        return Ok(acc);
    }
    let mut denom = Rat::one();
    for r in (upper + 1)..lower {
        let a = factor(r);
        if a.is_zero() {
            return Err(ExactError::ZeroFactorInReciprocalRange { index: r });
        }
        denom *= a;
    }
    Ok(denom.recip())
}

/// A number in `½ℤ`, stored as twice its value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    twice_value: Int,
}

impl HalfInt {
    pub fn from_twice(twice_value: impl Into<Int>) -> Self {
        Self {
            twice_value: twice_value.into(),
        }
    }

    pub fn from_int(value: impl Into<Int>) -> Self {
        Self {
            twice_value: value.into() * 2,
        }
    }

    pub fn twice(&self) -> &Int {
        &self.twice_value
    }

    pub fn is_integer(&self) -> bool {
        self.twice_value.is_even()
    }

    pub fn abs(&self) -> Self {
        Self {
            twice_value: self.twice_value.abs(),
        }
    }

    pub fn is_negative(&self) -> bool {
        self.twice_value.is_negative()
    }

    pub fn to_rat(&self) -> Rat {
        Rat::new(self.twice_value.clone(), Int::from(2))
    }

    /// `2 * value` as a machine integer, if it fits.
    pub fn twice_i64(&self) -> Option<i64> {
        self.twice_value.to_i64()
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", &self.twice_value / 2)
        } else {
            write!(f, "{}/2", self.twice_value)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(&rat(4), 3), rat(24));
        assert_eq!(falling_factorial(&ratio(7, 3), 0), rat(1));
        assert_eq!(falling_factorial(&ratio(1, 2), 2), ratio(-1, 4));
        // nonnegative integer below k kills the product
        assert_eq!(falling_factorial(&rat(3), 5), rat(0));
        assert_eq!(falling_factorial(&rat(-2), 3), rat(-24));
    }

    #[test]
    fn double_rising_factorial_values() {
        assert_eq!(double_rising_factorial(&ratio(5, 7), 0), rat(1));
        assert_eq!(double_rising_factorial(&rat(3), 2), rat(15));
        assert_eq!(double_rising_factorial(&rat(1), 3), rat(15));
    }

    #[test]
    fn double_factorial_values() {
        assert_eq!(double_factorial(-1).unwrap(), Int::from(1));
        assert_eq!(double_factorial(1).unwrap(), Int::from(1));
        assert_eq!(double_factorial(5).unwrap(), Int::from(15));
        assert_eq!(double_factorial(7).unwrap(), Int::from(105));
        assert_eq!(
            double_factorial(4),
            Err(ExactError::InvalidDoubleFactorial(4))
        );
        assert_eq!(
            double_factorial(-3),
            Err(ExactError::InvalidDoubleFactorial(-3))
        );
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429];
        for (m, &c) in expected.iter().enumerate() {
            assert_eq!(catalan(m as u64), Int::from(c));
        }
    }

    #[test]
    fn binomial_matches_pascal() {
        let mut row = vec![Int::one()];
        for n in 1..=20u64 {
            let mut next = vec![Int::one(); n as usize + 1];
            for k in 1..n as usize {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
            for k in 0..=n {
                assert_eq!(binomial(n, k), row[k as usize]);
            }
            assert!(binomial(n, n + 1).is_zero());
        }
    }

    #[test]
    fn extended_product_conventions() {
        let up = |r: i64| rat(r + 1);
        assert_eq!(extended_product(0, 2, up).unwrap(), rat(6));
        assert_eq!(extended_product(0, -1, |_| rat(0)).unwrap(), rat(1));
        assert_eq!(
            extended_product(0, -3, |r| rat(r + 5)).unwrap(),
            ratio(1, 12)
        );
    }

    #[test]
    fn extended_product_rejects_zero_in_reciprocal_range() {
        let err = extended_product(0, -4, |r| rat(r + 2)).unwrap_err();
        assert_eq!(err, ExactError::ZeroFactorInReciprocalRange { index: -2 });
        // a zero in the ordinary range is just a zero product
        assert_eq!(extended_product(0, 3, |r| rat(r - 2)).unwrap(), rat(0));
    }

    #[test]
    fn half_int_parity() {
        let d = HalfInt::from_twice(-3);
        assert!(!d.is_integer());
        assert_eq!(d.abs(), HalfInt::from_twice(3));
        assert_eq!(d.to_rat(), ratio(-3, 2));
        assert_eq!(d.to_string(), "-3/2");
        assert_eq!(HalfInt::from_int(4).to_string(), "4");
        assert!(HalfInt::from_int(-4).is_integer());
    }

    fn nonzero_rat() -> impl Strategy<Value = Rat> {
        (-30i64..=30, 1i64..=9)
            .prop_filter("nonzero", |(n, _)| *n != 0)
            .prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn extended_product_recurrence(
            factors in proptest::collection::vec(nonzero_rat(), 15),
            l in -6i64..=6,
        ) {
            let a = |r: i64| factors[(r + 7) as usize].clone();
            let lhs = extended_product(0, l + 1, a).unwrap();
            let rhs = extended_product(0, l, a).unwrap() * a(l + 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn catalan_from_binomial(m in 0u64..60) {
            prop_assert_eq!(catalan(m), binomial(2 * m, m) / (m + 1));
        }

        #[test]
        fn falling_factorial_vanishes_below_k(a in 0i64..20, extra in 1u32..10) {
            let k = a as u32 + extra;
            prop_assert!(falling_factorial(&rat(a), k).is_zero());
        }
    }
}
