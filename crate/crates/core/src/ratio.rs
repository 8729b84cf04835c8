//! Exact rational numbers for probabilities, rates, and bounds.
//!
//! No floating point anywhere: comparisons cross-multiply in 128 bits.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Sub};

/// A reduced fraction `num / den` with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: i64,
    den: u64,
}

impl Ratio {
    pub const ZERO: Ratio = Ratio { num: 0, den: 1 };
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };
    pub const ONE_QUARTER: Ratio = Ratio { num: 1, den: 4 };

    pub fn new(num: i64, den: u64) -> Ratio {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den);
        Ratio {
            num: num / g as i64,
            den: den / g,
        }
    }

    pub fn from_integer(n: i64) -> Ratio {
        Ratio { num: n, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    /// `self * (num / den)` for integer scaling, e.g. rejection * n / distance.
    pub fn scale(self, num: u64, den: u64) -> Ratio {
        assert!(den != 0, "zero denominator");
        Self::from_i128(
            self.num as i128 * num as i128,
            self.den as u128 * den as u128,
        )
    }

    fn from_i128(num: i128, den: u128) -> Ratio {
        let g = gcd128(num.unsigned_abs(), den);
        let num = num / g as i128;
        let den = den / g;
        Ratio {
            num: i64::try_from(num).expect("rational overflow"),
            den: u64::try_from(den).expect("rational overflow"),
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if a == 0 && b == 0 {
        return 1;
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn gcd128(a: u128, b: u128) -> u128 {
    if a == 0 && b == 0 {
        return 1;
    }
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Add for Ratio {
    type Output = Ratio;
    fn add(self, other: Ratio) -> Ratio {
        let num = self.num as i128 * other.den as i128 + other.num as i128 * self.den as i128;
        let den = self.den as u128 * other.den as u128;
        Self::from_i128(num, den)
    }
}

impl Sub for Ratio {
    type Output = Ratio;
    fn sub(self, other: Ratio) -> Ratio {
        self + Ratio {
            num: -other.num,
            den: other.den,
        }
    }
}

impl Mul for Ratio {
    type Output = Ratio;
    fn mul(self, other: Ratio) -> Ratio {
        Self::from_i128(
            self.num as i128 * other.num as i128,
            self.den as u128 * other.den as u128,
        )
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Ratio) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Ratio) -> Ordering {
        let lhs = self.num as i128 * other.den as i128;
        let rhs = other.num as i128 * self.den as i128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
