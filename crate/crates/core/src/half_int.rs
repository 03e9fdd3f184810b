//! Exact half-integers and the small rationals they produce.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use thiserror::Error;

/// A number in `½ℤ`, stored as twice its value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i32);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);
    pub const HALF: HalfInt = HalfInt(1);
    pub const ONE: HalfInt = HalfInt(2);

    /// Builds the half-integer `twice / 2`.
    #[inline]
    pub const fn from_twice(twice: i32) -> Self {
        HalfInt(twice)
    }

    #[inline]
    pub const fn from_int(n: i32) -> Self {
        HalfInt(2 * n)
    }

    #[inline]
    pub const fn twice(self) -> i32 {
        self.0
    }

    /// `true` for values in `ℤ`, `false` for proper half-integers.
    #[inline]
    pub const fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    #[inline]
    pub const fn abs(self) -> Self {
        HalfInt(self.0.abs())
    }

    #[inline]
    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    /// Whether `self - other` is an integer.
    #[inline]
    pub const fn same_parity(self, other: HalfInt) -> bool {
        (self.0 - other.0) % 2 == 0
    }

    /// The integer `self - other`, if it is one.
    pub const fn integer_gap(self, other: HalfInt) -> Option<i32> {
        if self.same_parity(other) {
            Some((self.0 - other.0) / 2)
        } else {
            None
        }
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }

    /// `self * (self + 1)` as an exact rational.
    pub fn j_j_plus_one(self) -> Rational {
        // (t/2)(t/2 + 1) = t(t + 2) / 4
        let t = i64::from(self.0);
        Rational::new(t * (t + 2), 4)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.0 += rhs.0;
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.0 -= rhs.0;
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl core::iter::Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |acc, x| acc + x)
    }
}

/// Reduced fraction: `"3/2"`, `"-1/2"`, `"0"`, `"2"`.
impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseHalfIntError {
    #[error("empty half-integer")]
    Empty,
    #[error("`{0}` is not an integer or a fraction with denominator 1 or 2")]
    Invalid(alloc::string::String),
}

/// Accepts integers (`"-1"`), fractions with denominator 1 or 2 (`"3/2"`,
/// `"-1/2"`, `"4/2"`) and decimals ending in `.5` or `.0` (`"1.5"`).
impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(ParseHalfIntError::Empty);
        }
        let invalid = || ParseHalfIntError::Invalid(alloc::string::String::from(s));
        if let Some((num, den)) = s.split_once('/') {
            let num: i32 = num.trim().parse().map_err(|_| invalid())?;
            let den: i32 = den.trim().parse().map_err(|_| invalid())?;
            return match den {
                1 => num.checked_mul(2).map(HalfInt).ok_or_else(invalid),
                2 => Ok(HalfInt(num)),
                _ => Err(invalid()),
            };
        }
        if let Some((whole, frac)) = s.split_once('.') {
            let negative = whole.trim_start().starts_with('-');
            let whole: i32 = if whole == "-" || whole.is_empty() {
                0
            } else {
                whole.parse().map_err(|_| invalid())?
            };
            let frac = frac.trim_end_matches('0');
            let half = match frac {
                "" => 0,
                "5" => 1,
                _ => return Err(invalid()),
            };
            let twice = whole.checked_mul(2).ok_or_else(invalid)?;
            return Ok(HalfInt(if negative { twice - half } else { twice + half }));
        }
        let n: i32 = s.parse().map_err(|_| invalid())?;
        n.checked_mul(2).map(HalfInt).ok_or_else(invalid)
    }
}

/// A reduced fraction with positive denominator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    numer: i64,
    denom: i64,
}

impl Rational {
    /// Panics if `denom == 0`.
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        let g = gcd(numer.unsigned_abs(), denom.unsigned_abs()) as i64;
        let sign = if denom < 0 { -1 } else { 1 };
        let g = if g == 0 { 1 } else { g };
        Rational {
            numer: sign * numer / g,
            denom: sign * denom / g,
        }
    }

    pub const fn integer(n: i64) -> Self {
        Rational { numer: n, denom: 1 }
    }

    pub const fn numer(self) -> i64 {
        self.numer
    }

    pub const fn denom(self) -> i64 {
        self.denom
    }

    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (i128::from(self.numer) * i128::from(other.denom)).cmp(&(i128::from(other.numer) * i128::from(self.denom)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}
