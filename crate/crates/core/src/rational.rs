//! Exact non-negative rationals, extended with an infinite value.

use std::cmp::Ordering;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

/// A reduced fraction `num / den` with `den ≥ 1`.
///
/// Comparisons cross-multiply in 128 bits, so no value that fits the
/// fields can be misordered.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

const fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };

    /// # Panics
    /// If `den` is zero.
    pub const fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational {
            num: num / g,
            den: den / g,
        }
    }

    pub const fn integer(n: u64) -> Self {
        Rational { num: n, den: 1 }
    }

    pub const fn num(self) -> u64 {
        self.num
    }

    pub const fn den(self) -> u64 {
        self.den
    }

    /// `self / 2`.
    pub const fn half(self) -> Self {
        Rational::new(self.num, self.den * 2)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Whether `a / b` is strictly below this value.
    #[inline]
    pub fn exceeds_ratio(self, a: u64, b: u64) -> bool {
        (a as u128) * (self.den as u128) < (self.num as u128) * (b as u128)
    }

    /// Compares `a / b` against this value without reducing.
    #[inline]
    pub fn cmp_ratio(self, a: u64, b: u64) -> Ordering {
        ((a as u128) * (self.den as u128)).cmp(&((self.num as u128) * (b as u128)))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        ((self.num as u128) * (other.den as u128)).cmp(&((other.num as u128) * (self.den as u128)))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("den", &self.den)?;
        m.serialize_entry("num", &self.num)?;
        m.end()
    }
}

/// A [`Rational`] or `+∞`. Infinity orders above every finite value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRational {
    Finite(Rational),
    Infinite,
}

impl ExtRational {
    pub fn finite(self) -> Option<Rational> {
        match self {
            ExtRational::Finite(r) => Some(r),
            ExtRational::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, ExtRational::Infinite)
    }
}

impl From<Rational> for ExtRational {
    fn from(r: Rational) -> Self {
        ExtRational::Finite(r)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::Finite(r) => r.fmt(f),
            ExtRational::Infinite => f.write_str("infinite"),
        }
    }
}

impl fmt::Debug for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ExtRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtRational::Finite(r) => r.serialize(s),
            ExtRational::Infinite => s.serialize_str("infinite"),
        }
    }
}
