//! Elements of the max-plus semifield `R ∪ {-∞}` with exact rational values.

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::ParseError;

/// Exact rational used for every finite coordinate.
pub type Rational = Ratio<i128>;

/// An extended real: either `-∞` (the max-plus zero) or a finite rational.
///
/// The derived order puts `Bottom` below every finite value, which is the
/// order of `R_max`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtScalar {
    Bottom,
    Finite(Rational),
}

impl ExtScalar {
    /// The multiplicative identity `0`.
    pub const ZERO: ExtScalar = ExtScalar::Finite(Ratio::new_raw(0, 1));

    pub fn int(v: i64) -> Self {
        ExtScalar::Finite(Rational::from_integer(v as i128))
    }

    pub fn ratio(numer: i64, denom: i64) -> Self {
        ExtScalar::Finite(Rational::new(numer as i128, denom as i128))
    }

    pub fn is_bottom(&self) -> bool {
        matches!(self, ExtScalar::Bottom)
    }

    pub fn is_finite(&self) -> bool {
        !self.is_bottom()
    }

    pub fn finite(&self) -> Option<Rational> {
        match self {
            ExtScalar::Bottom => None,
            ExtScalar::Finite(r) => Some(*r),
        }
    }

    /// `a ⊕ b = max(a, b)`.
    pub fn oplus(self, other: Self) -> Self {
        self.max(other)
    }

    /// `a ⊗ b = a + b`, with `-∞` absorbing.
    pub fn otimes(self, other: Self) -> Self {
        match (self, other) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => ExtScalar::Finite(a + b),
            _ => ExtScalar::Bottom,
        }
    }

    /// `self - other` for a finite `other`; `-∞` stays `-∞`.
    pub fn minus(self, other: Rational) -> Self {
        match self {
            ExtScalar::Bottom => ExtScalar::Bottom,
            ExtScalar::Finite(a) => ExtScalar::Finite(a - other),
        }
    }
}

impl Default for ExtScalar {
    fn default() -> Self {
        ExtScalar::ZERO
    }
}

impl From<i64> for ExtScalar {
    fn from(v: i64) -> Self {
        ExtScalar::int(v)
    }
}

impl From<Rational> for ExtScalar {
    fn from(v: Rational) -> Self {
        ExtScalar::Finite(v)
    }
}

impl Add for ExtScalar {
    type Output = ExtScalar;

    fn add(self, rhs: Self) -> Self::Output {
        self.otimes(rhs)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Bottom => f.write_str("-inf"),
            ExtScalar::Finite(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            ExtScalar::Finite(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for ExtScalar {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t == "-inf" {
            return Ok(ExtScalar::Bottom);
        }
        let bad = || ParseError::Scalar(t.to_string());
        let value = match t.split_once('/') {
            Some((p, q)) => {
                let p: i128 = p.trim().parse().map_err(|_| bad())?;
                let q: i128 = q.trim().parse().map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(bad());
                }
                Rational::new(p, q)
            }
            None => Rational::from_integer(t.parse().map_err(|_| bad())?),
        };
        Ok(ExtScalar::Finite(value))
    }
}
