//! Exact non-negative half-integers for quantum-number bookkeeping.

use std::fmt;
use std::str::FromStr;

use crate::error::{DunklError, Result};
use crate::scalar::Real;

/// A non-negative integer or half-integer, stored as twice its value.
///
/// Parity rules on the quantum numbers `m` and `l` are decided on the
/// stored integer, never on a floating point value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    twice: u32,
}

impl HalfInt {
    pub const ZERO: Self = Self { twice: 0 };
    pub const HALF: Self = Self { twice: 1 };
    pub const ONE: Self = Self { twice: 2 };

    /// Builds the half-integer `twice / 2`.
    pub const fn from_twice(twice: u32) -> Self {
        Self { twice }
    }

    pub const fn from_int(n: u32) -> Self {
        Self { twice: 2 * n }
    }

    /// Builds from a possibly negative doubled value.
    pub fn try_from_twice(twice: i64) -> Result<Self> {
        u32::try_from(twice)
            .map(Self::from_twice)
            .map_err(|_| DunklError::QuantumNumbers(format!("{}/2 is not a non-negative half-integer", twice)))
    }

    pub const fn twice(self) -> u32 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    /// Returns `self - k/2` when it is a non-negative integer.
    pub fn integer_after_shift(self, k_halves: u32) -> Option<u32> {
        let rest = self.twice.checked_sub(k_halves)?;
        (rest % 2 == 0).then_some(rest / 2)
    }

    pub fn to_real<T: Real>(self) -> T {
        T::from_u32(self.twice).expect("u32 representable") * T::half()
    }

    pub fn to_f64(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// All values `0, 1/2, 1, ...` up to and including `max`.
    pub fn range_inclusive(max: HalfInt) -> impl Iterator<Item = HalfInt> {
        (0..=max.twice).map(HalfInt::from_twice)
    }
}

impl std::ops::Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl FromStr for HalfInt {
    type Err = DunklError;

    /// Accepts `"3"`, `"3/2"`, `"1.5"` and `"0.5"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || DunklError::QuantumNumbers(format!("'{s}' is not a non-negative integer or half-integer"));
        if let Some((num, den)) = s.split_once('/') {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "1" => HalfInt::try_from_twice(2 * num),
                "2" => HalfInt::try_from_twice(num),
                _ => Err(bad()),
            }
        } else if let Ok(n) = s.parse::<i64>() {
            HalfInt::try_from_twice(2 * n)
        } else {
            let x: f64 = s.parse().map_err(|_| bad())?;
            let doubled = 2.0 * x;
            if !doubled.is_finite() || doubled.fract() != 0.0 || doubled < 0.0 || doubled > f64::from(u32::MAX) {
                return Err(bad());
            }
            Ok(HalfInt::from_twice(doubled as u32))
        }
    }
}
