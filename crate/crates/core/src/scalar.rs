//! Number types the library is generic over.
//!
//! Every algorithm here compares and divides positions exactly, so the
//! scalar must be an ordered field without rounding. [`Scalar`] is
//! implemented for every `Ratio<I>` over a signed integer type; the
//! crate-level aliases pick `BigRational`, which never overflows.
//! `Rational64` is handy for quick experiments on small grids.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Num, One, Signed};

use crate::error::{Error, Result};

pub trait Scalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    /// `numer / denom`, reduced. Panics if `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// Exact parse of `p/q`, an integer, or a finite decimal such as `0.25`.
    fn parse_exact(text: &str) -> Result<Self>;

    /// Always `p/q`, including for integers (`0/1`, `1/1`).
    fn to_fraction(&self) -> String;

    fn from_count(n: usize) -> Self {
        Self::from_ratio(i64::try_from(n).expect("count fits in i64"), 1)
    }

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }
}

impl<I> Scalar for Ratio<I>
where
    I: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + FromStr
        + CheckedMul
        + CheckedAdd
        + From<i64>
        + Send
        + Sync
        + 'static,
{
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(I::from(numer), I::from(denom))
    }

    fn parse_exact(text: &str) -> Result<Self> {
        parse_ratio(text).ok_or_else(|| Error::ParseRational(text.to_string()))
    }

    fn to_fraction(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

fn parse_ratio<I>(text: &str) -> Option<Ratio<I>>
where
    I: Clone + Integer + Signed + FromStr + CheckedMul + CheckedAdd + From<i64>,
{
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    if body.is_empty() || body.starts_with(['+', '-']) {
        return None;
    }
    let magnitude = if let Some((numer, denom)) = body.split_once('/') {
        let numer = parse_digits::<I>(numer)?;
        let denom = parse_digits::<I>(denom)?;
        if denom.is_zero() {
            return None;
        }
        Ratio::new(numer, denom)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if whole.is_empty() && frac.is_empty() {
            return None;
        }
        let whole = if whole.is_empty() {
            I::zero()
        } else {
            parse_digits::<I>(whole)?
        };
        let mut scale = I::one();
        let mut digits = I::zero();
        let ten = I::from(10);
        for ch in frac.chars() {
            let d = ch.to_digit(10)?;
            scale = scale.checked_mul(&ten)?;
            digits = digits
                .checked_mul(&ten)?
                .checked_add(&I::from(i64::from(d)))?;
        }
        let numer = whole.checked_mul(&scale)?.checked_add(&digits)?;
        Ratio::new(numer, scale)
    } else {
        Ratio::from_integer(parse_digits::<I>(body)?)
    };
    Some(if negative { -magnitude } else { magnitude })
}

fn parse_digits<I: FromStr + One>(digits: &str) -> Option<I> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}
