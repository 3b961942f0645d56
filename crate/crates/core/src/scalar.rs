//! Exact scalar types used for fuzzy membership degrees and matrix entries.
//!
//! Law checking compares results with `==`, so the scalar must have exact
//! arithmetic and a total order. Floating point types are excluded on
//! purpose: they implement neither `Ord` nor `Hash`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// An exact ordered field element.
pub trait Scalar:
    Num + Neg<Output = Self> + Clone + Ord + Hash + Debug + Display + Send + Sync + 'static
{
    /// Builds `numer / denom`. Panics when `denom` is zero or the parts do not
    /// fit the backing integer type.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    /// True when the value is an integer.
    fn is_integral(&self) -> bool;

    /// Parses a decimal literal of the form `p` or `p/q`.
    fn parse_literal(src: &str) -> Option<Self>;
}

impl<T> Scalar for Ratio<T>
where
    T: Integer
        + Clone
        + Hash
        + Debug
        + Display
        + FromPrimitive
        + Neg<Output = T>
        + Send
        + Sync
        + 'static,
{
    fn from_ratio(numer: i64, denom: i64) -> Self {
        let n = T::from_i64(numer).expect("numerator out of range for scalar type");
        let d = T::from_i64(denom).expect("denominator out of range for scalar type");
        Ratio::new(n, d)
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn parse_literal(src: &str) -> Option<Self> {
        let int = |s: &str| {
            let s = s.trim();
            let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            T::from_str_radix(s, 10).ok()
        };
        match src.split_once('/') {
            Some((p, q)) => {
                let q = int(q)?;
                if q.is_zero() {
                    None
                } else {
                    Some(Ratio::new(int(p)?, q))
                }
            }
            None => int(src).map(Ratio::from_integer),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, Rational64};

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(
            Rational64::parse_literal("3/10"),
            Some(Rational64::new(3, 10))
        );
        assert_eq!(
            Rational64::parse_literal(" 2 "),
            Some(Rational64::from_integer(2))
        );
        assert_eq!(
            Rational64::parse_literal("-1/2"),
            Some(Rational64::new(-1, 2))
        );
        assert_eq!(Rational64::parse_literal("1/0"), None);
        assert_eq!(Rational64::parse_literal("x"), None);
        assert_eq!(
            Rational::parse_literal("6/4"),
            Some(Rational::from_ratio(3, 2))
        );
    }

    #[test]
    fn integrality() {
        assert!(Rational::from_ratio(4, 2).is_integral());
        assert!(!Rational::from_ratio(1, 2).is_integral());
    }
}
