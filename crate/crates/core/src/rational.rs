//! The scalar field.
//!
//! [`Rational`] is `num_rational::BigRational`: always reduced, with a
//! positive denominator, and zero stored as `0/1`. Its `Display` prints
//! `p/q`, omitting `q` when it is one.

use alloc::string::String;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// `num / den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// Parses `p`, `-p` or `p/q`. Rejects a zero denominator.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num = BigInt::from_str(num).ok()?;
    let den = BigInt::from_str(den).ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Canonical `p/q` text.
pub fn render(value: &Rational) -> String {
    alloc::format!("{value}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn always_lowest_terms() {
        let r = rat(6, -8);
        assert_eq!(r, rat(-3, 4));
        assert_eq!(render(&r), "-3/4");
        assert_eq!(render(&rat(0, 5)), "0");
        assert_eq!(render(&rat(4, 2)), "2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3/6"), Some(half()));
        assert_eq!(parse_rational("-7"), Some(int(-7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
