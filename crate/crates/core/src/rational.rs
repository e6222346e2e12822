//! Exact rational scalars and their wire format.
//!
//! Rationals are serialized as `"num/den"` strings in lowest terms, or just
//! `"num"` when the denominator is 1. No floating point appears anywhere in
//! this crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rat = BigRational;

/// `num/den` as an exact rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical wire form: `"3/2"`, `"-1"`, `"0"`.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `"n"` or `"n/d"`. Rejects zero denominators and malformed input.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::InvalidRational(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(bad());
    }
    let (num_str, den_str) = match t.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (t, None),
    };
    let num: BigInt = num_str.trim().parse().map_err(|_| bad())?;
    let den: BigInt = match den_str {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rat::new(num, den))
}

pub fn factorial(n: u32) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n as u64 {
        acc *= i;
    }
    Rat::from_integer(acc)
}

/// Double factorial with `0!! = (-1)!! = 1`; `n` may be `-1`.
pub fn double_factorial(n: i64) -> Rat {
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Rat::from_integer(acc)
}

pub fn is_negative(r: &Rat) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wire_format_round_trips() {
        for s in ["3/2", "-1", "0", "7", "-5/9"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // non-canonical inputs normalize
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert_eq!(format_rat(&parse_rat("2/-4").unwrap()), "-1/2");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("1/2/3").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn double_factorial_conventions() {
        assert_eq!(double_factorial(-1), rat_int(1));
        assert_eq!(double_factorial(0), rat_int(1));
        assert_eq!(double_factorial(5), rat_int(15));
        assert_eq!(double_factorial(6), rat_int(48));
    }
}
