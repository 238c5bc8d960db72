//! Exact rational scalars and their `p/q` text form.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational; always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats as `p/q`, or `p` when the denominator is one.
pub fn format(r: &Rational) -> String {
    r.to_string()
}

/// Parses any `p` or `p/q` with integer `p`, `q != 0`, normalizing the result.
pub fn parse_lenient(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = parse_int(num).ok_or_else(bad)?;
    let den: BigInt = parse_int(den).ok_or_else(bad)?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(num, den))
}

/// Parses a canonical fraction string: `p` or `p/q` with `q > 1`,
/// `gcd(p, q) = 1`, no `+` sign, no leading zeros, no whitespace.
pub fn parse_canonical(s: &str) -> Result<Rational> {
    let r = parse_lenient(s)?;
    if s != format(&r) {
        return Err(Error::Parse(format!(
            "non-canonical rational `{s}` (expected `{}`)",
            format(&r)
        )));
    }
    Ok(r)
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    let digits = digits.strip_prefix('+').unwrap_or(digits);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Lowest common multiple of the denominators, used to clear a row to integers.
pub(crate) fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_forms() {
        assert_eq!(parse_canonical("3").unwrap(), int(3));
        assert_eq!(parse_canonical("-1/2").unwrap(), frac(-1, 2));
        assert_eq!(parse_canonical("0").unwrap(), zero());
        for bad in ["2/4", "+3", "1/1", "03", "-0", "0/5", " 1", "1/-2", "", "/", "1/0", "x"] {
            assert!(parse_canonical(bad).is_err(), "{bad} accepted");
        }
    }

    #[test]
    fn lenient_normalizes() {
        assert_eq!(parse_lenient("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_lenient("+3").unwrap(), int(3));
        assert_eq!(parse_lenient("1/-2").unwrap(), frac(-1, 2));
        assert!(parse_lenient("1/0").is_err());
        assert!(parse_lenient("1.5").is_err());
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let s = frac(1, 6) + frac(1, 3);
        assert_eq!(format(&s), "1/2");
        assert_eq!(format(&(frac(1, 2) - frac(1, 2))), "0");
    }
}
