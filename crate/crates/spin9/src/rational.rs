//! Exact rational scalars.
//!
//! Every scalar in this crate is an arbitrary-precision rational; there are
//! no floating-point numbers and no tolerances anywhere. `Rational` is kept
//! in lowest terms with a positive denominator by construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Formats with an explicit denominator, e.g. `3/1`, `-7/4`.
pub fn fmt_frac(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `n`, `n/d` or `-n/d`. Whitespace is not accepted.
pub fn parse_frac(s: &str) -> Option<Rational> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = d.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// True if `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

/// True if `r` is an integer divisible by `m`.
pub fn divisible_by(r: &Rational, m: i64) -> bool {
    is_integer(r) && (r.numer() % BigInt::from(m)).is_zero()
}

/// Exact sign as -1, 0, +1.
pub fn signum(r: &Rational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_denominator_sign() {
        let r = rat(4, -6);
        assert_eq!(r, rat(-2, 3));
        assert_eq!(fmt_frac(&r), "-2/3");
        assert!(r.denom() > &BigInt::from(0));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0/1", "-7/4", "351/1", "2/3"] {
            let r = parse_frac(s).unwrap();
            assert_eq!(fmt_frac(&r), s);
        }
        assert_eq!(parse_frac("5"), Some(int(5)));
        assert_eq!(parse_frac("1/0"), None);
        assert_eq!(parse_frac("x"), None);
    }

    #[test]
    fn divisibility() {
        assert!(divisible_by(&int(104), 13));
        assert!(!divisible_by(&int(5), 13));
        assert!(!divisible_by(&rat(13, 2), 13));
    }
}
