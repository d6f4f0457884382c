//! Exact rational arithmetic.
//!
//! All coefficients in the engine are `Rational` (arbitrary-precision,
//! always in lowest terms with positive denominator). There is no floating
//! point anywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational number, stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical rendering `p/q` (just `p` when the denominator is 1).
pub fn render(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` with an optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }
}

/// Factorial as a rational, used by series constructors.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert!(r.denom().is_positive());
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = rat(1, 3);
        let b = rat(1, 6);
        assert_eq!(&a + &b, rat(1, 2));
        assert_eq!(&a * &b, rat(1, 18));
        assert_eq!(&a - &a, rat_int(0));
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(render(&rat(3, 2)), "3/2");
        assert_eq!(render(&rat_int(-7)), "-7");
        assert_eq!(parse_rational("3/2"), Some(rat(3, 2)));
        assert_eq!(parse_rational("-5"), Some(rat_int(-5)));
        assert_eq!(parse_rational("1/0"), None);
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), rat_int(1));
        assert_eq!(factorial(5), rat_int(120));
    }
}
