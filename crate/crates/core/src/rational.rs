//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// Reduced fraction of arbitrary-precision integers with a positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// 1/k! as an exact rational.
pub fn inverse_factorial(k: usize) -> Rational {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= BigInt::from(i);
    }
    Rational::new(BigInt::one(), f)
}

/// Formats a coefficient in front of a term.
///
/// `first` controls whether a positive sign is emitted as `+`. Unit coefficients are
/// elided and `sep` is placed between a non-unit coefficient and the term body.
pub(crate) fn write_coefficient(
    out: &mut String,
    coeff: &Rational,
    first: bool,
    sep: &str,
) -> bool {
    let negative = coeff.is_negative();
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
    let abs = coeff.abs();
    if abs.is_one() {
        false
    } else {
        out.push_str(&abs.to_string());
        out.push_str(sep);
        true
    }
}
