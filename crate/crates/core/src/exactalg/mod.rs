//! Exact arithmetic substrate: rationals, sparse multivariate polynomials,
//! polynomial matrices and dense rational linear algebra.

pub mod linalg;
mod matrix;
mod poly;

pub use matrix::{charpoly, PolyMatrix};
pub use poly::{poly_arith, vars, Monomial, MultiPoly, PolyOp, Vars};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Half-integer test: `2q` is an integer.
pub fn is_half_integer(q: &Rational) -> bool {
    is_integer(&(q * int(2)))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `num/den` rendering used by tables and error messages.
pub fn fmt_rational(q: &Rational) -> String {
    if is_integer(q) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_are_reduced() {
        let q = rat(6, -4);
        assert_eq!(q.numer(), &BigInt::from(-3));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7), Rational::zero());
        assert_eq!(rat(0, 7).denom(), &BigInt::one());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(8, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn half_integers() {
        assert!(is_half_integer(&rat(-1, 2)));
        assert!(is_half_integer(&int(3)));
        assert!(!is_half_integer(&rat(1, 3)));
        assert_eq!(fmt_rational(&rat(-3, 2)), "-3/2");
    }
}
