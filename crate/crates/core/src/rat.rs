//! Arbitrary-precision rational scalars.
//!
//! `Rat` is `num_rational::BigRational`, which already maintains the two
//! invariants we need (positive denominator, fully reduced after every
//! operation). This module adds the small constructors and integer
//! combinatorics helpers used throughout the crate.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Rational i/j. Panics if j = 0.
pub fn rat(i: i64, j: i64) -> Rat {
    Rat::new(BigInt::from(i), BigInt::from(j))
}

pub fn rat_int(i: i64) -> Rat {
    Rat::from_integer(BigInt::from(i))
}

pub fn big(i: i64) -> BigInt {
    BigInt::from(i)
}

pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient with integer (possibly negative) top, per the
/// falling-factorial convention: binom(t, d) = t(t-1)...(t-d+1)/d!.
pub fn binom(top: i64, d: i64) -> BigInt {
    if d < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for r in 0..d {
        num *= BigInt::from(top - r);
    }
    num / factorial(d as usize)
}

/// Multinomial (total; k_1,...,k_m) = total!/(k_1!...k_m!), zero unless the
/// parts sum to `total`.
pub fn multinomial(total: usize, parts: &[usize]) -> BigInt {
    if parts.iter().sum::<usize>() != total {
        return BigInt::zero();
    }
    let mut acc = factorial(total);
    for &k in parts {
        acc /= factorial(k);
    }
    acc
}

/// Integer power of a rational with possibly negative exponent.
/// Panics on 0^negative.
pub fn rat_pow(base: &Rat, e: i64) -> Rat {
    if e == 0 {
        return Rat::one();
    }
    let mut acc = Rat::one();
    let b = if e > 0 { base.clone() } else { base.recip() };
    for _ in 0..e.unsigned_abs() {
        acc *= &b;
    }
    acc
}

pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

/// All compositions of `total` into `parts` nonnegative integers.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0usize; parts];
    fn rec(i: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i + 1 == cur.len() {
            cur[i] = rem;
            out.push(cur.clone());
            return;
        }
        for v in 0..=rem {
            cur[i] = v;
            rec(i + 1, rem - v, cur, out);
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, total, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binom_negative_top() {
        // binom(-2, 3) = (-2)(-3)(-4)/6 = -4
        assert_eq!(binom(-2, 3), big(-4));
        assert_eq!(binom(3, 0), big(1));
        assert_eq!(binom(2, 3), big(0));
        assert_eq!(binom(-1, 2), big(1));
    }

    #[test]
    fn multinomial_basic() {
        assert_eq!(multinomial(3, &[1, 1, 1]), big(6));
        assert_eq!(multinomial(3, &[2, 1]), big(3));
        assert_eq!(multinomial(3, &[1, 1]), big(0));
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(0, 3).len(), 1);
        assert_eq!(compositions(2, 0).len(), 0);
    }
}
