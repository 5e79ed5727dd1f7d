//! Exact integer and rational arithmetic, with generalized binomial and
//! multinomial coefficients.
//!
//! Binomial coefficients follow the generating-function convention:
//! `binom_int(n, k)` is the coefficient of x^k in (1+x)^n for any signed n.
//! It vanishes for k < 0 and satisfies the reflection
//! C(-n, k) = (-1)^k C(n+k-1, n-1) for n > 0.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use crate::{Error, Result};

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = BigInt;

/// Exact rational, always stored reduced with a positive denominator.
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

pub fn rat_from_int(v: Int) -> Rat {
    Rat::from_integer(v)
}

/// n! as an exact integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Coefficient of x^k in (1+x)^n, for any signed n and k.
///
/// Computed as the falling factorial n(n-1)...(n-k+1) with an incremental
/// exact division by 1..k, which keeps every intermediate at binomial size.
pub fn binom_int(n: i64, k: i64) -> Int {
    if k < 0 {
        return Int::zero();
    }
    if n >= 0 && k > n {
        return Int::zero();
    }
    let mut acc = Int::one();
    for i in 0..k {
        // exact: acc * (n - i) equals C(n, i+1) * (i+1)
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// total! divided by the product of the part factorials, computed as a
/// telescoping product of binomial coefficients.
pub fn multinomial(total: i64, parts: &[i64]) -> Result<Int> {
    if total < 0 {
        return Err(Error::Negative {
            name: "total",
            value: total,
        });
    }
    if parts.iter().any(|&p| p < 0) || parts.iter().sum::<i64>() != total {
        return Err(Error::MultinomialParts);
    }
    let mut rest = total;
    let mut acc = Int::one();
    for &part in parts {
        acc *= binom_int(rest, part);
        rest -= part;
    }
    Ok(acc)
}

/// Trial-division primality check, used to validate prime-valued parameters.
pub fn is_prime(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// base^exp as an exact integer.
pub fn int_pow(base: i64, exp: u32) -> Int {
    Int::from(base).pow(exp)
}

/// Exact rational power with a signed exponent.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    let exp = i32::try_from(exp).expect("rational exponents are desk-scale");
    base.pow(exp)
}

/// Decimal interchange form of an integer.
pub fn int_string(v: &Int) -> String {
    v.to_string()
}

/// "num/den" interchange form, with the denominator omitted when it is 1.
pub fn rat_string(v: &Rat) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent oracle: Pascal triangle for n >= 0, reflection for n < 0.
    fn binom_oracle(n: i64, k: i64) -> Int {
        if k < 0 {
            return Int::zero();
        }
        if n < 0 {
            let v = binom_oracle(-n + k - 1, -n - 1);
            return if k % 2 == 0 { v } else { -v };
        }
        let mut row = vec![Int::one()];
        for _ in 0..n {
            let mut next = vec![Int::one()];
            for i in 1..row.len() {
                next.push(&row[i - 1] + &row[i]);
            }
            next.push(Int::one());
            row = next;
        }
        row.get(k as usize).cloned().unwrap_or_else(Int::zero)
    }

    #[test]
    fn binom_frozen_examples() {
        assert_eq!(binom_int(5, 2), int(10));
        assert_eq!(binom_oracle(5, 2), int(10));
        assert_eq!(binom_int(7, -1), int(0));
        assert_eq!(binom_int(-3, 2), int(6));
        assert_eq!(binom_oracle(-3, 2), int(6));
        assert_eq!(binom_int(0, 0), int(1));
        assert_eq!(binom_int(-1, 0), int(1));
        assert_eq!(binom_int(1000, 2), int(499500));
    }

    #[test]
    fn binom_matches_oracle() {
        for n in -12..=12 {
            for k in 0..=16 {
                assert_eq!(binom_int(n, k), binom_oracle(n, k), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn pascal_recurrence_window() {
        for n in -20..=20i64 {
            for k in 0..=25i64 {
                let lhs = binom_int(n, k);
                let rhs = binom_int(n - 1, k) + binom_int(n - 1, k - 1);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn vandermonde_window() {
        for n in 0..=15i64 {
            for kk in 0..=15i64 {
                for mm in 0..=15i64 {
                    let mut sum = Int::zero();
                    for j in 0..=mm {
                        sum += binom_int(n, j) * binom_int(kk, mm - j);
                    }
                    assert_eq!(sum, binom_int(n + kk, mm));
                }
            }
        }
    }

    #[test]
    fn reflection_window() {
        for n in 1..=15i64 {
            for k in 0..=15i64 {
                let lhs = binom_int(-n, k);
                let rhs = binom_int(n + k - 1, n - 1);
                let rhs = if k % 2 == 0 { rhs } else { -rhs };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn multinomial_frozen_examples() {
        assert_eq!(multinomial(2, &[1, 1]).unwrap(), int(2));
        assert_eq!(multinomial(4, &[2, 1, 1]).unwrap(), int(12));
        assert_eq!(multinomial(0, &[]).unwrap(), int(1));
    }

    #[test]
    fn multinomial_matches_factorials() {
        let cases: &[(i64, &[i64])] = &[
            (4, &[2, 1, 1]),
            (6, &[3, 3]),
            (7, &[1, 2, 4]),
            (9, &[0, 4, 5]),
            (5, &[5]),
        ];
        for (total, parts) in cases {
            let mut denom = Int::one();
            for &p in *parts {
                denom *= factorial(p as u64);
            }
            let expected = factorial(*total as u64) / denom;
            assert_eq!(multinomial(*total, parts).unwrap(), expected);
        }
    }

    #[test]
    fn multinomial_rejects_bad_parts() {
        assert_eq!(multinomial(3, &[2, 2]), Err(Error::MultinomialParts));
        assert_eq!(multinomial(3, &[4, -1]), Err(Error::MultinomialParts));
        assert!(matches!(multinomial(-1, &[]), Err(Error::Negative { .. })));
    }

    #[test]
    fn rational_canonical_form() {
        let r = Rat::new(int(6), int(-4));
        assert_eq!(r.numer(), &int(-3));
        assert_eq!(r.denom(), &int(2));
        assert_eq!(rat_string(&r), "-3/2");
        assert_eq!(rat_string(&Rat::new(int(8), int(4))), "2");
        assert!(Rat::new(int(8), int(4)).is_integer());
        assert_eq!(Rat::new(int(8), int(4)).to_integer(), int(2));
    }

    #[test]
    fn primality_small_values() {
        let primes: Vec<i64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            primes,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
    }

    proptest! {
        #[test]
        fn pascal_recurrence_random(n in -60i64..=60, k in 0i64..=40) {
            prop_assert_eq!(binom_int(n, k), binom_int(n - 1, k) + binom_int(n - 1, k - 1));
        }

        #[test]
        fn vandermonde_random(n in 0i64..=30, kk in 0i64..=30, mm in 0i64..=20) {
            let mut sum = Int::zero();
            for j in 0..=mm {
                sum += binom_int(n, j) * binom_int(kk, mm - j);
            }
            prop_assert_eq!(sum, binom_int(n + kk, mm));
        }
    }
}
